import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regcone import automata as fa
from regcone.automata import Automaton, InputError, word
from regcone.conecheck import (
    ConeCandidate,
    ConeVerdict,
    Inconclusive,
    RefuteConfig,
    SearchExhausted,
    Violation,
    check_cone_axioms,
    cone_to_full_language,
    cover_by_prefixes,
    format_verdict,
    prefix_for_element,
    pumping_witness,
    syllable_position,
    syllables,
    verify_verdict,
)
from regcone.freegroup import (
    GroupAlphabet,
    benois_reduce,
    element_in,
    free_reduce,
    reduced_universe,
    word_inverse,
)

from candidates import COMPLETION, cone_like
from conftest import nonempty_reduced, plus, starting_with
from oracles import ball_cone_failures, random_automaton

X1 = GroupAlphabet.of("x")
X2 = GroupAlphabet.of("x y")
AB = GroupAlphabet.of("a b")


def independent_check(a, X, v: ConeVerdict):
    """Witness re-check through free_reduce, accepts and element_in only."""
    P = benois_reduce(a, X)
    ws = v.witnesses
    if v.violation is Violation.IDENTITY:
        return fa.accepts(a, ws[0]) and free_reduce(ws[0]) == ()
    if v.violation is Violation.DISJOINTNESS:
        return (all(fa.accepts(a, w) for w in ws) and free_reduce(ws[0]) != ()
                and free_reduce(ws[0] + ws[1]) == ())
    if v.violation is Violation.TOTALITY:
        g = ws[0]
        return g != () and not element_in(P, g) and not element_in(P, word_inverse(g))
    if v.violation is Violation.SEMIGROUP:
        return all(fa.accepts(a, w) for w in ws) and not element_in(P, ws[0] + ws[1])
    return False


def test_rank_one_cone():
    a = plus(X1.symbols, ("x",))
    v = check_cone_axioms(a, X1)
    assert v.is_cone and v.status == "IsCone"
    assert format_verdict(v) == "verdict: IsCone\n"


def test_nonempty_reduced_words_fail_disjointness():
    v = check_cone_axioms(nonempty_reduced(X2), X2)
    assert v.violation is Violation.DISJOINTNESS
    assert v.witnesses == (("x",), ("x^",))
    assert format_verdict(v) == "verdict: NotCone\nviolation: DisjointnessFail\nwitness: x\nwitness: x^\n"


def test_starting_with_x():
    # disjointness is checked before totality, and x y x^ is represented with its inverse
    a = starting_with(X2, ("x",))
    v = check_cone_axioms(a, X2)
    assert v.violation is Violation.DISJOINTNESS
    assert v.element == word("x y x^")
    assert v.witnesses == (word("x y x^"), word("x y^ x^"))
    P = benois_reduce(a, X2)
    assert not element_in(P, ("y",)) and not element_in(P, ("y^",))
    assert verify_verdict(a, X2, v)


def test_identity_and_semigroup_failures():
    a = fa.from_words(X2.symbols, [("x", "x^")])
    v = check_cone_axioms(a, X2)
    assert v.violation is Violation.IDENTITY and v.witnesses == (("x", "x^"),)
    # x, x^3, x^4, ... together with x^-2: x · x^-2 = x^-1 escapes
    b = fa.union(fa.from_words(X1.symbols, [("x",)]),
                 fa.concat(fa.from_words(X1.symbols, [("x",) * 3]), fa.star(fa.from_words(X1.symbols, [("x",)]))))
    b = fa.union(b, fa.from_words(X1.symbols, [("x^", "x^")]))
    v = check_cone_axioms(b, X1)
    assert v.violation is Violation.SEMIGROUP
    assert v.element == ("x^",)
    assert v.witnesses == (("x",), ("x^", "x^"))
    assert verify_verdict(b, X1, v) and independent_check(b, X1, v)


def test_totality_failure_in_rank_one():
    a = fa.from_words(X1.symbols, [("x",)])
    v = check_cone_axioms(a, X1)
    assert v.violation is Violation.TOTALITY and v.witnesses == (("x", "x"),)


def test_alphabet_must_match():
    with pytest.raises(InputError):
        check_cone_axioms(fa.universal(("x", "y", "y^")), X2)
    with pytest.raises(InputError):
        GroupAlphabet(("x", "y", "y^"))


def test_forged_verdicts_are_rejected():
    a = starting_with(X2, ("x",))
    assert not verify_verdict(a, X2, ConeVerdict(Violation.DISJOINTNESS, (("x",), ("x^",))))
    assert not verify_verdict(a, X2, ConeVerdict(Violation.TOTALITY, (("x",),)))
    assert not verify_verdict(a, X2, ConeVerdict(Violation.IDENTITY, (("x", "x^"),)))
    assert not verify_verdict(a, X2, ConeVerdict(Violation.SEMIGROUP, (("x",), ("x",))))


def test_random_verdicts_verify_and_agree_with_ball():
    rng = random.Random(21)
    for _ in range(60):
        a = random_automaton(rng, X2.symbols, 4, density=0.2)
        v = check_cone_axioms(a, X2)
        assert not v.is_cone
        assert verify_verdict(a, X2, v) and independent_check(a, X2, v)
        P = benois_reduce(a, X2)
        fails = ball_cone_failures(lambda g: g in P, X2.symbols, 3)
        assert fails, "a NotCone language should already fail inside the radius-3 ball here"


def test_curated_candidates_are_refuted():
    for name, a in cone_like().items():
        v = check_cone_axioms(a, X2)
        assert not v.is_cone, name
        assert verify_verdict(a, X2, v), name


# -- prefixes --------------------------------------------------------------


def test_prefix_examples():
    w = word("a a^ a b b^ b")
    assert prefix_for_element(w, 1, False, AB) == word("a a^ a")
    assert prefix_for_element(w, 1, True, AB) == w
    assert prefix_for_element(word("a b b^ a b"), 1, False, AB) == word("a b b^ a")
    assert prefix_for_element((), 1, False, AB) == ()
    with pytest.raises(InputError):
        prefix_for_element(w, 2, False, AB)
    with pytest.raises(InputError):
        prefix_for_element(("a",), 1, False, GroupAlphabet.of("a"))


def test_syllables():
    assert syllables(word("a a b^ a"), ["a"]) == [("A", ("a", "a")), ("B", ("b^",)), ("A", ("a",))]
    assert syllable_position(word("a a b^ a"), ["a"]) == (2, False)
    assert syllable_position(word("b a"), ["a"]) == (2, False)
    assert syllable_position(word("b"), ["a"]) == (1, True)


def expected_partial(w, i, include_b):
    syl = syllables(free_reduce(w), ["a"])
    k = (2 * i - 1 if not syl or syl[0][0] == "A" else 2 * i - 2) + int(include_b)
    return free_reduce(sum((s for _, s in syl[:k]), ()))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.sampled_from(AB.symbols), max_size=10).map(tuple), st.booleans())
def test_prefix_property(w, include_b):
    syl = syllables(free_reduce(w), ["a"])
    k = len(syl)
    m = 1 if not k else (k + 1) // 2 if syl[0][0] == "A" else k // 2 + 1
    prefix_values = {free_reduce(w[:n]) for n in range(len(w) + 1)}
    for i in range(1, m + 1):
        p = prefix_for_element(w, i, include_b, AB)
        target = expected_partial(w, i, include_b)
        assert w[:len(p)] == p
        assert free_reduce(p) == target
        assert target in prefix_values
    with pytest.raises(InputError):
        prefix_for_element(w, m + 1, include_b, AB)


# -- covering and pumping ---------------------------------------------------


def test_cover_examples():
    assert cover_by_prefixes(plus(X1.symbols, ("x",)), X1, ()) == ()
    a = starting_with(X2, ("y", "x"))
    assert cover_by_prefixes(a, X2, ("y",)) == ("y",)
    v = cover_by_prefixes(nonempty_reduced(X2), X2, ("x",))
    assert isinstance(v, ConeVerdict) and v.violation is Violation.DISJOINTNESS
    assert verify_verdict(nonempty_reduced(X2), X2, v)
    v = cover_by_prefixes(starting_with(X2, ("x",)), X2, ("y",))
    assert v.violation is Violation.TOTALITY and v.origin == "cover"


def test_cover_returns_prefixes_of_accepted_words():
    a = starting_with(X2, ("x",))
    pre = fa.prefix_closure(a)
    for g in (("x",), ("x", "y"), ("x", "x", "y^")):
        p = cover_by_prefixes(a, X2, g)
        if isinstance(p, ConeVerdict):
            assert verify_verdict(a, X2, p)
        else:
            assert fa.accepts(pre, p) and free_reduce(p) == g


def test_realize_raises_when_nothing_reduces_to_target():
    c = ConeCandidate(fa.from_words(X2.symbols, [("x",)]), X2)
    with pytest.raises(SearchExhausted):
        c.realize(("y",))


def test_pumping_rank_one_is_inconclusive():
    with pytest.raises(Inconclusive):
        pumping_witness(plus(X1.symbols, ("x",)), X1)


def test_pumping_starting_with_x_short_circuits():
    a = starting_with(X2, ("x",))
    v = pumping_witness(a, X2)
    assert v.origin in ("pumping", "cover")
    assert verify_verdict(a, X2, v) and independent_check(a, X2, v)


def test_pumping_completion_certificate():
    v = pumping_witness(COMPLETION, X2, RefuteConfig(max_ball_radius=1))
    assert v.origin == "completion"
    assert v.violation is Violation.DISJOINTNESS
    assert v.witnesses == (word("x y^ x^ y"), word("y^ x y x^"))
    assert independent_check(COMPLETION, X2, v)


def test_pumping_on_random_automata():
    rng = random.Random(4)
    outcomes = set()
    for _ in range(60):
        a = random_automaton(rng, X2.symbols, 3, density=0.25)
        try:
            v = pumping_witness(a, X2)
        except Inconclusive:
            outcomes.add("inconclusive")
            continue
        outcomes.add(v.origin)
        assert independent_check(a, X2, v)
        if v.violation is Violation.DISJOINTNESS:
            assert free_reduce(v.witnesses[0]) == word_inverse(free_reduce(v.witnesses[1]))
    assert outcomes


def test_refute_config_validation():
    with pytest.raises(InputError):
        RefuteConfig(max_ball_radius=0)
    with pytest.raises(InputError):
        RefuteConfig(max_t_search_length=0)


def test_cone_to_full_language():
    a = plus(X1.symbols, ("x",))
    full = cone_to_full_language(a, X1)
    x, xi = fa.from_words(X1.symbols, [("x",)]), fa.from_words(X1.symbols, [("x^",)])
    assert fa.equivalent(full, fa.union(fa.star(x), fa.concat(xi, fa.star(xi))))
    assert fa.equivalent(benois_reduce(full, X1).automaton, reduced_universe(X1))
    assert fa.equivalent(cone_to_full_language(fa.empty(X2.symbols), X2), fa.epsilon_only(X2.symbols))


def test_factor_split_must_be_generators():
    with pytest.raises(InputError):
        ConeCandidate(fa.empty(X2.symbols), X2, ["z"])
    with pytest.raises(InputError):
        Automaton(X2.symbols, 1, {0}, {0}, {(0, "z", 0)})
