import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regcone import automata as fa
from regcone.automata import Automaton, InputError

from oracles import all_words

AB = ("a", "b")
WORDS6 = list(all_words(AB, 6))


@st.composite
def small_automata(draw, symbols=AB, max_states=3):
    n = draw(st.integers(1, max_states))
    states = st.integers(0, n - 1)
    trans = draw(st.sets(st.tuples(states, st.sampled_from(symbols), states), max_size=3 * n))
    eps = draw(st.sets(st.tuples(states, states).filter(lambda e: e[0] != e[1]), max_size=n))
    starts = draw(st.sets(states, min_size=1, max_size=n))
    accepts = draw(st.sets(states, max_size=n))
    return Automaton(tuple(symbols), n, starts, accepts, trans, eps)


def brute(a):
    return {w for w in WORDS6 if fa.accepts(a, w)}


@settings(max_examples=60, deadline=None)
@given(small_automata(), small_automata())
def test_boolean_ops_agree_with_membership(a, b):
    A, B = brute(a), brute(b)
    assert brute(fa.intersect(a, b)) == A & B
    assert brute(fa.union(a, b)) == A | B
    assert brute(fa.complement(a)) == set(WORDS6) - A
    assert brute(fa.difference(a, b)) == A - B
    assert fa.equivalent(fa.complement(fa.union(a, b)), fa.intersect(fa.complement(a), fa.complement(b)))
    assert fa.equivalent(fa.complement(fa.intersect(a, b)), fa.union(fa.complement(a), fa.complement(b)))


@settings(max_examples=60, deadline=None)
@given(small_automata(), small_automata())
def test_concat_and_reverse_by_membership(a, b):
    A, B = brute(a), brute(b)
    cat = {u + v for u in A for v in B if len(u + v) <= 6}
    assert brute(fa.concat(a, b)) == cat
    assert brute(fa.reverse(a)) == {w[::-1] for w in A}


@settings(max_examples=60, deadline=None)
@given(small_automata())
def test_kleene_and_closure_laws(a):
    assert fa.equivalent(fa.reverse(fa.reverse(a)), a)
    assert fa.equivalent(fa.star(fa.star(a)), fa.star(a))
    p = fa.prefix_closure(a)
    assert fa.equivalent(fa.prefix_closure(p), p)
    A = brute(a)
    for w in brute(p):
        extensions = fa.concat(fa.from_words(AB, [w]), fa.universal(AB))
        assert not fa.is_empty(fa.intersect(extensions, a))
    for w in A:
        for k in range(len(w) + 1):
            assert fa.accepts(p, w[:k])


@settings(max_examples=60, deadline=None)
@given(small_automata())
def test_minimal_dfa_is_canonical_and_equivalent(a):
    m = fa.minimal_dfa(a)
    assert m.is_deterministic
    assert brute(m) == brute(a)
    assert fa.minimal_dfa(m) == m
    assert fa.minimal_dfa(fa.reverse(fa.reverse(a))) == m
    assert brute(fa.determinize(a)) == brute(a)
    assert brute(fa.trim(a)) == brute(a)
    assert brute(fa.remove_epsilons(a)) == brute(a)


@settings(max_examples=60, deadline=None)
@given(small_automata())
def test_shortest_word_is_shortlex_least(a):
    w = fa.shortest_word(a)
    words = fa.enumerate_words(a, 6)
    if w is None:
        assert fa.is_empty(a) and not words
        return
    assert fa.accepts(a, w)
    if words:
        assert w == words[0]
    order = {s: i for i, s in enumerate(AB)}
    assert words == sorted(words, key=lambda u: (len(u), [order[s] for s in u]))
    assert fa.count_words(a, 6) == [sum(1 for u in words if len(u) == n) for n in range(7)]


@settings(max_examples=40, deadline=None)
@given(small_automata())
def test_hom_round_trip_for_injective_renaming(a):
    f = {"a": ("c",), "b": ("d",)}
    img = fa.hom_image(a, f, ("c", "d"))
    back = fa.hom_preimage(img, f, AB)
    assert fa.equivalent(back, a)


def test_hom_image_and_preimage_with_erasing():
    a = fa.from_words(AB, [("a", "b", "a"), ("b",)])
    f = {"a": ("c", "c"), "b": ()}
    img = fa.hom_image(a, f, ("c",))
    assert sorted(fa.enumerate_words(img, 6)) == [(), ("c",) * 4]
    pre = fa.hom_preimage(fa.from_words(("c",), [("c", "c")]), f, AB)
    assert fa.accepts(pre, ("b", "a", "b", "b"))
    assert not fa.accepts(pre, ("a", "a"))


def test_spec_examples():
    ab = fa.from_words(AB, [("a", "b")])
    assert fa.accepts(ab, ("a", "b"))
    assert not fa.accepts(ab, ("a",))
    assert fa.shortest_word(fa.empty(AB)) is None
    u = fa.universal(AB)
    assert fa.count_words(u, 3) == [1, 2, 4, 8]
    assert fa.equivalent(fa.complement(fa.complement(ab)), ab)
    assert fa.shortest_word(fa.epsilon_only(AB)) == ()


def test_random_equivalence_decisions():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(1, 3)
        trans = {(p, x, q) for p in range(n) for x in AB for q in range(n) if rng.random() < 0.35}
        a = Automaton(AB, n, {0}, {q for q in range(n) if rng.random() < 0.5}, trans)
        b = fa.union(a, fa.from_words(AB, [("a", "a", "b")]))
        assert fa.equivalent(a, b) == fa.accepts(a, ("a", "a", "b"))
        assert fa.is_subset(a, b)


def test_validation_errors():
    with pytest.raises(InputError):
        Automaton(AB, 2, {0}, {3}, set())
    with pytest.raises(InputError):
        Automaton(AB, 1, {0}, {0}, {(0, "z", 0)})
    with pytest.raises(InputError):
        fa.accepts(fa.universal(AB), ("z",))
    with pytest.raises(InputError):
        fa.intersect(fa.universal(AB), fa.universal(("a",)))
    with pytest.raises(InputError):
        fa.check_alphabet(["a", "a"])


def test_text_format_round_trip(tmp_path):
    a = Automaton(AB, 3, {0}, {2}, {(0, "a", 1), (1, "b", 2), (2, "a", 0)}, {(1, 0)})
    text = fa.format_automaton(a)
    again = fa.parse_automaton(text)
    assert again == a
    fa.save_automaton(a, tmp_path / "a.aut")
    assert fa.equivalent(fa.load_automaton(tmp_path / "a.aut"), a)


def test_parser_accepts_comments_and_rejects_junk():
    text = """
    # two letters
    alphabet: a b
    states: 2
    start: 0
    accept: 1   # final
    trans: 0 a 1
    trans: 1 b 1
    """
    a = fa.parse_automaton(text)
    assert fa.accepts(a, ("a", "b", "b"))
    for bad in ("alphabet: a\nstates: 1\nstart: 0\naccept: 0\ncolour: red\n",
                "alphabet: a\nstates: 1\nstart: 4\naccept: 0\n",
                "alphabet: a\nstates: x\nstart: 0\naccept: 0\n",
                "alphabet: a a\nstates: 1\nstart: 0\naccept: 0\n",
                "states: 1\nstart: 0\naccept: 0\n"):
        with pytest.raises(InputError):
            fa.parse_automaton(bad)
