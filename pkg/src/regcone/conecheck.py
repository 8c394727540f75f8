"""Deciding whether a regular language is a positive cone of a free group.

:func:`check_cone_axioms` is the exact decision procedure.  The remaining
operations turn the impossibility argument for free products into procedures
that produce concrete certificates: every prefix of a cone language covers a
group element (:func:`cover_by_prefixes`, built on
:func:`prefix_for_element`), and a short completion of such a prefix yields two
accepted words representing mutually inverse elements
(:func:`pumping_witness`).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from . import automata as fa
from .automata import Automaton, InputError, format_word, word
from .freegroup import (
    GroupAlphabet,
    ReducedLang,
    benois_reduce,
    cancellation_words,
    element_in,
    find_word,
    free_reduce,
    inverse_language,
    reduced_words,
    rs_complement,
    rs_intersect,
    rs_inverse,
    rs_product,
    rs_union,
    word_inverse,
)


class SearchExhausted(RuntimeError):
    """No accepted word reduces to the requested element."""


class Inconclusive(RuntimeError):
    """A bounded refutation search ended without a certificate."""


class Violation(enum.Enum):
    IDENTITY = "IdentityInCone"
    DISJOINTNESS = "DisjointnessFail"
    TOTALITY = "TotalityFail"
    SEMIGROUP = "SemigroupFail"


@dataclass(frozen=True)
class ConeVerdict:
    """Outcome of a cone check.

    ``witnesses`` holds accepted words of the language (identity, disjointness
    and semigroup failures) or, for a totality failure, the uncovered reduced
    word.  ``element`` is the reduced group element the failure is about.
    """

    violation: Violation | None = None
    witnesses: tuple[tuple[str, ...], ...] = ()
    element: tuple[str, ...] | None = None
    origin: str = "axioms"

    @property
    def is_cone(self) -> bool:
        return self.violation is None

    @property
    def status(self) -> str:
        return "IsCone" if self.is_cone else "NotCone"


IS_CONE = ConeVerdict()


def format_verdict(v: ConeVerdict) -> str:
    lines = [f"verdict: {v.status}"]
    if not v.is_cone:
        lines.append(f"violation: {v.violation.value}")
        lines.extend(f"witness: {format_word(w)}" for w in v.witnesses)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class RefuteConfig:
    max_ball_radius: int = 3
    max_t_search_length: int = 6

    def __post_init__(self):
        if self.max_ball_radius < 1 or self.max_t_search_length < 1:
            raise InputError("refutation bounds must be at least 1")


class ConeCandidate:
    """A language claimed to be a positive cone, with its derived data cached.

    ``factor_a`` names the generators of the first free factor; the rest form
    the second.  By default the first generator splits off, ``F_k = Z * F_(k-1)``.
    """

    def __init__(self, a: Automaton, X: GroupAlphabet, factor_a: Sequence[str] | None = None):
        X.check_automaton(a)
        self.automaton = fa.with_alphabet(a, X.symbols)
        self.alphabet = X
        self.factor_a = tuple(factor_a) if factor_a else X.generators[:1]
        unknown = set(self.factor_a) - set(X.generators)
        if unknown:
            raise InputError(f"factor generators {sorted(unknown)} are not generators of {X.symbols}")

    @cached_property
    def cone(self) -> ReducedLang:
        return benois_reduce(self.automaton, self.alphabet)

    @cached_property
    def inverse_cone(self) -> ReducedLang:
        return rs_inverse(self.cone)

    @cached_property
    def cancellation(self):
        return cancellation_words(self.automaton, self.alphabet)

    def positive(self, g) -> bool:
        return element_in(self.cone, g)

    def realize(self, g) -> tuple[str, ...]:
        w = find_word(self.automaton, self.alphabet, g, cancel=self.cancellation)
        if w is None:
            raise SearchExhausted(f"no accepted word reduces to {format_word(free_reduce(g))}")
        return w


def _candidate(a, X, factor_a=None, candidate=None) -> ConeCandidate:
    return candidate if candidate is not None else ConeCandidate(a, X, factor_a)


def _identity(c: ConeCandidate, origin="axioms") -> ConeVerdict:
    return ConeVerdict(Violation.IDENTITY, (c.realize(()),), (), origin)


def _disjoint(c: ConeCandidate, g, origin="axioms", first=None) -> ConeVerdict:
    g = free_reduce(g)
    w1 = first if first is not None else c.realize(g)
    return ConeVerdict(Violation.DISJOINTNESS, (w1, c.realize(word_inverse(g))), g, origin)


def _uncovered(g, origin="axioms") -> ConeVerdict:
    g = free_reduce(g)
    return ConeVerdict(Violation.TOTALITY, (g,), g, origin)


def check_cone_axioms(a: Automaton, X: GroupAlphabet, candidate: ConeCandidate | None = None) -> ConeVerdict:
    """Decide whether ``a`` represents a positive cone of the free group on ``X``.

    Checks, in order: the identity is not represented; no element is
    represented together with its inverse; every nontrivial element or its
    inverse is represented; products of represented elements are represented.
    The first failure is reported with its shortlex-least group element.
    """
    c = _candidate(a, X, candidate=candidate)
    P, Pinv = c.cone, c.inverse_cone
    if c.positive(()):
        return _identity(c)

    both = rs_intersect(P, Pinv).shortest()
    if both is not None:
        return _disjoint(c, both)

    one = ReducedLang.from_elements(X, [()])
    missing = rs_complement(rs_union(P, Pinv, one)).shortest()
    if missing is not None:
        return _uncovered(missing)

    escaped = rs_intersect(rs_product(P, P), rs_complement(P)).shortest()
    if escaped is not None:
        # split escaped = g1 g2 with both factors positive: g1 ∈ P ∩ escaped·P⁻¹
        single = ReducedLang.from_elements(X, [escaped])
        g1 = rs_intersect(P, rs_product(single, Pinv)).shortest()
        g2 = free_reduce(word_inverse(g1) + escaped)
        return ConeVerdict(Violation.SEMIGROUP, (c.realize(g1), c.realize(g2)), escaped)
    return IS_CONE


def verify_verdict(a: Automaton, X: GroupAlphabet, v: ConeVerdict) -> bool:
    """Re-check a NotCone verdict using only free reduction and membership."""
    if v.is_cone:
        return True
    P = benois_reduce(a, X)
    ws = v.witnesses
    if v.violation is Violation.IDENTITY:
        return len(ws) == 1 and fa.accepts(a, ws[0]) and free_reduce(ws[0]) == ()
    if v.violation is Violation.DISJOINTNESS:
        if len(ws) != 2 or not all(fa.accepts(a, w) for w in ws):
            return False
        g, h = free_reduce(ws[0]), free_reduce(ws[1])
        return bool(g) and g == word_inverse(h)
    if v.violation is Violation.TOTALITY:
        (g,) = ws
        return (bool(g) and free_reduce(g) == tuple(g)
                and not element_in(P, g) and not element_in(P, word_inverse(g)))
    if v.violation is Violation.SEMIGROUP:
        if len(ws) != 2 or not all(fa.accepts(a, w) for w in ws):
            return False
        return not element_in(P, ws[0] + ws[1])
    return False


# -- free product structure ------------------------------------------------


def _factor(x: str, factor_a: set[str]) -> str:
    return "A" if x.rstrip("^") in factor_a else "B"


def syllables(g, factor_a: Sequence[str]) -> list[tuple[str, tuple[str, ...]]]:
    """Syllables of a reduced word as ``(factor, subword)`` pairs."""
    A = set(factor_a)
    out: list[tuple[str, list[str]]] = []
    for x in free_reduce(g):
        f = _factor(x, A)
        if out and out[-1][0] == f:
            out[-1][1].append(x)
        else:
            out.append((f, [x]))
    return [(f, tuple(s)) for f, s in out]


def _syllable_count(first: str, i: int, include_b: bool) -> int:
    # a_1 is the identity when the factorization starts in B
    return (2 * i - 1 if first == "A" else 2 * i - 2) + int(include_b)


def syllable_position(g, factor_a: Sequence[str]) -> tuple[int, bool]:
    """``(i, include_b)`` such that ``g = a_1 b_1 ... a_i b̂_i`` exactly."""
    syl = syllables(g, factor_a)
    if not syl:
        return 1, False
    k = len(syl)
    if syl[0][0] == "A":
        return (k + 1) // 2, k % 2 == 0
    return k // 2 + 1, k % 2 == 1


def prefix_for_element(w: Sequence[str], i: int, include_b: bool, X: GroupAlphabet,
                       factor_a: Sequence[str] | None = None) -> tuple[str, ...]:
    """Prefix of ``w`` representing ``a_1 b_1 ... a_i b̂_i`` of the reduced factorization of ``w``.

    ``w`` is cut into maximal blocks from one factor.  The blocks are evaluated
    and merged exactly as in free-product reduction: trivial blocks vanish and
    neighbours from the same factor combine.  Each surviving syllable remembers
    the last block that contributed to it, and the prefix ends there.
    """
    w = word(w)
    X.check_word(w)
    A = set(factor_a) if factor_a else {X.generators[0]}
    if not A or not set(X.generators) - A or A - set(X.generators):
        raise InputError("prefix_for_element needs a split of the generators into two nonempty factors")

    blocks: list[tuple[str, int, int]] = []
    for pos, x in enumerate(w):
        f = _factor(x, A)
        if blocks and blocks[-1][0] == f:
            blocks[-1] = (f, blocks[-1][1], pos + 1)
        else:
            blocks.append((f, pos, pos + 1))

    stack: list[list] = []  # [factor, reduced value, end of last contributing block]
    for f, lo, hi in blocks:
        value = free_reduce(w[lo:hi])
        if not value:
            continue
        if stack and stack[-1][0] == f:
            merged = free_reduce(stack[-1][1] + value)
            if merged:
                stack[-1] = [f, merged, hi]
            else:
                stack.pop()
        else:
            stack.append([f, value, hi])

    first = stack[0][0] if stack else "A"
    k_total = len(stack)
    m = max(1, (k_total + 1) // 2 if first == "A" else k_total // 2 + 1)
    if not 1 <= i <= m:
        raise InputError(f"syllable index {i} out of range 1..{m}")
    k = min(_syllable_count(first, i, include_b), k_total)
    return w[:stack[k - 1][2]] if k > 0 else ()


def _pick_letter(g: tuple[str, ...], X: GroupAlphabet, factor_a: Sequence[str]) -> str:
    """A generator from the factor opposite the last syllable of ``g``."""
    if not g:
        return X.symbols[0]
    A = set(factor_a)
    other_b = [y for y in X.generators if y not in A]
    if _factor(g[-1], A) == "A":
        if not other_b:
            raise InputError("rank-1 alphabet has no second free factor")
        return other_b[0]
    return factor_a[0]


def _positive_conjugate(c: ConeCandidate, g: tuple[str, ...], origin: str):
    """Return ``(conjugate, None)`` for the positive one of g·x·g⁻¹, g·x⁻¹·g⁻¹, or ``(None, verdict)``."""
    x = _pick_letter(g, c.alphabet, c.factor_a)
    plus = free_reduce(g + (x,) + word_inverse(g))
    minus = word_inverse(plus)
    ip, im = c.positive(plus), c.positive(minus)
    if ip and im:
        return None, _disjoint(c, plus, origin)
    if not ip and not im:
        return None, _uncovered(plus, origin)
    return (plus if ip else minus), None


def cover_by_prefixes(a: Automaton, X: GroupAlphabet, g, factor_a: Sequence[str] | None = None,
                      candidate: ConeCandidate | None = None):
    """A word of ``Pref(L(a))`` representing ``g``, or a NotCone verdict.

    Of the conjugates ``g x g⁻¹`` and ``g x⁻¹ g⁻¹`` exactly one must be
    represented by the language.  An accepted word for it is retrieved and cut
    at the syllable boundary realising ``g``.  If neither or both conjugates
    are represented, that pair is returned as a certificate instead.
    """
    c = _candidate(a, X, factor_a, candidate)
    g = free_reduce(g)
    X.check_word(g)
    conj, verdict = _positive_conjugate(c, g, "cover")
    if verdict is not None:
        return verdict
    w = c.realize(conj)
    if not g:
        return ()
    i, include_b = syllable_position(g, c.factor_a)
    return prefix_for_element(w, i, include_b, X, c.factor_a)


def pumping_witness(a: Automaton, X: GroupAlphabet, cfg: RefuteConfig = RefuteConfig(),
                    factor_a: Sequence[str] | None = None,
                    candidate: ConeCandidate | None = None) -> ConeVerdict:
    """Constructive refutation of a claimed cone language.

    Candidates ``t`` are positive conjugates of growing length.  Once one
    dominates every element of the ball of radius ``min(k - 1, max_ball_radius)``
    (``k`` states), a prefix ``w`` representing ``t⁻¹`` is completed to an
    accepted word ``wv`` with ``|v| ≤ k - 1``.  Then ``wv`` represents
    ``t⁻¹·v`` while dominance says ``v⁻¹·t`` is positive too: the two accepted
    words form a disjointness certificate.  Inconsistencies met on the way are
    returned as certificates immediately.  Raises :class:`Inconclusive` when
    the bounds run out.
    """
    c = _candidate(a, X, factor_a, candidate)
    if X.rank < 2:
        raise Inconclusive("rank 1 free group is not a free product; nothing to pump")
    if c.positive(()):
        return _identity(c, "pumping")

    k = c.automaton.state_count
    radius = min(k - 1, cfg.max_ball_radius)
    ball = reduced_words(X, radius)

    for g in reduced_words(X, cfg.max_t_search_length):
        t, verdict = _positive_conjugate(c, g, "pumping")
        if verdict is not None:
            return verdict
        # t dominates b when b⁻¹t is positive; only this direction is tested so
        # the contradiction surfaces at the completion step
        if not all(c.positive(word_inverse(b) + t) for b in ball):
            continue

        prefix = cover_by_prefixes(c.automaton, X, word_inverse(t), candidate=c)
        if isinstance(prefix, ConeVerdict):
            return prefix
        reached = c.automaton.run(prefix)
        tail = Automaton(X.symbols, k, reached, c.automaton.accepts,
                         c.automaton.transitions, c.automaton.epsilons)
        v = fa.shortest_word(tail)
        accepted = prefix + v
        value = free_reduce(accepted)
        if c.positive(word_inverse(value)):
            return _disjoint(c, value, "completion", first=accepted)
        # v left the ball we checked; try a larger t
    raise Inconclusive(f"no dominating element found among conjugates of length ≤ {cfg.max_t_search_length}")


def cone_to_full_language(a: Automaton, X: GroupAlphabet) -> Automaton:
    """``L ∪ {ε} ∪ L⁻¹``: represents the whole group when ``L`` is a cone language."""
    X.check_automaton(a)
    a = fa.with_alphabet(a, X.symbols)
    return fa.union(a, fa.epsilon_only(X.symbols), inverse_language(a, X))
