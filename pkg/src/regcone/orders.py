"""Order oracles: the lexicographic order on Z² and orders read off a cone language."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

from .automata import Automaton, InputError
from .freegroup import GroupAlphabet, GroupElement, ReducedLang, element_in


class Order(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"
    INCONSISTENT = "Inconsistent"


Z2 = GroupAlphabet.of("x y")


def z2_lex_compare(g: tuple[int, int], h: tuple[int, int]) -> Order:
    n, m = h[0] - g[0], h[1] - g[1]
    if n == 0 and m == 0:
        return Order.EQUAL
    if n >= 1 or (n == 0 and m >= 1):
        return Order.LESS
    return Order.GREATER


def z2_cone_language() -> Automaton:
    """``{x^n y^m : n ≥ 1, m ∈ Z} ∪ {y^m : m ≥ 1}`` over ``x x^ y y^``."""
    trans = {
        (0, "x", 1), (1, "x", 1),
        (1, "y", 2), (2, "y", 2),
        (1, "y^", 3), (3, "y^", 3),
        (0, "y", 4), (4, "y", 4),
    }
    return Automaton(Z2.symbols, 5, {0}, {1, 2, 3, 4}, trans)


_STEP = {"x": (1, 0), "x^": (-1, 0), "y": (0, 1), "y^": (0, -1)}


def abelianize(w) -> tuple[int, int]:
    n = m = 0
    for s in w:
        dn, dm = _STEP[s]
        n += dn
        m += dm
    return n, m


def z2_image(a: Automaton, max_len: int) -> set[tuple[int, int]]:
    """Abelianised images of all accepted words of length ≤ ``max_len``.

    Runs over (state, lattice point) pairs layer by layer, so the cost does not
    depend on how many words the automaton accepts.
    """
    unknown = set(a.alphabet) - set(_STEP)
    if unknown:
        raise InputError(f"symbols {sorted(unknown)} are not in the x/y group alphabet")
    frontier = {(q, (0, 0)) for q in a.closure(a.starts)}
    seen = set(frontier)
    for _ in range(max_len):
        nxt = set()
        for q, (n, m) in frontier:
            for s, targets in a.delta[q].items():
                dn, dm = _STEP[s]
                for r in a.closure(targets):
                    item = (r, (n + dn, m + dm))
                    if item not in seen:
                        nxt.add(item)
        seen |= nxt
        frontier = nxt
    return {pt for q, pt in seen if q in a.accepts}


def _lattice_order(radius: int):
    pts = [(n, m) for n in range(-radius, radius + 1) for m in range(-radius, radius + 1)]
    return sorted(pts, key=lambda p: (abs(p[0]) + abs(p[1]), -p[0], -p[1]))


def z2_bounded_verify(a: Automaton, radius: int) -> tuple[bool, tuple[int, int] | None]:
    """Check that ``a`` represents the lexicographic cone on the box ``|n|, |m| ≤ radius``.

    Words up to length ``2 * radius + 2`` are considered.  Lattice points are
    visited by L1 norm, then by decreasing coordinates; the first point where
    membership disagrees with positivity is returned.
    """
    image = z2_image(a, 2 * radius + 2)
    for pt in _lattice_order(radius):
        positive = z2_lex_compare((0, 0), pt) is Order.LESS
        if (pt in image) != positive:
            return False, pt
    return True, None


def derived_compare(P: ReducedLang, g, h) -> Order:
    g, h = GroupElement(_w(g)), GroupElement(_w(h))
    if g == h:
        return Order.EQUAL
    up = element_in(P, g.inverse() * h)
    down = element_in(P, h.inverse() * g)
    if up and not down:
        return Order.LESS
    if down and not up:
        return Order.GREATER
    return Order.INCONSISTENT


def _w(g):
    return g.word if isinstance(g, GroupElement) else g


@dataclass(frozen=True)
class OrderOracle:
    compare: Callable[[object, object], Order]
    backing: str
    cone: ReducedLang | None = None


def z2_lex_order() -> OrderOracle:
    return OrderOracle(z2_lex_compare, "Z2Lex")


def derived_order(P: ReducedLang) -> OrderOracle:
    return OrderOracle(lambda g, h: derived_compare(P, g, h), "DerivedFromCone", P)
