"""Free groups, free reduction and rational subsets.

Words over a group alphabet ``X = Y ⊔ Y⁻¹`` use the token ``g^`` for the formal
inverse of generator ``g``.  A :class:`ReducedLang` wraps an automaton whose
language consists of freely reduced words only; since reduced words are unique
normal forms, set operations on such languages are set operations on subsets
of the free group.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from . import automata as fa
from .automata import Automaton, InputError, word

INV = "^"


def inverse_symbol(x: str) -> str:
    return x[:-1] if x.endswith(INV) else x + INV


@dataclass(frozen=True)
class GroupAlphabet:
    """Full alphabet ``X = Y ⊔ Y⁻¹`` in a fixed symbol order.

    Build one from generator names with :meth:`of`, or from a declared symbol
    list (as found in automaton files) with the plain constructor, which checks
    that the involution ``g <-> g^`` is complete.
    """

    symbols: tuple[str, ...]

    def __post_init__(self):
        symbols = fa.check_alphabet(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        present = set(symbols)
        for s in symbols:
            base = s[:-1] if s.endswith(INV) else s
            if not base or base.endswith(INV):
                raise InputError(f"bad group symbol {s!r}: generator names may not end in '^'")
            if inverse_symbol(s) not in present:
                raise InputError(f"symbol {s!r} has no formal inverse {inverse_symbol(s)!r} in the alphabet")

    @classmethod
    def of(cls, generators: str | Sequence[str]) -> GroupAlphabet:
        gens = word(generators)
        return cls(tuple(s for g in gens for s in (g, g + INV)))

    @cached_property
    def generators(self) -> tuple[str, ...]:
        return tuple(s for s in self.symbols if not s.endswith(INV))

    @property
    def rank(self) -> int:
        return len(self.generators)

    def inverse(self, x: str) -> str:
        return inverse_symbol(x)

    @cached_property
    def involution(self) -> dict[str, tuple[str, ...]]:
        return {x: (inverse_symbol(x),) for x in self.symbols}

    def check_word(self, w: Sequence[str]):
        present = set(self.symbols)
        for x in w:
            if x not in present:
                raise InputError(f"symbol {x!r} not in group alphabet {self.symbols}")

    def check_automaton(self, a: Automaton):
        if set(a.alphabet) != set(self.symbols):
            raise InputError(f"automaton alphabet {a.alphabet} is not the group alphabet {self.symbols}")


def free_reduce(w: Sequence[str]) -> tuple[str, ...]:
    """Cancel adjacent ``x x^`` pairs until none are left."""
    stack: list[str] = []
    for x in word(w):
        if stack and stack[-1] == inverse_symbol(x):
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def is_reduced(w: Sequence[str]) -> bool:
    return all(b != inverse_symbol(a) for a, b in zip(w, w[1:]))


def word_inverse(w: Sequence[str]) -> tuple[str, ...]:
    return tuple(inverse_symbol(x) for x in reversed(word(w)))


@dataclass(frozen=True, order=True)
class GroupElement:
    """Element of a free group, stored as its freely reduced word."""

    word: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "word", free_reduce(self.word))

    def __mul__(self, other: GroupElement) -> GroupElement:
        return GroupElement(self.word + other.word)

    def __len__(self):
        return len(self.word)

    def __str__(self):
        return fa.format_word(self.word, empty="e")

    def inverse(self) -> GroupElement:
        return GroupElement(word_inverse(self.word))

    @property
    def is_identity(self) -> bool:
        return not self.word


def elem_inverse(g: GroupElement) -> GroupElement:
    return g.inverse()


def reduced_universe(X: GroupAlphabet) -> Automaton:
    """All freely reduced words: state 0 is initial, state ``i+1`` remembers letter ``i``."""
    index = {x: i + 1 for i, x in enumerate(X.symbols)}
    trans = set()
    for x, j in index.items():
        trans.add((0, x, j))
        for y, i in index.items():
            if y != inverse_symbol(x):
                trans.add((i, x, j))
    n = len(index) + 1
    return Automaton(X.symbols, n, {0}, set(range(n)), trans)


def reduced_words(X: GroupAlphabet, max_len: int) -> list[tuple[str, ...]]:
    """Reduced words of length ≤ ``max_len`` in shortlex order."""
    out = [()]
    layer = [()]
    for _ in range(max_len):
        layer = [w + (x,) for w in layer for x in X.symbols
                 if not w or w[-1] != inverse_symbol(x)]
        out.extend(layer)
    return out


# -- Benois saturation -----------------------------------------------------


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def cancellation_relation(a: Automaton, X: GroupAlphabet) -> list[int]:
    """``R[p]`` is the bitmask of states ``q`` reachable from ``p`` by a word reducing to ε.

    Least fixpoint of: reflexivity, epsilon moves, composition, and wrapping
    ``p -x-> r ⇒ s -x^-> q`` around a pair ``(r, s)`` already in the relation.
    """
    n = a.state_count
    succ = {x: [0] * n for x in X.symbols}
    for p, x, q in a.transitions:
        succ[x][p] |= 1 << q
    R = [1 << p for p in range(n)]
    for p, q in a.epsilons:
        R[p] |= 1 << q
    while True:
        for k in range(n):
            bit = 1 << k
            row = R[k]
            for p in range(n):
                if R[p] & bit:
                    R[p] |= row
        changed = False
        for x in X.symbols:
            fwd, back = succ[x], succ[inverse_symbol(x)]
            if not any(fwd) or not any(back):
                continue
            # image[r] = states reachable from r by (ε-reducing word) then x^
            image = [0] * n
            for r in range(n):
                m = 0
                for s in _bits(R[r]):
                    m |= back[s]
                image[r] = m
            for p in range(n):
                add = 0
                for r in _bits(fwd[p]):
                    add |= image[r]
                if add & ~R[p]:
                    R[p] |= add
                    changed = True
        if not changed:
            return R


def saturate(a: Automaton, X: GroupAlphabet) -> Automaton:
    """``a`` plus an epsilon move for every cancellation pair."""
    R = cancellation_relation(a, X)
    eps = set(a.epsilons)
    for p in range(a.state_count):
        eps.update((p, q) for q in _bits(R[p]) if q != p)
    return Automaton(a.alphabet, a.state_count, a.starts, a.accepts, a.transitions, eps)


@dataclass(frozen=True)
class ReducedLang:
    """A regular language of freely reduced words over ``alphabet``."""

    automaton: Automaton
    alphabet: GroupAlphabet

    @classmethod
    def certify(cls, a: Automaton, X: GroupAlphabet) -> ReducedLang:
        """Wrap ``a`` after checking that it accepts reduced words only."""
        X.check_automaton(a)
        a = fa.with_alphabet(a, X.symbols)
        bad = fa.shortest_word(fa.difference(a, reduced_universe(X)))
        if bad is not None:
            raise InputError(f"automaton accepts the unreduced word {fa.format_word(bad)!r}")
        return cls(a, X)

    @classmethod
    def from_elements(cls, X: GroupAlphabet, elements: Iterable[Sequence[str]]) -> ReducedLang:
        return cls(fa.from_words(X.symbols, [free_reduce(w) for w in elements]), X)

    def __contains__(self, g) -> bool:
        return element_in(self, g)

    def shortest(self) -> tuple[str, ...] | None:
        return fa.shortest_word(self.automaton)

    def elements(self, max_len: int) -> list[tuple[str, ...]]:
        return fa.enumerate_words(self.automaton, max_len)


def benois_reduce(a: Automaton, X: GroupAlphabet) -> ReducedLang:
    """Language of the free reductions of the words of ``a``."""
    X.check_automaton(a)
    a = fa.with_alphabet(a, X.symbols)
    sat = saturate(fa.trim(a), X)
    return ReducedLang(fa.minimal_dfa(fa.intersect(sat, reduced_universe(X))), X)


def full_group(X: GroupAlphabet) -> ReducedLang:
    return ReducedLang(reduced_universe(X), X)


def _same(S: ReducedLang, T: ReducedLang):
    if S.alphabet != T.alphabet:
        raise InputError(f"group alphabet mismatch: {S.alphabet.symbols} vs {T.alphabet.symbols}")


def inverse_language(a: Automaton, X: GroupAlphabet) -> Automaton:
    """Formal inverses of the words of ``a`` (not reduced)."""
    return fa.hom_image(fa.reverse(a), X.involution, X.symbols)


def rs_inverse(S: ReducedLang) -> ReducedLang:
    return benois_reduce(inverse_language(S.automaton, S.alphabet), S.alphabet)


def rs_product(S: ReducedLang, T: ReducedLang) -> ReducedLang:
    _same(S, T)
    return benois_reduce(fa.concat(S.automaton, T.automaton), S.alphabet)


def rs_union(*langs: ReducedLang) -> ReducedLang:
    for T in langs[1:]:
        _same(langs[0], T)
    return ReducedLang(fa.minimal_dfa(fa.union(*(S.automaton for S in langs))), langs[0].alphabet)


def rs_intersect(S: ReducedLang, T: ReducedLang) -> ReducedLang:
    _same(S, T)
    return ReducedLang(fa.minimal_dfa(fa.intersect(S.automaton, T.automaton)), S.alphabet)


def rs_complement(S: ReducedLang) -> ReducedLang:
    universe = reduced_universe(S.alphabet)
    return ReducedLang(fa.minimal_dfa(fa.complement(S.automaton, universe)), S.alphabet)


def rs_subset(S: ReducedLang, T: ReducedLang) -> bool:
    _same(S, T)
    return fa.is_subset(S.automaton, T.automaton)


def rs_equal(S: ReducedLang, T: ReducedLang) -> bool:
    _same(S, T)
    return fa.equivalent(S.automaton, T.automaton)


def element_in(S: ReducedLang, g) -> bool:
    w = g.word if isinstance(g, GroupElement) else free_reduce(g)
    S.alphabet.check_word(w)
    return fa.accepts(S.automaton, w)


def translate(a: Automaton, source: GroupAlphabet, assignment: Mapping[str, Sequence[str]],
              target: GroupAlphabet) -> Automaton:
    """Rewrite ``a`` through ``generator -> word over target``; inverses follow formally."""
    f = {}
    for g in source.generators:
        if g not in assignment:
            raise InputError(f"no image for generator {g!r}")
        image = word(assignment[g])
        target.check_word(image)
        f[g] = image
        f[inverse_symbol(g)] = word_inverse(image)
    source.check_automaton(a)
    return fa.hom_image(a, f, target.symbols)


# -- word retrieval --------------------------------------------------------


def _sort_key(X: GroupAlphabet):
    rank = {x: i for i, x in enumerate(X.symbols)}
    return lambda w: tuple(rank[x] for x in w)


def cancellation_words(a: Automaton, X: GroupAlphabet) -> dict[tuple[int, int], tuple[str, ...]]:
    """Shortest word reducing to ε along a path ``p -> q``, for every such pair.

    Knuth's generalisation of Dijkstra's algorithm over the grammar
    ``D -> ε | D D | x D x^``: combining never shortens, so the first time a
    pair is popped its word is a shortest one.
    """
    key = _sort_key(X)
    n = a.state_count
    pred = {x: [[] for _ in range(n)] for x in X.symbols}
    succ = {x: [[] for _ in range(n)] for x in X.symbols}
    for p, x, q in sorted(a.transitions):
        pred[x][q].append(p)
        succ[x][p].append(q)
    heap = [(0, (), p, p, ()) for p in range(n)]
    heap += [(0, (), p, q, ()) for p, q in sorted(a.epsilons)]
    heapq.heapify(heap)
    done: dict[tuple[int, int], tuple[str, ...]] = {}
    out_of: list[list[int]] = [[] for _ in range(n)]
    into: list[list[int]] = [[] for _ in range(n)]

    def push(p, q, w):
        if (p, q) not in done:
            heapq.heappush(heap, (len(w), key(w), p, q, w))

    while heap:
        _, _, p, q, w = heapq.heappop(heap)
        if (p, q) in done:
            continue
        done[(p, q)] = w
        out_of[p].append(q)
        into[q].append(p)
        for r in out_of[q]:
            push(p, r, w + done[(q, r)])
        for o in into[p]:
            push(o, q, done[(o, p)] + w)
        for x in X.symbols:
            xi = inverse_symbol(x)
            for o in pred[x][p]:
                for z in succ[xi][q]:
                    push(o, z, (x,) + w + (xi,))
    return done


def find_word(a: Automaton, X: GroupAlphabet, g, cancel=None) -> tuple[str, ...] | None:
    """A shortest word of ``L(a)`` whose free reduction is ``g``, or ``None``.

    Every such word interleaves the letters of ``g`` with factors reducing to
    ε, so the search runs over (state, position in g) and jumps across
    cancellation pairs at the cost of their shortest word.  ``cancel`` may pass
    a precomputed :func:`cancellation_words` table.
    """
    target = g.word if isinstance(g, GroupElement) else free_reduce(g)
    X.check_word(target)
    if cancel is None:
        cancel = cancellation_words(a, X)
    jumps: list[list[tuple[int, tuple[str, ...]]]] = [[] for _ in range(a.state_count)]
    for (p, q), w in sorted(cancel.items()):
        if p != q:
            jumps[p].append((q, w))
    key = _sort_key(X)
    m = len(target)
    seen: dict[tuple[int, int], tuple[str, ...]] = {}
    heap = [(0, (), s, 0, ()) for s in sorted(a.starts)]
    heapq.heapify(heap)
    while heap:
        _, _, q, i, w = heapq.heappop(heap)
        if (q, i) in seen:
            continue
        seen[(q, i)] = w
        if i == m and q in a.accepts:
            return w
        if i < m:
            for r in a.delta[q].get(target[i], ()):
                if (r, i + 1) not in seen:
                    nw = w + (target[i],)
                    heapq.heappush(heap, (len(nw), key(nw), r, i + 1, nw))
        for r, c in jumps[q]:
            if (r, i) not in seen:
                nw = w + c
                heapq.heappush(heap, (len(nw), key(nw), r, i, nw))
    return None
