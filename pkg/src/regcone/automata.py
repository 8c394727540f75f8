"""Finite automata over explicit, ordered alphabets.

An :class:`Automaton` is an immutable nondeterministic acceptor with optional
epsilon moves.  Every operation in this module is a pure function returning a
new automaton.  Words are tuples of symbol names; the declared order of the
alphabet fixes the shortlex order used for every witness this package reports.
"""

from __future__ import annotations

import string
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

Word = tuple  # tuple[str, ...]

_FORBIDDEN = set(string.whitespace) | {"#"}


class InputError(ValueError):
    """Malformed user input: bad symbols, states, files or preconditions."""


def word(text: str | Sequence[str]) -> tuple[str, ...]:
    """Turn ``"x y^ y"`` (or an existing sequence of symbols) into a word."""
    if isinstance(text, str):
        return tuple(text.split())
    return tuple(text)


def format_word(w: Sequence[str], empty: str = "ε") -> str:
    return " ".join(w) if w else empty


def check_alphabet(symbols: Iterable[str]) -> tuple[str, ...]:
    symbols = tuple(symbols)
    if len(set(symbols)) != len(symbols):
        raise InputError(f"duplicate symbols in alphabet {symbols}")
    for s in symbols:
        if not isinstance(s, str) or not s:
            raise InputError(f"bad symbol {s!r}")
        if any(c in _FORBIDDEN or c not in string.printable for c in s):
            raise InputError(f"symbol {s!r} must be printable ASCII without whitespace or '#'")
    return symbols


@dataclass(frozen=True)
class Automaton:
    """Nondeterministic finite acceptor with epsilon moves.

    States are ``0 .. state_count - 1``.  The structure stores exactly what was
    built; nothing is normalised behind the caller's back.
    """

    alphabet: tuple[str, ...]
    state_count: int
    starts: frozenset = frozenset()
    accepts: frozenset = frozenset()
    transitions: frozenset = frozenset()
    epsilons: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "alphabet", check_alphabet(self.alphabet))
        object.__setattr__(self, "starts", frozenset(self.starts))
        object.__setattr__(self, "accepts", frozenset(self.accepts))
        object.__setattr__(self, "transitions", frozenset(tuple(t) for t in self.transitions))
        object.__setattr__(self, "epsilons", frozenset(tuple(e) for e in self.epsilons))
        n = self.state_count
        if not isinstance(n, int) or n < 0:
            raise InputError(f"state_count must be a non-negative integer, got {n!r}")

        def ok(q):
            return isinstance(q, int) and 0 <= q < n

        for q in self.starts | self.accepts:
            if not ok(q):
                raise InputError(f"state {q!r} out of range for {n} states")
        symbols = set(self.alphabet)
        for p, x, q in self.transitions:
            if not (ok(p) and ok(q)):
                raise InputError(f"transition {(p, x, q)} uses a state out of range")
            if x not in symbols:
                raise InputError(f"transition symbol {x!r} not in alphabet")
        for p, q in self.epsilons:
            if not (ok(p) and ok(q)):
                raise InputError(f"epsilon move {(p, q)} uses a state out of range")

    def __repr__(self):
        return (f"Automaton(alphabet={self.alphabet}, states={self.state_count}, "
                f"starts={sorted(self.starts)}, accepts={sorted(self.accepts)}, "
                f"transitions={len(self.transitions)}, epsilons={len(self.epsilons)})")

    # Derived lookup tables.  Built once per instance, always in sorted order so
    # traversals are reproducible regardless of hash seeds.

    @cached_property
    def delta(self) -> list[dict[str, tuple[int, ...]]]:
        table: list[dict[str, list[int]]] = [{} for _ in range(self.state_count)]
        for p, x, q in self.transitions:
            table[p].setdefault(x, []).append(q)
        return [{x: tuple(sorted(qs)) for x, qs in row.items()} for row in table]

    @cached_property
    def eps_succ(self) -> list[tuple[int, ...]]:
        table: list[list[int]] = [[] for _ in range(self.state_count)]
        for p, q in self.epsilons:
            table[p].append(q)
        return [tuple(sorted(r)) for r in table]

    @cached_property
    def closures(self) -> list[frozenset]:
        if not self.epsilons:
            return [frozenset((q,)) for q in range(self.state_count)]
        out = []
        for q in range(self.state_count):
            seen = {q}
            stack = [q]
            while stack:
                p = stack.pop()
                for r in self.eps_succ[p]:
                    if r not in seen:
                        seen.add(r)
                        stack.append(r)
            out.append(frozenset(seen))
        return out

    @property
    def is_deterministic(self) -> bool:
        return (len(self.starts) <= 1 and not self.epsilons
                and all(len(qs) == 1 for row in self.delta for qs in row.values()))

    def closure(self, states: Iterable[int]) -> frozenset:
        out: set[int] = set()
        for q in states:
            out |= self.closures[q]
        return frozenset(out)

    def step(self, states: Iterable[int], symbol: str) -> frozenset:
        nxt: set[int] = set()
        for q in states:
            nxt.update(self.delta[q].get(symbol, ()))
        return self.closure(nxt)

    def run(self, w: Sequence[str]) -> frozenset:
        """States reachable from the start states by reading ``w``."""
        _check_word(self, w)
        states = self.closure(self.starts)
        for x in w:
            if not states:
                break
            states = self.step(states, x)
        return states


def _check_word(a: Automaton, w: Sequence[str]):
    symbols = set(a.alphabet)
    for x in w:
        if x not in symbols:
            raise InputError(f"symbol {x!r} not in alphabet {a.alphabet}")


def _same_alphabet(a: Automaton, b: Automaton):
    if a.alphabet != b.alphabet:
        raise InputError(f"alphabet mismatch: {a.alphabet} vs {b.alphabet}")


# -- constructors ----------------------------------------------------------


def empty(alphabet: Sequence[str]) -> Automaton:
    return Automaton(tuple(alphabet), 0)


def epsilon_only(alphabet: Sequence[str]) -> Automaton:
    return Automaton(tuple(alphabet), 1, {0}, {0})


def universal(alphabet: Sequence[str]) -> Automaton:
    alphabet = tuple(alphabet)
    return Automaton(alphabet, 1, {0}, {0}, {(0, x, 0) for x in alphabet})


def from_words(alphabet: Sequence[str], words: Iterable[Sequence[str]]) -> Automaton:
    """Automaton accepting exactly the given finite set of words (a trie)."""
    alphabet = tuple(alphabet)
    children: list[dict[str, int]] = [{}]
    finals = set()
    for w in words:
        q = 0
        for x in word(w):
            if x not in children[q]:
                children[q][x] = len(children)
                children.append({})
            q = children[q][x]
        finals.add(q)
    trans = {(p, x, q) for p, row in enumerate(children) for x, q in row.items()}
    return Automaton(alphabet, len(children), {0}, finals, trans)


def with_alphabet(a: Automaton, alphabet: Sequence[str]) -> Automaton:
    """Same language, viewed over a larger alphabet."""
    alphabet = tuple(alphabet)
    missing = set(a.alphabet) - set(alphabet)
    if missing:
        raise InputError(f"new alphabet drops symbols {sorted(missing)}")
    return Automaton(alphabet, a.state_count, a.starts, a.accepts, a.transitions, a.epsilons)


# -- acceptance ------------------------------------------------------------


def accepts(a: Automaton, w: Sequence[str]) -> bool:
    return bool(a.run(word(w)) & a.accepts)


# -- structural helpers ----------------------------------------------------


def _renumber(a: Automaton, keep: Sequence[int]) -> Automaton:
    index = {q: i for i, q in enumerate(keep)}
    return Automaton(
        a.alphabet,
        len(keep),
        {index[q] for q in a.starts if q in index},
        {index[q] for q in a.accepts if q in index},
        {(index[p], x, index[q]) for p, x, q in a.transitions if p in index and q in index},
        {(index[p], index[q]) for p, q in a.epsilons if p in index and q in index},
    )


def _forward(a: Automaton, sources: Iterable[int]) -> set[int]:
    seen = set(sources)
    stack = list(seen)
    while stack:
        p = stack.pop()
        for qs in a.delta[p].values():
            for q in qs:
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        for q in a.eps_succ[p]:
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


def _backward(a: Automaton, targets: Iterable[int]) -> set[int]:
    pred: list[list[int]] = [[] for _ in range(a.state_count)]
    for p, _, q in a.transitions:
        pred[q].append(p)
    for p, q in a.epsilons:
        pred[q].append(p)
    seen = set(targets)
    stack = list(seen)
    while stack:
        q = stack.pop()
        for p in pred[q]:
            if p not in seen:
                seen.add(p)
                stack.append(p)
    return seen


def useful_states(a: Automaton) -> list[int]:
    return sorted(_forward(a, a.starts) & _backward(a, a.accepts))


def trim(a: Automaton) -> Automaton:
    """Drop states that are not both accessible and co-accessible."""
    keep = useful_states(a)
    if len(keep) == a.state_count:
        return a
    return _renumber(a, keep)


def remove_epsilons(a: Automaton) -> Automaton:
    if not a.epsilons:
        return a
    trans = set()
    accepting = set()
    for p in range(a.state_count):
        cl = a.closures[p]
        if cl & a.accepts:
            accepting.add(p)
        for q in cl:
            for x, rs in a.delta[q].items():
                for r in rs:
                    trans.add((p, x, r))
    return Automaton(a.alphabet, a.state_count, a.starts, accepting, trans)


def _shift(a: Automaton, k: int):
    trans = {(p + k, x, q + k) for p, x, q in a.transitions}
    eps = {(p + k, q + k) for p, q in a.epsilons}
    return trans, eps


# -- regular operations ----------------------------------------------------


def union(*automata: Automaton) -> Automaton:
    if not automata:
        raise InputError("union of nothing")
    first = automata[0]
    trans, eps, starts, finals = set(), set(), set(), set()
    k = 0
    for a in automata:
        _same_alphabet(first, a)
        t, e = _shift(a, k)
        trans |= t
        eps |= e
        starts |= {q + k for q in a.starts}
        finals |= {q + k for q in a.accepts}
        k += a.state_count
    return Automaton(first.alphabet, k, starts, finals, trans, eps)


def concat(a: Automaton, b: Automaton) -> Automaton:
    _same_alphabet(a, b)
    n = a.state_count
    tb, eb = _shift(b, n)
    eps = set(a.epsilons) | eb | {(p, q + n) for p in a.accepts for q in b.starts}
    return Automaton(a.alphabet, n + b.state_count, a.starts, {q + n for q in b.accepts},
                     a.transitions | tb, eps)


def star(a: Automaton) -> Automaton:
    n = a.state_count
    hub = n
    eps = set(a.epsilons) | {(hub, q) for q in a.starts} | {(q, hub) for q in a.accepts}
    return Automaton(a.alphabet, n + 1, {hub}, {hub}, a.transitions, eps)


def reverse(a: Automaton) -> Automaton:
    return Automaton(a.alphabet, a.state_count, a.accepts, a.starts,
                     {(q, x, p) for p, x, q in a.transitions},
                     {(q, p) for p, q in a.epsilons})


def intersect(a: Automaton, b: Automaton) -> Automaton:
    """Product construction restricted to reachable pairs."""
    _same_alphabet(a, b)
    a, b = remove_epsilons(a), remove_epsilons(b)
    index: dict[tuple[int, int], int] = {}
    queue = deque()
    for pair in sorted((p, q) for p in a.starts for q in b.starts):
        index[pair] = len(index)
        queue.append(pair)
    trans = set()
    while queue:
        p, q = queue.popleft()
        i = index[(p, q)]
        row_b = b.delta[q]
        for x in a.alphabet:
            ra = a.delta[p].get(x)
            rb = row_b.get(x)
            if not ra or not rb:
                continue
            for r in ra:
                for s in rb:
                    if (r, s) not in index:
                        index[(r, s)] = len(index)
                        queue.append((r, s))
                    trans.add((i, x, index[(r, s)]))
    starts = {index[(p, q)] for p in a.starts for q in b.starts}
    finals = {i for (p, q), i in index.items() if p in a.accepts and q in b.accepts}
    return trim(Automaton(a.alphabet, len(index), starts, finals, trans))


def determinize(a: Automaton, complete: bool = True) -> Automaton:
    """Subset construction.  With ``complete`` the empty subset is kept as a sink."""
    start = a.closure(a.starts)
    index = {start: 0}
    queue = deque([start])
    trans = set()
    while queue:
        S = queue.popleft()
        i = index[S]
        for x in a.alphabet:
            T = a.step(S, x)
            if not T and not complete:
                continue
            if T not in index:
                index[T] = len(index)
                queue.append(T)
            trans.add((i, x, index[T]))
    finals = {i for S, i in index.items() if S & a.accepts}
    return Automaton(a.alphabet, len(index), {0}, finals, trans)


def complement(a: Automaton, universe: Automaton | None = None) -> Automaton:
    """All words over the alphabet not in ``a``, optionally cut down to ``universe``."""
    d = determinize(a, complete=True)
    flipped = Automaton(d.alphabet, d.state_count, d.starts,
                        set(range(d.state_count)) - d.accepts, d.transitions)
    if universe is not None:
        return intersect(flipped, universe)
    return flipped


def difference(a: Automaton, b: Automaton) -> Automaton:
    return intersect(a, complement(b))


def minimal_dfa(a: Automaton) -> Automaton:
    """Canonical trim minimal DFA.

    States are numbered in breadth-first order from the start state, following
    symbols in alphabet order, so equal languages give equal automata.
    """
    d = determinize(trim(a), complete=True)
    n = d.state_count
    succ = [[d.delta[q][x][0] for x in d.alphabet] for q in range(n)]
    block = [1 if q in d.accepts else 0 for q in range(n)]
    count = len(set(block))
    while True:
        sigs: dict[tuple, int] = {}
        new = []
        for q in range(n):
            sig = (block[q], tuple(block[r] for r in succ[q]))
            new.append(sigs.setdefault(sig, len(sigs)))
        block = new
        if len(sigs) == count:
            break
        count = len(sigs)

    # a block is dead if no accepting block is reachable from it
    m = count
    bsucc = [None] * m
    bfinal = [False] * m
    for q in range(n):
        bsucc[block[q]] = [block[r] for r in succ[q]]
        bfinal[block[q]] |= q in d.accepts
    live = {b for b in range(m) if bfinal[b]}
    changed = True
    while changed:
        changed = False
        for b in range(m):
            if b not in live and any(c in live for c in bsucc[b]):
                live.add(b)
                changed = True

    start = block[0]
    if start not in live:
        return empty(a.alphabet)
    order = {start: 0}
    queue = deque([start])
    trans = set()
    while queue:
        b = queue.popleft()
        for x, c in zip(d.alphabet, bsucc[b]):
            if c not in live:
                continue
            if c not in order:
                order[c] = len(order)
                queue.append(c)
            trans.add((order[b], x, order[c]))
    finals = {order[b] for b in order if bfinal[b]}
    return Automaton(a.alphabet, len(order), {0}, finals, trans)


def equivalent(a: Automaton, b: Automaton) -> bool:
    _same_alphabet(a, b)
    return minimal_dfa(a) == minimal_dfa(b)


def is_subset(a: Automaton, b: Automaton) -> bool:
    return is_empty(difference(a, b))


# -- homomorphisms ---------------------------------------------------------


def _check_morphism(f: Mapping[str, Sequence[str]], domain: Sequence[str], codomain: Sequence[str]):
    targets = set(codomain)
    out = {}
    for x in domain:
        if x not in f:
            raise InputError(f"homomorphism undefined on {x!r}")
        image = word(f[x])
        for y in image:
            if y not in targets:
                raise InputError(f"image of {x!r} uses {y!r}, not in target alphabet")
        out[x] = image
    return out


def hom_image(a: Automaton, f: Mapping[str, Sequence[str]], target: Sequence[str]) -> Automaton:
    """Automaton for ``{f*(w) : w in L(a)}`` over the ``target`` alphabet."""
    f = _check_morphism(f, a.alphabet, target)
    n = a.state_count
    trans, eps = set(), set(a.epsilons)
    for p, x, q in sorted(a.transitions):
        image = f[x]
        if not image:
            eps.add((p, q))
            continue
        prev = p
        for y in image[:-1]:
            trans.add((prev, y, n))
            prev = n
            n += 1
        trans.add((prev, image[-1], q))
    return Automaton(tuple(target), n, a.starts, a.accepts, trans, eps)


def hom_preimage(a: Automaton, f: Mapping[str, Sequence[str]], source: Sequence[str]) -> Automaton:
    """Automaton for ``{w over source : f*(w) in L(a)}``."""
    f = _check_morphism(f, source, a.alphabet)
    trans = set()
    for p in range(a.state_count):
        here = a.closures[p]
        for x in source:
            states = here
            for y in f[x]:
                if not states:
                    break
                states = a.step(states, y)
            for q in states:
                trans.add((p, x, q))
    finals = {p for p in range(a.state_count) if a.closures[p] & a.accepts}
    return Automaton(tuple(source), a.state_count, a.starts, finals, trans)


def prefix_closure(a: Automaton) -> Automaton:
    """``Pref(L(a))``: keep useful states only and make all of them accepting."""
    t = trim(a)
    return Automaton(t.alphabet, t.state_count, t.starts, set(range(t.state_count)),
                     t.transitions, t.epsilons)


# -- witnesses -------------------------------------------------------------


def is_empty(a: Automaton) -> bool:
    return not (_forward(a, a.starts) & a.accepts)


def shortest_word(a: Automaton) -> tuple[str, ...] | None:
    """Shortlex-least accepted word, or ``None`` for the empty language."""
    a = remove_epsilons(a)
    parent: dict[int, tuple[int | None, str | None]] = {}
    queue = deque()
    for q in sorted(a.starts):
        parent[q] = (None, None)
        queue.append(q)
    while queue:
        p = queue.popleft()
        if p in a.accepts:
            out = []
            while parent[p][0] is not None:
                p, x = parent[p]
                out.append(x)
            return tuple(reversed(out))
        for x in a.alphabet:
            for q in a.delta[p].get(x, ()):
                if q not in parent:
                    parent[q] = (p, x)
                    queue.append(q)
    return None


def enumerate_words(a: Automaton, max_len: int) -> list[tuple[str, ...]]:
    """All accepted words of length at most ``max_len`` in shortlex order."""
    d = minimal_dfa(a)
    if not d.starts:
        return []
    out = []
    layer = [((), 0)]
    for length in range(max_len + 1):
        out.extend(w for w, q in layer if q in d.accepts)
        if length == max_len:
            break
        layer = [(w + (x,), d.delta[q][x][0])
                 for w, q in layer for x in d.alphabet if x in d.delta[q]]
    return out


def count_words(a: Automaton, max_len: int) -> list[int]:
    """Number of accepted words of each length ``0 .. max_len``."""
    d = minimal_dfa(a)
    if not d.starts:
        return [0] * (max_len + 1)
    counts = {0: 1}
    out = []
    for length in range(max_len + 1):
        out.append(sum(c for q, c in counts.items() if q in d.accepts))
        nxt: dict[int, int] = {}
        for q, c in counts.items():
            for qs in d.delta[q].values():
                nxt[qs[0]] = nxt.get(qs[0], 0) + c
        counts = nxt
    return out


# -- text format -----------------------------------------------------------

_KEYS = ("alphabet", "states", "start", "accept", "trans", "eps")


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InputError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_automaton(text: str) -> Automaton:
    """Parse the line-oriented automaton format.

    ::

        alphabet: x x^ y y^
        states: 4
        start: 0
        accept: 3
        trans: 0 x 1
        eps: 1 2

    ``start:`` and ``accept:`` may list several states and may repeat.
    """
    alphabet = None
    count = None
    starts, finals, trans, eps = set(), set(), set(), set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in _KEYS:
            raise InputError(f"line {lineno}: unknown key {key!r}")
        fields = rest.split()
        if key == "alphabet":
            if alphabet is not None:
                raise InputError(f"line {lineno}: alphabet declared twice")
            alphabet = check_alphabet(fields)
        elif key == "states":
            if count is not None or len(fields) != 1:
                raise InputError(f"line {lineno}: expected a single 'states:' value")
            (count,) = _ints(fields, lineno)
        elif key == "start":
            starts.update(_ints(fields, lineno))
        elif key == "accept":
            finals.update(_ints(fields, lineno))
        elif key == "trans":
            if len(fields) != 3:
                raise InputError(f"line {lineno}: expected 'trans: p symbol q'")
            p, q = _ints([fields[0], fields[2]], lineno)
            trans.add((p, fields[1], q))
        elif key == "eps":
            if len(fields) != 2:
                raise InputError(f"line {lineno}: expected 'eps: p q'")
            p, q = _ints(fields, lineno)
            eps.add((p, q))
    if alphabet is None:
        raise InputError("missing 'alphabet:' line")
    if count is None:
        raise InputError("missing 'states:' line")
    return Automaton(alphabet, count, starts, finals, trans, eps)


def format_automaton(a: Automaton) -> str:
    order = {x: i for i, x in enumerate(a.alphabet)}
    lines = [
        "alphabet: " + " ".join(a.alphabet),
        f"states: {a.state_count}",
        "start: " + " ".join(map(str, sorted(a.starts))),
        "accept: " + " ".join(map(str, sorted(a.accepts))),
    ]
    for p, x, q in sorted(a.transitions, key=lambda t: (t[0], order[t[1]], t[2])):
        lines.append(f"trans: {p} {x} {q}")
    for p, q in sorted(a.epsilons):
        lines.append(f"eps: {p} {q}")
    return "\n".join(line.rstrip() for line in lines) + "\n"


def load_automaton(path) -> Automaton:
    with open(path) as fh:
        return parse_automaton(fh.read())


def save_automaton(a: Automaton, path):
    with open(path, "w") as fh:
        fh.write(format_automaton(a))
