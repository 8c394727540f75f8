"""Graph products of groups and their geodesic words.

A word over the union of the vertex alphabets is geodesic exactly when every
projection ``π_v`` lands in ``Geo_v ($ Geo_v)*``.  ``π_v`` keeps the letters of
vertex ``v``, erases letters of neighbouring vertices (they commute past) and
turns every other letter into the blocking marker ``$``.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

import networkx as nx

from . import automata as fa
from .automata import Automaton, InputError, word
from .freegroup import GroupAlphabet, inverse_symbol, reduced_universe, word_inverse

MARKER = "$"


def raag_vertex_geodesics(name: str) -> Automaton:
    """Geodesics of the infinite cyclic group on ``name``: ``a^n`` and ``(a^)^n``."""
    X = GroupAlphabet.of(name)
    a, ai = X.symbols
    return Automaton(X.symbols, 3, {0}, {0, 1, 2},
                     {(0, a, 1), (1, a, 1), (0, ai, 2), (2, ai, 2)})


@dataclass(frozen=True, eq=False)
class GraphPresentation:
    """Simple graph with a vertex group (alphabet + geodesic automaton) at each vertex."""

    vertices: tuple[str, ...]
    edges: frozenset
    vertex_alphabets: Mapping[str, GroupAlphabet]
    vertex_geodesics: Mapping[str, Automaton] = field(default_factory=dict)

    def __post_init__(self):
        vertices = tuple(self.vertices)
        if len(set(vertices)) != len(vertices):
            raise InputError("duplicate vertex names")
        object.__setattr__(self, "vertices", vertices)
        edges = set()
        for e in self.edges:
            pair = frozenset(e)
            ends = tuple(e)
            if len(ends) != 2 or len(pair) != 2:
                raise InputError(f"bad edge {ends}: edges join two distinct vertices")
            for v in pair:
                if v not in vertices:
                    raise InputError(f"edge {ends} mentions unknown vertex {v!r}")
            edges.add(pair)
        object.__setattr__(self, "edges", frozenset(edges))

        owner: dict[str, str] = {}
        for v in vertices:
            if v not in self.vertex_alphabets:
                raise InputError(f"no generators for vertex {v!r}")
            for s in self.vertex_alphabets[v].symbols:
                if s in owner:
                    raise InputError(f"generator {s!r} used by both {owner[s]!r} and {v!r}")
                if s == MARKER:
                    raise InputError(f"{MARKER!r} is reserved")
                owner[s] = v
        object.__setattr__(self, "_owner", owner)

        geos = dict(self.vertex_geodesics)
        for v in vertices:
            X = self.vertex_alphabets[v]
            geo = geos.setdefault(v, reduced_universe(X))
            if set(geo.alphabet) != set(X.symbols):
                raise InputError(f"geodesic automaton for {v!r} is over {geo.alphabet}, not {X.symbols}")
            geo = fa.with_alphabet(geo, X.symbols)
            if not fa.accepts(geo, ()):
                raise InputError(f"geodesics of {v!r} must contain the empty word")
            if not fa.equivalent(fa.prefix_closure(geo), geo):
                raise InputError(f"geodesics of {v!r} are not prefix-closed")
            geos[v] = geo
        object.__setattr__(self, "vertex_geodesics", geos)

    @cached_property
    def alphabet(self) -> GroupAlphabet:
        return GroupAlphabet(tuple(s for v in self.vertices for s in self.vertex_alphabets[v].symbols))

    @cached_property
    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(tuple(sorted(e)) for e in self.edges)
        return g

    def owner(self, symbol: str) -> str:
        try:
            return self._owner[symbol]
        except KeyError:
            raise InputError(f"symbol {symbol!r} belongs to no vertex") from None

    def adjacent(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self.edges

    def check_vertex(self, v: str):
        if v not in self.vertex_alphabets:
            raise InputError(f"unknown vertex {v!r}")

    @cached_property
    def blocks(self) -> dict[str, Automaton]:
        """``Geo_v ($ Geo_v)*`` for every vertex, over ``Y_v^± ∪ {$}``."""
        out = {}
        for v in self.vertices:
            sigma = self.vertex_alphabets[v].symbols + (MARKER,)
            geo = fa.with_alphabet(self.vertex_geodesics[v], sigma)
            sep = fa.from_words(sigma, [(MARKER,)])
            out[v] = fa.minimal_dfa(fa.concat(geo, fa.star(fa.concat(sep, geo))))
        return out


def raag_presentation(vertices: Sequence[str], edges, generators: Sequence[str] | None = None) -> GraphPresentation:
    """Right-angled Artin group: one infinite cyclic vertex group per vertex."""
    vertices = tuple(vertices)
    generators = tuple(generators) if generators else tuple(f"a{i + 1}" for i in range(len(vertices)))
    return GraphPresentation(
        vertices,
        frozenset(frozenset(e) for e in edges),
        {v: GroupAlphabet.of(g) for v, g in zip(vertices, generators)},
        {v: raag_vertex_geodesics(g) for v, g in zip(vertices, generators)},
    )


def graph_distance(G: GraphPresentation, s: str, t: str) -> float:
    G.check_vertex(s)
    G.check_vertex(t)
    try:
        return nx.shortest_path_length(G.graph, s, t)
    except nx.NetworkXNoPath:
        return math.inf


def diameter(G: GraphPresentation) -> float:
    if not nx.is_connected(G.graph):
        return math.inf
    return nx.diameter(G.graph)


def projection_map(G: GraphPresentation, v: str) -> dict[str, tuple[str, ...]]:
    G.check_vertex(v)
    out = {}
    for s in G.alphabet.symbols:
        u = G.owner(s)
        if u == v:
            out[s] = (s,)
        elif G.adjacent(u, v):
            out[s] = ()
        else:
            out[s] = (MARKER,)
    return out


def pi_projection(G: GraphPresentation, v: str, w: Sequence[str]) -> tuple[str, ...]:
    f = projection_map(G, v)
    out: list[str] = []
    for s in word(w):
        if s not in f:
            G.owner(s)
        out.extend(f[s])
    return tuple(out)


def is_geodesic(G: GraphPresentation, w: Sequence[str]) -> bool:
    w = word(w)
    return all(fa.accepts(G.blocks[v], pi_projection(G, v, w)) for v in G.vertices)


def geo_automaton(G: GraphPresentation) -> Automaton:
    """Automaton accepting exactly the geodesic words of the graph product."""
    X = G.alphabet.symbols
    out = fa.universal(X)
    for v in G.vertices:
        pre = fa.hom_preimage(G.blocks[v], projection_map(G, v), X)
        out = fa.minimal_dfa(fa.intersect(out, pre))
    return out


def theorem2_witness(G: GraphPresentation, w: Sequence[str], t: str, u: str, x: str, y: str):
    """Two geodesics ``w x y x⁻¹ w⁻¹`` and ``w x y⁻¹ x⁻¹ w⁻¹`` representing mutually inverse elements.

    ``t`` and ``u`` must be at distance at least 3, and ``x``, ``y`` letters
    of ``t`` and ``u`` that are nontrivial geodesics.  When ``π_t(w)`` ends in
    a letter of ``t`` the roles of ``(t, x)`` and ``(u, y)`` are exchanged, so
    that ``π_t(w)`` ends in ``$`` or is empty.
    """
    w = word(w)
    G.alphabet.check_word(w)
    if graph_distance(G, t, u) < 3:
        raise InputError(f"vertices {t!r} and {u!r} are at distance {graph_distance(G, t, u)} < 3")
    for vertex, letter in ((t, x), (u, y)):
        if letter not in G.vertex_alphabets[vertex].symbols:
            raise InputError(f"{letter!r} is not a letter of vertex {vertex!r}")
        if not fa.accepts(G.vertex_geodesics[vertex], (letter,)):
            raise InputError(f"{letter!r} is not a geodesic of vertex {vertex!r}")
    if not is_geodesic(G, w):
        raise InputError(f"{fa.format_word(w)!r} is not geodesic")
    proj = pi_projection(G, t, w)
    if proj and proj[-1] != MARKER:
        t, u, x, y = u, t, y, x
    xi, yi = inverse_symbol(x), inverse_symbol(y)
    back = word_inverse(w)
    return w + (x, y, xi) + back, w + (x, yi, xi) + back


# -- graph file format -----------------------------------------------------


def parse_graph(text: str, base_dir: str = ".") -> GraphPresentation:
    """Parse::

        vertices: v1 v2 v3 v4
        edges: v1 v2; v2 v3; v3 v4
        gens v1: a1
        geo v1: raag          # or: geo v1: file path/to/geo_v1.aut

    Vertices without a ``geo`` line get the free-group geodesics of their
    generators (for one generator this is the ``raag`` vertex group).
    """
    vertices = None
    edges: list[tuple[str, str]] = []
    gens: dict[str, GroupAlphabet] = {}
    geos: dict[str, Automaton] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise InputError(f"line {lineno}: expected 'key: value'")
        key = head.split()
        if key == ["vertices"]:
            if vertices is not None:
                raise InputError(f"line {lineno}: vertices declared twice")
            vertices = rest.split()
        elif key == ["edges"]:
            for chunk in rest.split(";"):
                ends = chunk.split()
                if not ends:
                    continue
                if len(ends) != 2:
                    raise InputError(f"line {lineno}: edge {chunk.strip()!r} needs two vertices")
                if ends[0] == ends[1]:
                    raise InputError(f"line {lineno}: loop at {ends[0]!r}")
                if any(set(ends) == set(e) for e in edges):
                    raise InputError(f"line {lineno}: duplicate edge {ends[0]} {ends[1]}")
                edges.append((ends[0], ends[1]))
        elif len(key) == 2 and key[0] in ("gens", "geo"):
            v = key[1]
            if vertices is None or v not in vertices:
                raise InputError(f"line {lineno}: unknown vertex {v!r}")
            if key[0] == "gens":
                if v in gens:
                    raise InputError(f"line {lineno}: generators of {v!r} declared twice")
                gens[v] = GroupAlphabet.of(rest.split())
            else:
                choice = rest.split()
                if choice == ["raag"]:
                    if v not in gens:
                        raise InputError(f"line {lineno}: declare 'gens {v}' before its geodesics")
                    geos[v] = reduced_universe(gens[v])
                elif len(choice) == 2 and choice[0] == "file":
                    geos[v] = fa.load_automaton(os.path.join(base_dir, choice[1]))
                else:
                    raise InputError(f"line {lineno}: expected 'raag' or 'file PATH'")
        else:
            raise InputError(f"line {lineno}: unknown key {head.strip()!r}")
    if vertices is None:
        raise InputError("missing 'vertices:' line")
    for a, b in edges:
        for v in (a, b):
            if v not in vertices:
                raise InputError(f"edge mentions unknown vertex {v!r}")
    return GraphPresentation(tuple(vertices), frozenset(frozenset(e) for e in edges), gens, geos)


def load_graph(path) -> GraphPresentation:
    with open(path) as fh:
        return parse_graph(fh.read(), os.path.dirname(os.path.abspath(path)))
