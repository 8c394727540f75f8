"""
Geodesics in a right-angled Artin group
=======================================

On the path v1 - v2 - v3 - v4 every vertex carries a copy of Z.  A word is
geodesic when each projection, which keeps the letters of one vertex, erases
its neighbours and writes ``$`` for everything else, is a sequence of
geodesic blocks separated by ``$``.
"""

from regcone import automata as fa
from regcone.graphprod import (
    diameter,
    geo_automaton,
    is_geodesic,
    pi_projection,
    raag_presentation,
    theorem2_witness,
)

G = raag_presentation(["v1", "v2", "v3", "v4"], [("v1", "v2"), ("v2", "v3"), ("v3", "v4")])
print(diameter(G))

w = "a1 a3 a1^".split()
for v in G.vertices:
    print(v, pi_projection(G, v, w))
print(is_geodesic(G, w), is_geodesic(G, "a2 a1 a2^".split()))

# one automaton for all geodesics
geo = geo_automaton(G)
print(geo.state_count, fa.count_words(geo, 4))

# conjugating x y^±1 x^-1 by a geodesic stays geodesic when the two vertices
# are far apart
for u in theorem2_witness(G, ["a2"], "v1", "v4", "a1", "a4"):
    print(fa.format_word(u), is_geodesic(G, u))
