"""
Checking candidate positive cones
=================================

A positive cone is a subsemigroup ``P`` with ``G = P ⊔ {e} ⊔ P⁻¹``.  For
languages over a free group alphabet each axiom is an automaton computation,
and every failure comes with words that can be re-checked by hand.
"""

from regcone import automata as fa
from regcone.conecheck import (
    RefuteConfig,
    check_cone_axioms,
    cover_by_prefixes,
    format_verdict,
    pumping_witness,
    verify_verdict,
)
from regcone.freegroup import GroupAlphabet, reduced_universe

# the usual order on Z: positive powers of x
Z = GroupAlphabet.of("x")
x = fa.from_words(Z.symbols, [("x",)])
print(format_verdict(check_cone_axioms(fa.concat(x, fa.star(x)), Z)))

# in rank 2 the obvious guesses fail
F = GroupAlphabet.of("x y")
starts_x = fa.intersect(fa.concat(fa.from_words(F.symbols, [("x",)]), fa.universal(F.symbols)),
                        reduced_universe(F))
v = check_cone_axioms(starts_x, F)
print(format_verdict(v), verify_verdict(starts_x, F, v))

# every element is a prefix value of a cone language
starts_yx = fa.intersect(fa.concat(fa.from_words(F.symbols, [("y", "x")]), fa.universal(F.symbols)),
                         reduced_universe(F))
print(cover_by_prefixes(starts_yx, F, ("y",)))

# the pumping argument, run as a search: a dominating element, a prefix for
# its inverse and a short completion give two accepted mutually inverse words
words = ["x", "x y x^", "y x^", "x x y x^", "y^ x y x^", "y x y x^", "x y^ x^ y x y x^", "x y^ x^ y"]
L = fa.from_words(F.symbols, [w.split() for w in words])
v = pumping_witness(L, F, RefuteConfig(max_ball_radius=1))
print(v.origin)
print(format_verdict(v))
