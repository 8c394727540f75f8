"""
Free reduction of regular languages
===================================

A regular language over ``x x^ y y^`` names a set of free-group elements.
Saturating the automaton with its cancellations gives a language of freely
reduced words naming exactly the same set.
"""

from regcone import automata as fa
from regcone.freegroup import GroupAlphabet, benois_reduce, find_word, free_reduce

X = GroupAlphabet.of("x y")
print(X.symbols)

# words reduce by deleting adjacent inverse pairs
print(free_reduce("x y x^ x y^".split()))

# x (y y^)* x: every word is equal to x x in the group
x = fa.from_words(X.symbols, [("x",)])
yy = fa.from_words(X.symbols, [("y", "y^")])
a = fa.concat(fa.concat(x, fa.star(yy)), x)
P = benois_reduce(a, X)
print(P.elements(4))

# a language whose short elements hide behind long words
b = fa.parse_automaton("""
alphabet: x x^ y y^
states: 4
start: 0
accept: 2 3
trans: 0 x^ 2
trans: 0 y 3
trans: 1 x 0
trans: 1 y 1
trans: 2 x 1
trans: 2 y 2
trans: 2 y^ 0
trans: 3 x^ 2
trans: 3 y 0
trans: 3 y^ 0
""")
g = ("y^", "y^", "y^")
w = find_word(b, X, g)
print(g in benois_reduce(b, X), len(w), fa.format_word(w))
