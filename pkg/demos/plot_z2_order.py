"""
The lexicographic order on Z²
=============================

The language ``x^n y^m (n ≥ 1)`` together with ``y^m (m ≥ 1)`` represents
the positive cone of the lexicographic order on Z².  On a finite box this can
be confirmed point by point.
"""

from regcone import automata as fa
from regcone.orders import Order, z2_bounded_verify, z2_cone_language, z2_image, z2_lex_compare

print(z2_lex_compare((0, 0), (1, -5)), z2_lex_compare((2, 0), (0, 100)) is Order.GREATER)

a = z2_cone_language()
print(fa.enumerate_words(a, 2))
print(z2_bounded_verify(a, 4))

# draw the image on a small box: + for represented points
image = z2_image(a, 8)
for m in range(3, -4, -1):
    print(" ".join("+" if (n, m) in image else "." for n in range(-3, 4)))

# x x* alone misses the positive y axis
x = fa.from_words(a.alphabet, [("x",)])
print(z2_bounded_verify(fa.concat(x, fa.star(x)), 2))
