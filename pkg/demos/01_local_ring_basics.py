"""Arithmetic in a local power-series ring with the anti-graded order.

The ring is C[[x, y]] in exact rational arithmetic.  Monomials are
compared anti-graded: the constant 1 is the LARGEST monomial, lower
total degree beats higher, and ties fall back to reverse-lexicographic
comparison.  That choice is what makes the whole package see germs at
the origin instead of global polynomials.
"""

from fractions import Fraction

from germlab import PrimeField, RingContext, poly

ctx = RingContext(("x", "y"))
x, y = ctx.variables()

f = (x + y) ** 2
print("(x + y)^2          =", f)
print("scaled by 1/3      =", f.scale(Fraction(1, 3)))
print("partial d/dx       =", f.partial_derivative(0))

# The leading monomial is the largest one, so for y^2 + x^3 it is the
# QUADRATIC term: degree decides before anything else.
g = poly(ctx, "x^3 + y^2")
print("germ               =", g)
print("leading monomial   =", g.leading_monomial(), "(the low-degree part wins)")
print("order of vanishing =", g.order_of_vanishing())

# x^2 is larger than x*y in this order: equal degree, and the tie-break
# prefers the power of the earlier variable.
h = poly(ctx, "x*y + x^2")
print("x^2 + x*y leads by =", h.leading_monomial())

# 1 + x has a nonzero constant term, hence is invertible as a germ.
u = 1 + x
print("1 + x is a unit:   ", u.is_unit())

# Everything works verbatim over a prime field.
ctx7 = RingContext(("x", "y"), PrimeField(7))
print("over GF(7):        ", poly(ctx7, "3*x^2 + 10*y"), "(10 folds to 3)")
print("truncate at deg 2: ", poly(ctx7, "1 + x + x^2 + x^3").truncate(2))
