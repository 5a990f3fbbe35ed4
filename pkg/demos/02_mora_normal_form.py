"""Weak normal forms in the localized ring: why Mora's loop is needed.

A global-ordering division algorithm cannot reduce x by x - x^2: the
"remainder" keeps growing in degree.  Mora's tangent-cone algorithm may
multiply the input by a unit before subtracting, and units are exactly
what the local ring has in abundance.  The result: x reduces to 0,
because x = (1 - x)^(-1) * (x - x^2) in C[[x]].
"""

from germlab import IdealBasis, RingContext, colength, mora_normal_form, poly

ctx = RingContext(("x", "y"))
x, y = ctx.variables()

print("NF(x, {x - x^2})     =", mora_normal_form(x, [x - x**2]))
print("  ... so x IS in the ideal generated by x - x^2 near the origin.")

# The same germ seen globally has two zeros, x = 0 and x = 1; locally
# only the branch at the origin matters, so the quotient has length 1.
branch = IdealBasis(ctx, [poly(ctx, "x - x^2"), y])
print("colength(x - x^2, y) =", colength(branch))

# A reduction that terminates with a genuine remainder: dividing the
# cusp polynomial by y^2 - x^3 flips the sign of the cube.
cusp_like = mora_normal_form(poly(ctx, "y^2 + x^3"), [poly(ctx, "y^2 - x^3")])
print("NF(y^2 + x^3, {y^2 - x^3}) =", cusp_like)

# Intermediate partial remainders join the divisor list along the way;
# that bookkeeping is what guarantees termination.
print("NF(x, {x^2, y})      =", mora_normal_form(x, [x**2, y]), "(irreducible)")
