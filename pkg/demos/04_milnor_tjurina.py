"""Milnor and Tjurina numbers of isolated singularities.

For a plane curve germ f the Milnor number is the colength of the
Jacobian ideal and the Tjurina number the colength of f plus the
Jacobian.  For a complete intersection with several components the
Milnor number comes from a chain recursion over generic mixes of the
components, and the Tjurina number from a module colength.
"""

from germlab import (
    RingContext,
    SingularityInput,
    is_icis,
    milnor_bound,
    milnor_exact,
    poly,
    tjurina,
)

plane = RingContext(("x", "y"))
space = RingContext(("x", "y", "z"))


def germ(ctx, *sources):
    return SingularityInput(ctx, [poly(ctx, s) for s in sources])


for label, s in [
    ("cusp  x^3 + y^2", germ(plane, "x^3 + y^2")),
    ("D4    x^2*y + y^3", germ(plane, "x^2*y + y^3")),
    ("E8    x^3 + y^5", germ(plane, "x^3 + y^5")),
]:
    print(f"{label}: mu = {milnor_exact(s)}, tau = {tjurina(s)}")

# A space curve cut by two equations: mu comes out of the chain
# recursion, and the generic bound is allowed to overshoot.
curve = germ(space, "x^2 + y^2 + z^2", "x*y")
print("\nspace curve (x^2 + y^2 + z^2, x*y):")
print("  isolated complete intersection:", is_icis(curve))
print("  mu    =", milnor_exact(curve))
print("  bound =", milnor_bound(curve), "(generic colength, an upper bound)")
print("  tau   =", tjurina(curve))

# A non-example: these two quadrics share a whole line of singular
# points, so no finite invariants exist.
degenerate = germ(space, "x*y", "x^2 + z^2")
print("\ntangent quadrics (x*y, x^2 + z^2):")
print("  isolated complete intersection:", is_icis(degenerate))
print("  tau =", tjurina(degenerate))
