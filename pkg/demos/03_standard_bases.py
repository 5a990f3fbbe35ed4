"""Standard bases, colengths and Krull dimension of local quotients."""

from germlab import (
    INFINITE,
    IdealBasis,
    RingContext,
    colength,
    ideal_power,
    ideal_sum,
    krull_dimension,
    maximal_ideal,
    poly,
    standard_basis,
)

ctx = RingContext(("x", "y"))

ideal = IdealBasis(ctx, [poly(ctx, "x^2*y + y^2"), poly(ctx, "x^3")])
basis = standard_basis(ideal)
print("generators:     ", [str(p) for p in ideal.generators])
print("standard basis: ", [str(p) for p in basis])
print("colength:       ", colength(ideal), "(dimension of the local quotient)")
print("Krull dimension:", krull_dimension(ideal))

# An ideal that cuts a curve has infinite colength but dimension 1.
curve = IdealBasis(ctx, [poly(ctx, "x*y")])
print("\nx*y: colength =", colength(curve), "/ dimension =", krull_dimension(curve))
assert colength(curve) == INFINITE

# Ideal arithmetic: sums, powers, the maximal ideal.
m = maximal_ideal(ctx)
print("\ncolength of m^3:         ", colength(ideal_power(m, 3)))
print("colength of (x*y) + m^3: ", colength(ideal_sum(curve, ideal_power(m, 3))))

# Truncation: a degree cap declares every monomial of that degree or
# higher to be implicitly inside the ideal.  Capped computations stay
# exact for everything visible below the cap.
capped = ideal.with_cap(3)
print("\ncolength with all of degree >= 3 removed:", colength(capped))
