"""Hilbert-Samuel functions, multiplicities and the three lower bounds.

The Samuel function of an ideal I on a local quotient ring A/K is
t -> len(A / (K + I^(t+1))).  Its d-th finite differences stabilize to
the multiplicity e, and every value obeys three explicit binomial
bounds.  The cusp curve makes all of them sharp.
"""

from germlab import (
    IdealBasis,
    RingContext,
    check_samuel_bounds,
    maximal_ideal,
    multiplicity,
    poly,
)

ctx = RingContext(("x", "y"))
ring = IdealBasis(ctx, [poly(ctx, "x^3 + y^2")])  # the cusp curve ring

result = multiplicity(ring, maximal_ideal(ctx))
table = result.table
print("Samuel values:       ", table.values)
print("first differences:   ", table.finite_differences(1))
print("dimension d:         ", result.dimension)
print("multiplicity e:      ", result.e, f"(stable from t = {result.t_stable})")

report = check_samuel_bounds(table, result.e)
print("\nall lower bounds hold:", report.ok)
for row in report.rows:
    parts = ", ".join(f"{name} >= {rhs}" for name, rhs, _ in row.bounds)
    print(f"  t={row.t}: value {row.value}  vs  {parts}")

# A regular ring is the degenerate case: e = 1 and the Samuel function
# IS the binomial floor.
regular = multiplicity(IdealBasis(ctx, []), maximal_ideal(ctx))
print("\nregular ring:", regular.table.values, "-> e =", regular.e)
