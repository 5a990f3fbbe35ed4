"""Deciding singularity classes from finite jets.

Whether a germ has Tjurina number r, a singular locus of dimension at
least d, or critical multiplicity at least e is visible on a finite
truncation.  Each test reports the capped lengths it compared, and the
stabilization scan shows the verdict settling as the jet level grows.
"""

from germlab import (
    JetVector,
    RingContext,
    SingularityInput,
    critical_jet_test,
    dimension_jet_test,
    poly,
    stabilization_scan,
    tjurina_jet_test,
)

ctx = RingContext(("x", "y"))
cusp = SingularityInput(ctx, [poly(ctx, "x^3 + y^2")])

# T(r): the Tjurina number is exactly 2, decided on the 4-jet.
for r in (1, 2, 3):
    verdict = tjurina_jet_test(JetVector.of(cusp, r + 2), r)
    print(f"T({r}) on the {r + 2}-jet: member = {verdict.member}")

# D(1): does the singular locus look at least 1-dimensional?  On the
# 3-jet the cusp is indistinguishable from y^2 (non-isolated); one more
# coefficient settles it.
scan = stabilization_scan(cusp, "D", 1, 8)
print("\nD(1) scan over jet levels:", scan.rows)
print("verdict settles at level:", scan.stabilized_at, "-> member =", scan.final)

# C(e): the critical ring of the cusp has multiplicity 2 along the
# fiber, so C(2) holds and C(3) fails; the witness rows show the capped
# length against the binomial threshold.
jet = JetVector.of(cusp, 8)
for e in (2, 3):
    verdict = critical_jet_test(jet, e)
    print(f"\nC({e}): member = {verdict.member}, witness rows (t, lhs, rhs):")
    for row in verdict.witness:
        print("   ", row)

# A jet too short to carry any checkable row is reported as vacuous.
tiny = critical_jet_test(JetVector.of(cusp, 2), 3)
print("\nC(3) on the 2-jet: member =", tiny.member, "(vacuous =", str(tiny.vacuous) + ")")
