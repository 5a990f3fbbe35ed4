"""Finite-jet membership tests for singularity classes.

Each test asks whether a property of a germ is already visible on a
truncation (a jet), by comparing capped colengths against explicit
binomial expressions.  Three families are covered:

* the Tjurina family T(r): the deformation module has length exactly r,
  decided on the (r + 2)-jet;
* the dimension family D(d): the singular subscheme is at least
  d-dimensional, witnessed by its Samuel values clearing the
  regular-ring floor C(t + d, d) for every t the jet level covers;
* the critical family C(e): the critical ring carries multiplicity at
  least e along the fiber, witnessed by an alternating-sum lower bound
  on capped colengths (the range of checkable t grows with the level,
  and an empty range makes the verdict vacuously true, flagged).

The stabilization scan replays a test on every truncation level up to a
ceiling, showing where the verdict settles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .invariants import SingularityInput, critical_locus, sigma_scheme, tjurina_module
from .standard_basis import colength, ideal_power, ideal_sum


@dataclass(frozen=True)
class JetVector:
    """Components of a germ truncated below a fixed degree level."""

    context: object
    polys: tuple
    level: int

    @staticmethod
    def of(s: SingularityInput, level: int) -> "JetVector":
        if level < 1:
            raise ValueError("jet level must be positive")
        return JetVector(
            context=s.context,
            polys=tuple(p.truncate(level) for p in s.polys),
            level=level,
        )

    def germ(self) -> SingularityInput:
        return SingularityInput(self.context, self.polys)


@dataclass
class ClassVerdict:
    class_name: str
    parameters: dict
    member: bool
    witness: list = field(default_factory=list)  # (t, lhs, rhs) triples
    vacuous: bool = False


def _tjurina_condition(s: SingularityInput, r: int, step_budget=None):
    module = tjurina_module(s, degree_cap=r + 1)
    return colength(module, step_budget)


def tjurina_jet_test(jet: JetVector, r: int, step_budget=None) -> ClassVerdict:
    """Is the Tjurina number exactly r, judged from the (r + 2)-jet?

    The deformation module is truncated by adding every monomial of
    degree r + 1 in every position, which is harmless precisely at this
    jet level.
    """
    if r < 0:
        raise ValueError("the Tjurina parameter must be non-negative")
    if jet.level != r + 2:
        raise ValueError(f"the test for parameter {r} needs a jet of level {r + 2}")
    lhs = _tjurina_condition(jet.germ(), r, step_budget)
    return ClassVerdict(
        class_name="T",
        parameters={"r": r},
        member=lhs == r,
        witness=[(r, lhs, r)],
    )


def dimension_jet_test(jet: JetVector, d: int, step_budget=None) -> ClassVerdict:
    """Does the singular subscheme look at least d-dimensional on this jet?

    For every t with t <= level - 2, the length of the singular ring
    truncated below degree t + 1 must clear the regular-ring floor
    C(t + d, d).
    """
    if d < 0:
        raise ValueError("the dimension parameter must be non-negative")
    s = jet.germ()
    sigma = sigma_scheme(s, s.n)
    witness = []
    member = True
    for t in range(0, jet.level - 1):
        lhs = colength(sigma.with_cap(t + 1), step_budget)
        rhs = comb(t + d, d)
        witness.append((t, lhs, rhs))
        if lhs < rhs:
            member = False
    return ClassVerdict(
        class_name="D",
        parameters={"d": d},
        member=member,
        witness=witness,
        vacuous=not witness,
    )


def critical_jet_test(jet: JetVector, e: int, step_budget=None) -> ClassVerdict:
    """Does the critical ring carry multiplicity at least e on this jet?

    With k components and d = k - 1, for every t with t >= e - 1 and
    e * C(t + k - 1, k - 1) <= level - 2 the capped colength of
    (maximal minors) + (components)^(t+1) must be at least

        sum_{i=0..d} (-1)^i C(e, i+1) C(t + d - i, d - i).

    An empty t-range yields a vacuous (flagged) membership.
    """
    if e < 1:
        raise ValueError("the multiplicity parameter must be at least 1")
    s = jet.germ()
    k = s.k
    d = k - 1
    jac = critical_locus(s)
    components = s.component_ideal()
    witness = []
    member = True
    t = max(e - 1, 0)
    while True:
        cap = e * comb(t + k - 1, k - 1)
        if cap > jet.level - 2:
            break
        capped = ideal_sum(jac, ideal_power(components, t + 1)).with_cap(cap)
        lhs = colength(capped, step_budget)
        rhs = sum(
            (-1) ** i * comb(e, i + 1) * comb(t + d - i, d - i) for i in range(d + 1)
        )
        witness.append((t, lhs, rhs))
        if lhs < rhs:
            member = False
        if k == 1:
            # With one component the cap stays at e while every power of
            # the component ideal sits above it, so later rows repeat this
            # one verbatim.
            break
        t += 1
    return ClassVerdict(
        class_name="C",
        parameters={"e": e},
        member=member,
        witness=witness,
        vacuous=not witness,
    )


@dataclass
class ScanResult:
    class_name: str
    parameter: int
    rows: list  # (level, member) pairs
    stabilized_at: int
    final: bool


def stabilization_scan(
    s: SingularityInput,
    class_name: str,
    parameter: int,
    r_max: int,
    step_budget=None,
) -> ScanResult:
    """Run one jet test on every truncation level from 3 to r_max.

    For the Tjurina family the defining condition is evaluated directly
    on each truncation (its official jet level is pinned to r + 2, which
    the scan deliberately varies).  Reports the lowest level from which
    the verdict never changes again.
    """
    if r_max < 3:
        raise ValueError("the scan needs r_max >= 3")
    rows = []
    for level in range(3, r_max + 1):
        jet = JetVector.of(s, level)
        if class_name == "T":
            value = _tjurina_condition(jet.germ(), parameter, step_budget)
            member = value == parameter
        elif class_name == "D":
            member = dimension_jet_test(jet, parameter, step_budget).member
        elif class_name == "C":
            member = critical_jet_test(jet, parameter, step_budget).member
        else:
            raise ValueError(f"unknown class name {class_name!r}")
        rows.append((level, member))
    final = rows[-1][1]
    stabilized_at = rows[-1][0]
    for level, member in reversed(rows):
        if member != final:
            break
        stabilized_at = level
    return ScanResult(
        class_name=class_name,
        parameter=parameter,
        rows=rows,
        stabilized_at=stabilized_at,
        final=final,
    )
