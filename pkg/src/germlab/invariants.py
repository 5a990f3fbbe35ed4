"""Invariants of map germs: singular loci, Tjurina and Milnor numbers,
Hilbert-Samuel functions and multiplicities.

Conventions, for a germ f = (f_1, ..., f_k) in n + k variables cutting
out a complete intersection X of dimension n:

* the singular subscheme of level a is X intersected with the vanishing
  of the (n + k - a)-minors of the Jacobian matrix;
* the critical ring is the quotient by the maximal (k x k) minors alone;
* X is an isolated complete intersection singularity (ICIS) when the
  generators form a regular sequence and the level-n singular subscheme
  is at most a point (smooth germs count, with Tjurina number 0);
* the Tjurina number is the length of the cokernel of the Jacobian map
  into A^k taken modulo the component ideal, computed here as a module
  colength;
* the Milnor number of an ICIS is computed by the classical recursion
  on a generic chain of the defining equations, whose base case is the
  Jacobian-ideal colength of a hypersurface;
* Samuel multiplicities are read off as the stabilized d-th finite
  difference of the function t -> len(R / I^(t+1) R).

Randomized choices (generic linear combinations, generic coordinate
mixes) draw small integer coefficients from an explicit seeded
generator, so every result is reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import (
    ContextMismatchError,
    DegenerateDrawsError,
    GenericityFailureError,
    InfiniteLengthError,
    NoStabilizationError,
    NotICISError,
)
from .standard_basis import (
    INFINITE,
    FreeModuleElement,
    IdealBasis,
    SubmoduleBasis,
    colength,
    ideal_power,
    ideal_sum,
    is_maximal_ideal_basis,
    krull_dimension,
)

COEFF_RANGE = 997  # generic draws use integers in [-997, 997]
DEFAULT_DRAWS = 3
DEFAULT_WINDOW = 3
DEFAULT_MAX_T = 30
DEFAULT_RETRIES = 5


class SingularityInput:
    """A germ of a map (A, 0) -> (C^k, 0), i.e. k component germs that
    vanish at the origin, over a common ring context."""

    __slots__ = ("context", "polys")

    def __init__(self, context, polys):
        polys = tuple(polys)
        if not polys:
            raise ValueError("need at least one component germ")
        if len(polys) > context.num_vars:
            raise ValueError(
                f"{len(polys)} components in {context.num_vars} variables: "
                "the expected dimension would be negative"
            )
        for p in polys:
            if p.context != context:
                raise ContextMismatchError("component over a different context")
            if p.constant_term() != context.field.zero:
                raise ValueError(f"germ {p} does not vanish at the origin")
        self.context = context
        self.polys = polys

    @property
    def k(self) -> int:
        return len(self.polys)

    @property
    def n(self) -> int:
        return self.context.num_vars - len(self.polys)

    def component_ideal(self) -> IdealBasis:
        return IdealBasis(self.context, self.polys)

    def __repr__(self):
        return f"SingularityInput({[str(p) for p in self.polys]})"


# Jacobian data


def jacobian_matrix(s: SingularityInput):
    """Rows are component germs, columns are variables."""
    nv = s.context.num_vars
    return [[p.partial_derivative(j) for j in range(nv)] for p in s.polys]


def _determinant(matrix, rows, cols, memo, ctx):
    key = (rows, cols)
    cached = memo.get(key)
    if cached is not None:
        return cached
    if len(rows) == 1:
        result = matrix[rows[0]][cols[0]]
    else:
        result = ctx.zero()
        r0 = rows[0]
        rest_rows = rows[1:]
        for pos, c in enumerate(cols):
            entry = matrix[r0][c]
            if entry.is_zero():
                continue
            rest_cols = cols[:pos] + cols[pos + 1 :]
            minor = _determinant(matrix, rest_rows, rest_cols, memo, ctx)
            term = entry * minor
            result = result - term if pos % 2 else result + term
    memo[key] = result
    return result


def jacobian_minors(s: SingularityInput, size: int) -> IdealBasis:
    """Ideal of all size x size minors of the Jacobian matrix.

    Determinants are expanded by cofactors with shared sub-determinants
    memoized, which keeps repeated minors exact and cheap at the ranks
    that occur here.
    """
    nv = s.context.num_vars
    if not 1 <= size <= min(s.k, nv):
        raise ValueError(f"minor size {size} out of range for a {s.k} x {nv} matrix")
    matrix = jacobian_matrix(s)
    memo = {}
    seen = set()
    gens = []
    for rows in combinations(range(s.k), size):
        for cols in combinations(range(nv), size):
            det = _determinant(matrix, rows, cols, memo, s.context)
            if det.is_zero():
                continue
            key = tuple(sorted(det.terms.items()))
            if key in seen:
                continue
            seen.add(key)
            gens.append(det)
    return IdealBasis(s.context, gens)


def sigma_scheme(s: SingularityInput, alpha: int) -> IdealBasis:
    """Ideal of the locus where the fiber has tangent dimension > alpha:
    the components together with the (n + k - alpha)-minors."""
    size = s.context.num_vars - alpha
    if not 1 <= size <= min(s.k, s.context.num_vars):
        raise ValueError(f"no singular subscheme of level {alpha} for this germ")
    return ideal_sum(s.component_ideal(), jacobian_minors(s, size))


def critical_locus(s: SingularityInput) -> IdealBasis:
    """Ideal of maximal minors of the Jacobian (the critical ring's ideal)."""
    return jacobian_minors(s, s.k)


def is_regular_sequence(s: SingularityInput, step_budget=None) -> bool:
    """The components cut the expected dimension n."""
    return krull_dimension(s.component_ideal(), step_budget) == s.n


def is_icis(s: SingularityInput, step_budget=None) -> bool:
    """Regular sequence with at most a point of non-smoothness.

    Smooth germs pass: their minor ideal is the unit ideal, the singular
    subscheme is empty (dimension -1 here) and the Tjurina number is 0.
    """
    if not is_regular_sequence(s, step_budget):
        return False
    return krull_dimension(sigma_scheme(s, s.n), step_budget) <= 0


# Tjurina number


def tjurina_module(s: SingularityInput, degree_cap=None) -> SubmoduleBasis:
    """Presentation of the first-order deformation module inside A^k:
    the Jacobian columns plus every component multiple of every basis
    vector."""
    ctx = s.context
    k = s.k
    matrix = jacobian_matrix(s)
    gens = []
    for j in range(ctx.num_vars):
        gens.append(FreeModuleElement(tuple(matrix[i][j] for i in range(k))))
    zero = ctx.zero()
    for p in s.polys:
        for slot in range(k):
            comps = [zero] * k
            comps[slot] = p
            gens.append(FreeModuleElement(tuple(comps)))
    return SubmoduleBasis(ctx, k, gens, degree_cap=degree_cap)


def tjurina(s: SingularityInput, step_budget=None):
    """Tjurina number: colength of the deformation presentation in A^k.
    INFINITE exactly when the singularity is not isolated."""
    return colength(tjurina_module(s), step_budget)


# Samuel functions and multiplicities


@dataclass
class SamuelTable:
    """Values of t -> len(A / (K + I^(t+1))) for consecutive t from 0."""

    ring_label: str
    values: list
    dimension: int
    window: int
    stabilized: bool

    def value(self, t: int):
        return self.values[t]

    def finite_differences(self, order: int):
        vals = list(self.values)
        for _ in range(order):
            vals = [b - a for a, b in zip(vals, vals[1:])]
        return vals


@dataclass
class MultiplicityResult:
    e: int
    dimension: int
    t_stable: int
    table: SamuelTable


def _chi(ring_ideal: IdealBasis, ideal: IdealBasis, t: int, step_budget=None):
    if is_maximal_ideal_basis(ideal):
        return colength(ring_ideal.with_cap(t + 1), step_budget)
    return colength(ideal_sum(ring_ideal, ideal_power(ideal, t + 1)), step_budget)


def samuel_function(ring_ideal: IdealBasis, ideal: IdealBasis, t: int, step_budget=None):
    """len(A / (K + I^(t+1))) where K presents the ring and I the ideal.

    Returns INFINITE when I is not primary to the maximal ideal in the
    quotient (the only way the length can be infinite).
    """
    if t < 0:
        raise ValueError("the Samuel function takes non-negative arguments")
    if colength(ideal_sum(ring_ideal, ideal), step_budget) is INFINITE:
        return INFINITE
    return _chi(ring_ideal, ideal, t, step_budget)


def multiplicity(
    ring_ideal: IdealBasis,
    ideal: IdealBasis,
    window: int = DEFAULT_WINDOW,
    max_t: int = DEFAULT_MAX_T,
    step_budget=None,
    ring_label: str = "",
) -> MultiplicityResult:
    """Samuel multiplicity as the stabilized d-th finite difference.

    d is the Krull dimension of the quotient ring; the scan stops once
    the last `window` d-th differences agree (and are positive).  The
    stabilization window is a heuristic, which is why the table and the
    stabilization point are part of the result.
    """
    if window < 1:
        raise ValueError("window must be positive")
    d = krull_dimension(ring_ideal, step_budget)
    if d < 0:
        raise ValueError("the quotient ring is zero; no multiplicity")
    if colength(ideal_sum(ring_ideal, ideal), step_budget) is INFINITE:
        raise InfiniteLengthError(
            "the ideal is not primary to the maximal ideal in this quotient"
        )
    values = []
    for t in range(max_t + 1):
        values.append(_chi(ring_ideal, ideal, t, step_budget))
        if len(values) < d + window:
            continue
        diffs = list(values)
        for _ in range(d):
            diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        tail = diffs[-window:]
        if len(tail) == window and len(set(tail)) == 1 and tail[0] >= 1:
            start = len(diffs) - window
            while start > 0 and diffs[start - 1] == tail[0]:
                start -= 1
            table = SamuelTable(
                ring_label=ring_label,
                values=values,
                dimension=d,
                window=window,
                stabilized=True,
            )
            return MultiplicityResult(
                e=tail[0], dimension=d, t_stable=start, table=table
            )
    raise NoStabilizationError(max_t, window)


@dataclass
class BoundRow:
    t: int
    value: int
    bounds: list  # (name, rhs, ok) triples


@dataclass
class SamuelBoundsCheck:
    ok: bool
    rows: list = field(default_factory=list)

    def violations(self):
        return [
            (row.t, name, row.value, rhs)
            for row in self.rows
            for (name, rhs, ok) in row.bounds
            if not ok
        ]


def check_samuel_bounds(table: SamuelTable, e: int) -> SamuelBoundsCheck:
    """Verify the classical lower bounds for a Samuel function.

    With d the dimension and e the multiplicity with respect to the
    maximal ideal, every value chi(t) must satisfy

    * chi(t) >= C(t + d, d), the regular-ring floor;
    * chi(t) >= C(t + d + 1, d + 1) while t <= e - 1;
    * chi(t) >= sum_{i=0..d} (-1)^i C(e, i+1) C(t+d-i, d-i) once
      t >= e - 1.
    """
    d = table.dimension
    rows = []
    all_ok = True
    for t, value in enumerate(table.values):
        bounds = []
        floor = comb(t + d, d)
        bounds.append(("regular_floor", floor, value >= floor))
        if t <= e - 1:
            early = comb(t + d + 1, d + 1)
            bounds.append(("early_range", early, value >= early))
        if t >= e - 1:
            late = sum(
                (-1) ** i * comb(e, i + 1) * comb(t + d - i, d - i)
                for i in range(d + 1)
            )
            bounds.append(("stable_range", late, value >= late))
        if any(not ok for (_, _, ok) in bounds):
            all_ok = False
        rows.append(BoundRow(t=t, value=value, bounds=bounds))
    return SamuelBoundsCheck(ok=all_ok, rows=rows)


# generic draws


def _draw_matrix(rng, rows, cols):
    return [[rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in range(cols)] for _ in range(rows)]


def _combine(polys, coeffs, ctx):
    out = ctx.zero()
    for c, p in zip(coeffs, polys):
        if c:
            out = out + p.scale(c)
    return out


def _int_determinant(m):
    size = len(m)
    if size == 1:
        return m[0][0]
    total = 0
    for pos in range(size):
        if m[0][pos] == 0:
            continue
        minor = [row[:pos] + row[pos + 1 :] for row in m[1:]]
        term = m[0][pos] * _int_determinant(minor)
        total += -term if pos % 2 else term
    return total


def generic_combination_colengths(
    s: SingularityInput, seed=0, draws: int = DEFAULT_DRAWS, step_budget=None
):
    """Colengths of (maximal minors) + (k-1 random combinations of the
    components), for several independent draws.

    Each draw picks integer coefficients in [-997, 997] from the seeded
    generator.  Upper semicontinuity makes the minimum the generic
    value; disagreement between finite draws is worth reporting.
    """
    ctx = s.context
    jac = critical_locus(s)
    rng = random.Random(f"germ-generic:{seed}")
    values = []
    for _ in range(draws):
        coeffs = _draw_matrix(rng, s.k - 1, s.k)
        combos = [_combine(s.polys, row, ctx) for row in coeffs]
        values.append(colength(ideal_sum(jac, IdealBasis(ctx, combos)), step_budget))
    return values


def milnor_bound(
    s: SingularityInput, seed=0, draws: int = DEFAULT_DRAWS, step_budget=None
):
    """Upper bound for the Milnor number: the colength of the maximal
    minors plus k-1 generic combinations of the components.  For
    hypersurfaces this is just the Jacobian-ideal colength."""
    if not is_icis(s, step_budget):
        raise NotICISError("the Milnor bound needs an isolated complete intersection")
    if s.k == 1:
        return colength(critical_locus(s), step_budget)
    values = generic_combination_colengths(s, seed, draws, step_budget)
    finite = [v for v in values if v is not INFINITE]
    if not finite:
        raise DegenerateDrawsError(
            f"all {draws} random combinations gave infinite colength"
        )
    return min(finite)


def milnor_exact(
    s: SingularityInput,
    seed=0,
    max_retries: int = DEFAULT_RETRIES,
    step_budget=None,
):
    """Milnor number of an ICIS via the classical chain recursion.

    A random invertible integer matrix mixes the components (the fiber,
    hence the Milnor number, is unchanged); every prefix of the mixed
    chain must itself be an ICIS, and then

        mu(prefix j) + mu(prefix j-1)
            = colength( (first j-1 components) + (j-minors of prefix j) )

    unwinds from mu(empty) = 0.  Failed prefixes trigger a redraw, at
    most `max_retries` times.
    """
    if not is_icis(s, step_budget):
        raise NotICISError("the Milnor number needs an isolated complete intersection")
    ctx = s.context
    if s.k == 1:
        return colength(critical_locus(s), step_budget)
    rng = random.Random(f"germ-chain:{seed}")
    for _ in range(max_retries):
        matrix = _draw_matrix(rng, s.k, s.k)
        if _int_determinant(matrix) == 0:
            continue
        mixed = [_combine(s.polys, row, ctx) for row in matrix]
        prefixes = [SingularityInput(ctx, mixed[: j + 1]) for j in range(s.k)]
        if not all(is_icis(p, step_budget) for p in prefixes[:-1]):
            continue
        mu = 0
        ok = True
        for j, prefix in enumerate(prefixes, start=1):
            minors = jacobian_minors(prefix, j)
            if j == 1:
                level = colength(minors, step_budget)
            else:
                earlier = IdealBasis(ctx, mixed[: j - 1])
                level = colength(ideal_sum(earlier, minors), step_budget)
            if level is INFINITE:
                ok = False
                break
            mu = level - mu
            if mu < 0:
                ok = False
                break
        if ok:
            return mu
    raise GenericityFailureError(
        f"no generic coordinate mix found in {max_retries} attempts"
    )


@dataclass
class CriticalMultiplicityResult:
    """Multiplicity of the critical ring along the fiber, two ways."""

    e_samuel: int
    e_generic: int
    draws_agree: bool
    samuel: MultiplicityResult | None = None
    generic_values: list = field(default_factory=list)


def critical_multiplicity(
    s: SingularityInput,
    seed=0,
    draws: int = DEFAULT_DRAWS,
    window: int = DEFAULT_WINDOW,
    max_t: int = DEFAULT_MAX_T,
    step_budget=None,
    generic_values=None,
) -> CriticalMultiplicityResult:
    """Multiplicity of the critical ring with respect to the component
    ideal, via Samuel differences and via generic colength.

    The critical ring of an ICIS has dimension k - 1.  The Samuel route
    reads the stabilized difference of len(A / (minors + components^
    (t+1))); the generic route cuts by k - 1 random combinations.  A
    smooth germ has an empty critical ring and multiplicity 0 by
    convention.
    """
    if not is_icis(s, step_budget):
        raise NotICISError(
            "the critical multiplicity needs an isolated complete intersection"
        )
    jac = critical_locus(s)
    if colength(jac, step_budget) == 0 and krull_dimension(jac, step_budget) < 0:
        return CriticalMultiplicityResult(
            e_samuel=0, e_generic=0, draws_agree=True, samuel=None
        )
    result = multiplicity(
        jac,
        s.component_ideal(),
        window=window,
        max_t=max_t,
        step_budget=step_budget,
        ring_label="critical ring / component ideal",
    )
    if s.k == 1:
        e_generic = colength(jac, step_budget)
        return CriticalMultiplicityResult(
            e_samuel=result.e,
            e_generic=e_generic,
            draws_agree=True,
            samuel=result,
            generic_values=[e_generic],
        )
    if generic_values is None:
        generic_values = generic_combination_colengths(s, seed, draws, step_budget)
    finite = [v for v in generic_values if v is not INFINITE]
    if not finite:
        raise DegenerateDrawsError(
            f"all {draws} random combinations gave infinite colength"
        )
    return CriticalMultiplicityResult(
        e_samuel=result.e,
        e_generic=min(finite),
        draws_agree=len(set(finite)) == 1 and len(finite) == len(generic_values),
        samuel=result,
        generic_values=list(generic_values),
    )


@dataclass
class CheckOutcome:
    ok: bool | None  # None means reported, not asserted
    detail: str


def check_inequalities(
    s: SingularityInput,
    seed=0,
    step_budget=None,
    precomputed=None,
) -> dict:
    """Classical inequalities between the invariants of an ICIS.

    Asserted: the Milnor number is at most the generic bound, at most
    the critical multiplicity, the two critical routes agree, and for
    hypersurfaces mu <= (n + 1) tau.  Reported only: the ratio mu/tau
    for plane curves against the conjectural ceiling 4/3.
    """
    if precomputed is None:
        if not is_icis(s, step_budget):
            raise NotICISError("inequality checks need an isolated singularity")
        mu = milnor_exact(s, seed=seed, step_budget=step_budget)
        bound = milnor_bound(s, seed=seed, step_budget=step_budget)
        tau_value = tjurina(s, step_budget)
        crit = critical_multiplicity(s, seed=seed, step_budget=step_budget)
    else:
        mu = precomputed["mu"]
        bound = precomputed["bound"]
        tau_value = precomputed["tau"]
        crit = precomputed["crit"]

    checks = {}
    checks["milnor_le_bound"] = CheckOutcome(
        ok=mu <= bound, detail=f"mu={mu} <= bound={bound}"
    )
    checks["milnor_le_critical"] = CheckOutcome(
        ok=mu <= crit.e_samuel, detail=f"mu={mu} <= e_crit={crit.e_samuel}"
    )
    checks["critical_paths_agree"] = CheckOutcome(
        ok=crit.e_samuel == crit.e_generic,
        detail=f"samuel={crit.e_samuel}, generic={crit.e_generic}",
    )
    if s.k == 1:
        rhs = (s.n + 1) * tau_value
        checks["milnor_le_dim_bound"] = CheckOutcome(
            ok=mu <= rhs, detail=f"mu={mu} <= (n+1)*tau={rhs}"
        )
    if s.k == 1 and s.n == 1:
        if tau_value:
            ratio = mu / tau_value
            within = 3 * mu <= 4 * tau_value
            detail = f"mu/tau={ratio:.6g} ({'<=' if within else '>'} 4/3)"
        else:
            detail = "mu/tau undefined (smooth germ)"
        checks["plane_curve_ratio"] = CheckOutcome(ok=None, detail=detail)
    return checks
