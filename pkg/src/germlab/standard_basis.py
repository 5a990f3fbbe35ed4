"""Standard bases over the local order, for ideals and submodules.

The reducer is Mora's tangent-cone normal form: a weak normal form that
may multiply the input by a unit, which is exactly what membership in
the localized ring needs.  The classical litmus test is x against
{x - x^2}: since x - x^2 = x(1 - x) and 1 - x is a unit, the remainder
is 0 even though plain division would loop.  Termination comes from the
ecart trick, admitting intermediate remainders as extra reducers.

Submodules of a free module use the position-over-term extension of the
order (position first, then the local order on monomials), so a rank-1
submodule behaves exactly like an ideal.

A basis may carry a degree cap c, meaning the ideal (or submodule)
implicitly contains every monomial of total degree >= c.  All arithmetic
is then truncated below degree c: a dropped term is a multiple of one of
those implicit generators, so weak normal forms stay sound.  Caps are
what keep Samuel tables and jet computations fast.
"""

from __future__ import annotations

import heapq
from itertools import combinations_with_replacement
from math import inf

from .errors import ContextMismatchError, StepBudgetExceededError
from .ring import (
    LocalPolynomial,
    RingContext,
    monomial_divides,
    monomial_lcm,
    order_key,
)

INFINITE = inf

DEFAULT_STEP_BUDGET = 10_000_000

# Internal representation: a vector is a dict mapping (position, exps) to a
# nonzero coefficient.  Ideals are rank-1 vectors (position always 0).


def _term_key(term):
    pos, exps = term
    return (-pos, order_key(exps))


def _inv_key(term):
    # ascending sort under this key == descending in the module order
    pos, exps = term
    return (pos, sum(exps), tuple(reversed(exps)))


def _vec_of_polys(polys) -> dict:
    vec = {}
    for pos, p in enumerate(polys):
        for exps, coeff in p.terms.items():
            vec[(pos, exps)] = coeff
    return vec


def _polys_of_vec(vec, rank, ctx):
    parts = [dict() for _ in range(rank)]
    for (pos, exps), coeff in vec.items():
        parts[pos][exps] = coeff
    return tuple(LocalPolynomial(ctx, part, _clean=True) for part in parts)


def _truncate_vec(vec, cap):
    if cap is None:
        return vec
    return {t: c for t, c in vec.items() if sum(t[1]) < cap}


def _vec_canonical(vec):
    return tuple(sorted((t, repr(c)) for t, c in vec.items()))


class FreeModuleElement:
    """Element of a free module A^k, one polynomial per position."""

    __slots__ = ("components", "_hash")

    def __init__(self, components):
        comps = tuple(components)
        if not comps:
            raise ValueError("a module element needs at least one component")
        ctx = comps[0].context
        for c in comps[1:]:
            if c.context != ctx:
                raise ContextMismatchError("components over different contexts")
        self.components = comps
        self._hash = None

    @property
    def rank(self) -> int:
        return len(self.components)

    @property
    def context(self) -> RingContext:
        return self.components[0].context

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def leading_position(self):
        vec = _vec_of_polys(self.components)
        if not vec:
            raise ValueError("zero element has no leading term")
        pos, exps = max(vec, key=_term_key)
        return pos, exps

    def __eq__(self, other):
        if not isinstance(other, FreeModuleElement):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.components)
        return self._hash

    def __repr__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"


class MonomialStaircase:
    """Minimal monomial generators of a leading ideal or leading module.

    One antichain of exponent vectors per position, plus the optional
    degree cap.  The complement of the staircase (the standard
    monomials) is a divisor-closed set whose cardinality is the
    colength.
    """

    __slots__ = ("num_vars", "rank", "positions", "degree_cap")

    def __init__(self, num_vars, rank, positions, degree_cap=None):
        self.num_vars = num_vars
        self.rank = rank
        self.positions = tuple(tuple(sorted(p)) for p in positions)
        self.degree_cap = degree_cap

    def minimal_generators(self, position=0):
        return self.positions[position]

    def covers(self, exps, position=0) -> bool:
        """Does the monomial at this position lie in the leading structure?"""
        if self.degree_cap is not None and sum(exps) >= self.degree_cap:
            return True
        return any(monomial_divides(g, exps) for g in self.positions[position])

    def is_finite(self) -> bool:
        """Finite colength: every position must confine every variable."""
        if self.degree_cap is not None:
            return True
        for gens in self.positions:
            if any(len(g) == 0 or sum(g) == 0 for g in gens):
                continue  # unit generator, position contributes nothing
            for i in range(self.num_vars):
                if not any(
                    g[i] > 0 and all(e == 0 for j, e in enumerate(g) if j != i)
                    for g in gens
                ):
                    return False
        return True

    def count_standard_monomials(self):
        """Number of monomials outside the staircase, or INFINITE.

        Walks the divisor-closed complement breadth-first from 1, so the
        cost is proportional to the answer plus its boundary.
        """
        if not self.is_finite():
            return INFINITE
        total = 0
        for gens in self.positions:
            if self.degree_cap is not None and self.degree_cap <= 0:
                continue
            if any(sum(g) == 0 for g in gens):
                continue  # unit generator kills the whole position
            start = (0,) * self.num_vars
            seen = {start}
            stack = [start]
            while stack:
                m = stack.pop()
                total += 1
                for i in range(self.num_vars):
                    m2 = m[:i] + (m[i] + 1,) + m[i + 1 :]
                    if m2 in seen:
                        continue
                    seen.add(m2)
                    if self.degree_cap is not None and sum(m2) >= self.degree_cap:
                        continue
                    if any(monomial_divides(g, m2) for g in gens):
                        continue
                    stack.append(m2)
        return total

    def dimension(self) -> int:
        """Krull dimension of the quotient by the (rank-1) leading ideal.

        Combinatorial rule: the largest coordinate subspace avoiding the
        support of every generator.  Returns -1 for the unit ideal
        (empty scheme).
        """
        if self.rank != 1:
            raise ValueError("dimension is defined for ideals (rank 1)")
        gens = self.positions[0]
        if any(sum(g) == 0 for g in gens):
            return -1
        if self.degree_cap is not None and self.degree_cap <= 0:
            return -1
        if self.degree_cap is not None:
            return 0
        n = self.num_vars
        supports = [frozenset(i for i, e in enumerate(g) if e > 0) for g in gens]
        best = 0
        for mask in range(1, 1 << n):
            subset = {i for i in range(n) if mask >> i & 1}
            if all(not s <= subset for s in supports):
                best = max(best, len(subset))
        return best

    def __repr__(self):
        return (
            f"MonomialStaircase(rank={self.rank}, "
            f"positions={self.positions}, cap={self.degree_cap})"
        )


class _Engine:
    """Shared state for one standard-basis computation."""

    __slots__ = ("field", "cap", "budget", "spent")

    def __init__(self, field, cap, budget):
        self.field = field
        self.cap = cap
        self.budget = budget if budget is not None else DEFAULT_STEP_BUDGET
        self.spent = 0

    def charge(self):
        self.spent += 1
        if self.spent > self.budget:
            raise StepBudgetExceededError(self.budget)


def _vec_ecart(vec, lead_deg):
    return max(sum(t[1]) for t in vec) - lead_deg


def _reduce_once(h, lt_h, g, lt_g, lc_g, eng):
    """One Mora reduction step: cancel the leading term of h against g."""
    eng.charge()
    field = eng.field
    factor = field.div(h[lt_h], lc_g)
    shift = tuple(a - b for a, b in zip(lt_h[1], lt_g[1]))
    cap = eng.cap
    for (pos, exps), coeff in g.items():
        ne = tuple(a + b for a, b in zip(exps, shift))
        if cap is not None and sum(ne) >= cap:
            continue
        t = (pos, ne)
        prev = h.get(t)
        delta = field.mul(factor, coeff)
        val = field.neg(delta) if prev is None else field.sub(prev, delta)
        if val == field.zero:
            h.pop(t, None)
        else:
            h[t] = val


def _weak_normal_form(vec, reducers, eng):
    """Mora weak normal form of vec against the reducer list.

    reducers holds (lead, lead_coeff, ecart, vec) tuples; the list is
    copied, then extended with intermediate remainders whenever the
    chosen reducer has bigger ecart (the tangent-cone trick that makes
    local division terminate).
    """
    local = list(reducers)
    h = dict(_truncate_vec(vec, eng.cap))
    while h:
        lt_h = max(h, key=_term_key)
        pos_h, exps_h = lt_h
        # reducer with dividing lead: minimal ecart, then largest lead,
        # then earliest insertion
        best = None
        best_ec = None
        best_key = None
        for entry in local:
            lt_g, _, ec_g, _ = entry
            if lt_g[0] != pos_h or not monomial_divides(lt_g[1], exps_h):
                continue
            key = _term_key(lt_g)
            if best is None or ec_g < best_ec or (ec_g == best_ec and key > best_key):
                best, best_ec, best_key = entry, ec_g, key
        if best is None:
            return h
        lt_g, lc_g, ec_g, g = best
        deg_h = sum(exps_h)
        ec_h = _vec_ecart(h, deg_h)
        if ec_g > ec_h:
            local.append((lt_h, h[lt_h], ec_h, dict(h)))
        _reduce_once(h, lt_h, g, lt_g, lc_g, eng)
    return h


def _spair(gi, lt_i, gj, lt_j, eng):
    """S-vector with both leading terms scaled to coefficient 1."""
    field = eng.field
    cap = eng.cap
    lcm = monomial_lcm(lt_i[1], lt_j[1])
    out = {}

    def accumulate(g, lt, sign):
        lc = g[lt]
        shift = tuple(a - b for a, b in zip(lcm, lt[1]))
        for (pos, exps), coeff in g.items():
            ne = tuple(a + b for a, b in zip(exps, shift))
            if cap is not None and sum(ne) >= cap:
                continue
            t = (pos, ne)
            delta = field.div(coeff, lc)
            if sign < 0:
                delta = field.neg(delta)
            prev = out.get(t)
            val = delta if prev is None else field.add(prev, delta)
            if val == field.zero:
                out.pop(t, None)
            else:
                out[t] = val

    accumulate(gi, lt_i, +1)
    accumulate(gj, lt_j, -1)
    return out


def _standard_basis_vecs(vecs, field, cap, rank, budget):
    """Mora's tangent-cone algorithm with normal pair selection.

    Pairs are processed largest lcm first (lowest degree, the normal
    strategy for a local order).  The coprime-lead criterion is applied
    for ideals only; the chain criterion needs both companion pairs to
    have been treated already, which is the classically safe variant.
    """
    eng = _Engine(field, cap, budget)

    prepared = []
    for vec in vecs:
        vec = _truncate_vec(vec, cap)
        if not vec:
            continue
        lt = max(vec, key=_term_key)
        lc = vec[lt]
        if lc != field.one:
            inv = field.div(field.one, lc)
            vec = {t: field.mul(inv, c) for t, c in vec.items()}
        prepared.append(vec)
    prepared.sort(key=lambda v: (_inv_key(max(v, key=_term_key)), _vec_canonical(v)))

    basis = []  # (lead, lead_coeff, ecart, vec)
    pairs = []  # heap of (pair sort key, i, j)
    done = set()

    def admit(vec):
        lt = max(vec, key=_term_key)
        idx = len(basis)
        for j, (lt_j, _, _, _) in enumerate(basis):
            if lt_j[0] == lt[0]:
                lcm = monomial_lcm(lt_j[1], lt[1])
                heapq.heappush(
                    pairs, ((lt[0], sum(lcm), tuple(reversed(lcm)), j, idx), j, idx)
                )
        basis.append((lt, vec[lt], _vec_ecart(vec, sum(lt[1])), vec))

    for vec in prepared:
        admit(vec)

    while pairs:
        _, i, j = heapq.heappop(pairs)
        if (i, j) in done:
            continue
        done.add((i, j))
        lt_i = basis[i][0]
        lt_j = basis[j][0]
        # coprime-lead criterion, ideals only
        if rank == 1 and all(min(a, b) == 0 for a, b in zip(lt_i[1], lt_j[1])):
            continue
        lcm = monomial_lcm(lt_i[1], lt_j[1])
        skip = False
        for l, (lt_l, _, _, _) in enumerate(basis):
            if l == i or l == j:
                continue
            if lt_l[0] != lt_i[0] or not monomial_divides(lt_l[1], lcm):
                continue
            a, b = (i, l) if i < l else (l, i)
            c, d = (j, l) if j < l else (l, j)
            if (a, b) in done and (c, d) in done:
                skip = True
                break
        if skip:
            continue
        s = _spair(basis[i][3], lt_i, basis[j][3], lt_j, eng)
        if not s:
            continue
        h = _weak_normal_form(s, basis, eng)
        if not h:
            continue
        lt = max(h, key=_term_key)
        lc = h[lt]
        if lc != field.one:
            inv = field.div(field.one, lc)
            h = {t: field.mul(inv, c) for t, c in h.items()}
        admit(h)

    # minimal standard basis: keep an antichain of leading terms,
    # lowest degree first for determinism
    order = sorted(range(len(basis)), key=lambda idx: _inv_key(basis[idx][0]))
    kept = []
    kept_leads = []
    for idx in order:
        lt = basis[idx][0]
        if any(
            lt_k[0] == lt[0] and monomial_divides(lt_k[1], lt[1]) for lt_k in kept_leads
        ):
            continue
        kept.append(basis[idx][3])
        kept_leads.append(lt)
    return kept


class IdealBasis:
    """Generators of an ideal, with cached standard-basis data.

    degree_cap = c means the ideal additionally contains every monomial
    of total degree >= c.  Instances are immutable apart from their own
    caches, so sharing across threads or processes is safe.
    """

    __slots__ = ("context", "generators", "degree_cap", "_standard", "_staircase")

    def __init__(self, context, generators, degree_cap=None):
        self.context = context
        gens = []
        for g in generators:
            if g.context != context:
                raise ContextMismatchError("generator over a different context")
            if not g.is_zero():
                gens.append(g)
        self.generators = tuple(gens)
        if degree_cap is not None and degree_cap < 0:
            raise ValueError("degree cap must be non-negative")
        self.degree_cap = degree_cap
        self._standard = None
        self._staircase = None

    @property
    def rank(self) -> int:
        return 1

    def _vectors(self):
        return [_vec_of_polys([g]) for g in self.generators]

    def _elements_of_vecs(self, vecs):
        return tuple(_polys_of_vec(v, 1, self.context)[0] for v in vecs)

    def with_cap(self, degree_cap) -> "IdealBasis":
        return IdealBasis(self.context, self.generators, degree_cap=degree_cap)

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.generators) or "0"
        cap = f" + m^{self.degree_cap}" if self.degree_cap is not None else ""
        return f"<ideal ({inside}){cap}>"


class SubmoduleBasis:
    """Generators of a submodule of a free module A^rank.

    The degree cap is interpreted per position: cap c adds every
    monomial of degree >= c in every position.
    """

    __slots__ = (
        "context",
        "su_rank",
        "generators",
        "degree_cap",
        "_standard",
        "_staircase",
    )

    def __init__(self, context, rank, generators, degree_cap=None):
        self.context = context
        if rank < 1:
            raise ValueError("module rank must be at least 1")
        self.su_rank = rank
        gens = []
        for g in generators:
            if g.context != context:
                raise ContextMismatchError("generator over a different context")
            if g.rank != rank:
                raise ValueError(f"generator rank {g.rank} does not match {rank}")
            if not g.is_zero():
                gens.append(g)
        self.generators = tuple(gens)
        if degree_cap is not None and degree_cap < 0:
            raise ValueError("degree cap must be non-negative")
        self.degree_cap = degree_cap
        self._standard = None
        self._staircase = None

    @property
    def rank(self) -> int:
        return self.su_rank

    def _vectors(self):
        return [_vec_of_polys(g.components) for g in self.generators]

    def _elements_of_vecs(self, vecs):
        return tuple(
            FreeModuleElement(_polys_of_vec(v, self.su_rank, self.context))
            for v in vecs
        )

    def __repr__(self):
        cap = f" + m^{self.degree_cap}*A^k" if self.degree_cap is not None else ""
        return f"<submodule of A^{self.su_rank}, {len(self.generators)} generators{cap}>"


def standard_basis(basis, step_budget=None):
    """Compute (and cache) a minimal standard basis of the ideal or
    submodule; returns the basis elements, leading terms monic."""
    if basis._standard is None:
        vecs = _standard_basis_vecs(
            basis._vectors(),
            basis.context.field,
            basis.degree_cap,
            basis.rank,
            step_budget,
        )
        basis._standard = basis._elements_of_vecs(vecs)
    return basis._standard


def mora_normal_form(element, basis, step_budget=None):
    """Mora weak normal form of a polynomial or module element against
    the generators of `basis`, exactly as given.

    The remainder is zero if and only if the element lies in the span
    over the localized ring, provided the generators form a standard
    basis (reduce against standard_basis(...) for membership tests).
    """
    if isinstance(basis, (IdealBasis, SubmoduleBasis)):
        ctx = basis.context
        cap = basis.degree_cap
        vecs = basis._vectors()
        rank = basis.rank
    else:
        gens = list(basis)
        ctx = gens[0].context if gens else element.context
        cap = None
        if gens and isinstance(gens[0], FreeModuleElement):
            vecs = [_vec_of_polys(g.components) for g in gens]
            rank = gens[0].rank
        else:
            vecs = [_vec_of_polys([g]) for g in gens]
            rank = 1

    if isinstance(element, FreeModuleElement):
        target = _vec_of_polys(element.components)
        if element.rank != rank and vecs:
            raise ValueError("rank mismatch between element and basis")
    else:
        if element.context != ctx and vecs:
            raise ContextMismatchError("element over a different context")
        target = _vec_of_polys([element])

    eng = _Engine(ctx.field, cap, step_budget)
    reducers = []
    for vec in vecs:
        vec = _truncate_vec(vec, cap)
        if not vec:
            continue
        lt = max(vec, key=_term_key)
        reducers.append((lt, vec[lt], _vec_ecart(vec, sum(lt[1])), vec))
    out = _weak_normal_form(target, reducers, eng)
    if isinstance(element, FreeModuleElement):
        return FreeModuleElement(_polys_of_vec(out, element.rank, element.context))
    return _polys_of_vec(out, 1, element.context)[0]


def leading_structure(basis, step_budget=None) -> MonomialStaircase:
    """Minimal generators of the leading ideal (or leading module)."""
    if basis._staircase is None:
        std = standard_basis(basis, step_budget)
        rank = basis.rank
        per_position = [[] for _ in range(rank)]
        for g in std:
            if isinstance(g, FreeModuleElement):
                pos, exps = g.leading_position()
            else:
                pos, exps = 0, g.leading_monomial()
            per_position[pos].append(exps)
        # the engine already returns an antichain per position
        basis._staircase = MonomialStaircase(
            basis.context.num_vars, rank, per_position, basis.degree_cap
        )
    return basis._staircase


def colength(basis, step_budget=None):
    """Length of the quotient by the ideal or submodule in the localized
    ring: the number of standard monomials, or INFINITE."""
    return leading_structure(basis, step_budget).count_standard_monomials()


def krull_dimension(basis, step_budget=None) -> int:
    """Krull dimension of the quotient by an ideal; -1 for the unit ideal."""
    if basis.rank != 1:
        raise ValueError("Krull dimension applies to ideals")
    stairs = leading_structure(basis, step_budget)
    if not stairs.positions[0] and stairs.degree_cap is None:
        return basis.context.num_vars
    return stairs.dimension()


def reduces_to_zero(element, basis, step_budget=None) -> bool:
    """Membership of the element in the localized ideal or submodule."""
    standard_basis(basis, step_budget)
    if basis.rank == 1 and not isinstance(element, FreeModuleElement):
        probe = IdealBasis(basis.context, basis._standard, basis.degree_cap)
    else:
        probe = SubmoduleBasis(
            basis.context, basis.rank, basis._standard, basis.degree_cap
        )
    out = mora_normal_form(element, probe, step_budget)
    return out.is_zero()


# ideal constructions


def _merge_caps(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def ideal_sum(first, *rest) -> IdealBasis:
    gens = list(first.generators)
    cap = first.degree_cap
    for other in rest:
        if other.context != first.context:
            raise ContextMismatchError("ideal sum over mixed contexts")
        gens.extend(other.generators)
        cap = _merge_caps(cap, other.degree_cap)
    return IdealBasis(first.context, gens, degree_cap=cap)


def ideal_product(a: IdealBasis, b: IdealBasis) -> IdealBasis:
    if a.context != b.context:
        raise ContextMismatchError("ideal product over mixed contexts")
    if a.degree_cap is not None or b.degree_cap is not None:
        raise ValueError("ideal products of capped bases are not supported")
    seen = set()
    gens = []
    for p in a.generators:
        for q in b.generators:
            prod = p * q
            if prod.is_zero():
                continue
            key = tuple(sorted(prod.terms.items()))
            if key in seen:
                continue
            seen.add(key)
            gens.append(prod)
    return IdealBasis(a.context, gens)


def ideal_power(basis: IdealBasis, exponent: int) -> IdealBasis:
    """All products of `exponent` generators (multisets, deduplicated)."""
    if exponent < 0:
        raise ValueError("ideal powers need a non-negative exponent")
    if basis.degree_cap is not None:
        raise ValueError("ideal powers of capped bases are not supported")
    ctx = basis.context
    if exponent == 0:
        return IdealBasis(ctx, [ctx.one()])
    seen = set()
    gens = []
    for combo in combinations_with_replacement(basis.generators, exponent):
        prod = combo[0]
        for extra in combo[1:]:
            prod = prod * extra
        if prod.is_zero():
            continue
        key = tuple(sorted(prod.terms.items()))
        if key in seen:
            continue
        seen.add(key)
        gens.append(prod)
    return IdealBasis(ctx, gens)


def maximal_ideal(ctx: RingContext) -> IdealBasis:
    return IdealBasis(ctx, ctx.variables())


def is_maximal_ideal_basis(basis: IdealBasis) -> bool:
    """True when the generators are literally the variables (up to scale)."""
    if basis.degree_cap is not None:
        return False
    seen = set()
    for g in basis.generators:
        if len(g.terms) != 1:
            return False
        exps = next(iter(g.terms))
        if sum(exps) != 1:
            return False
        seen.add(exps)
    return len(seen) == basis.context.num_vars
