"""Sparse exact polynomials viewed as germs at the origin.

Polynomials here represent elements of the local ring of formal power
series at the origin: a series with nonzero constant term is a unit, and
all ideal-theoretic questions downstream are asked in that localized
sense.  Monomials are compared in the anti-graded reverse lexicographic
order: lower total degree is larger, so the constant monomial 1 is the
largest of all and leading terms pick out the tangent-cone part of a
germ.  Ties within a degree are broken reverse lexicographically (the
exponent vector whose last nonzero entry of the difference is negative
wins), so with variables x, y we get 1 > x > y > x^2 > x*y > y^2 > ...
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ContextMismatchError
from .fields import QQ, PrimeField, Rationals

Exponents = tuple  # exponent vector, one non-negative int per variable


def total_degree(exps: Exponents) -> int:
    return sum(exps)


def order_key(exps: Exponents):
    """Sort key realizing the anti-graded reverse lexicographic order.

    Larger key means larger monomial.  The degree part is negated (lower
    degree wins) and the tie-break negates the reversed exponent vector,
    which is the standard reverse-lexicographic trick.
    """
    return (-sum(exps), tuple(-e for e in reversed(exps)))


def compare(a: Exponents, b: Exponents) -> int:
    """Three-way comparison of monomials; positive when a is larger.

    compare((2, 0), (1, 1)) > 0, i.e. x^2 > x*y: within a degree the
    reverse lexicographic tie-break favors the monomial less divisible
    by the last variable.
    """
    ka, kb = order_key(a), order_key(b)
    if ka > kb:
        return 1
    if ka < kb:
        return -1
    return 0


def monomial_divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def monomial_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


class RingContext:
    """Variable names, coefficient field and the fixed local order.

    The order is not configurable: every context uses the anti-graded
    reverse lexicographic order above.  Contexts compare by value so two
    independently built contexts over the same variables interoperate.
    """

    __slots__ = ("var_names", "field")

    def __init__(self, var_names, field=None):
        names = tuple(var_names)
        if not names:
            raise ValueError("a ring context needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not name.isidentifier():
                raise ValueError(f"variable name {name!r} is not an identifier")
        self.var_names = names
        self.field = field if field is not None else QQ
        if not isinstance(self.field, (Rationals, PrimeField)):
            raise TypeError(f"unsupported coefficient field {field!r}")

    @property
    def num_vars(self) -> int:
        return len(self.var_names)

    @property
    def order(self) -> str:
        return "anti-graded revlex"

    def __eq__(self, other):
        return (
            isinstance(other, RingContext)
            and self.var_names == other.var_names
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self.var_names, self.field))

    def __repr__(self):
        return f"RingContext({list(self.var_names)}, {self.field!r})"

    # constructors

    def zero(self) -> "LocalPolynomial":
        return LocalPolynomial(self, {})

    def one(self) -> "LocalPolynomial":
        return self.constant(1)

    def constant(self, value) -> "LocalPolynomial":
        c = self.field.coerce(value)
        if c == self.field.zero:
            return self.zero()
        return LocalPolynomial(self, {(0,) * self.num_vars: c})

    def variable(self, which) -> "LocalPolynomial":
        if isinstance(which, str):
            try:
                idx = self.var_names.index(which)
            except ValueError:
                raise KeyError(f"no variable {which!r} in {self.var_names}") from None
        else:
            idx = which
            if not 0 <= idx < self.num_vars:
                raise IndexError(f"variable index {idx} out of range")
        exps = tuple(1 if i == idx else 0 for i in range(self.num_vars))
        return LocalPolynomial(self, {exps: self.field.one})

    def variables(self):
        return tuple(self.variable(i) for i in range(self.num_vars))

    def monomial(self, exps, coeff=1) -> "LocalPolynomial":
        exps = tuple(exps)
        if len(exps) != self.num_vars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps}")
        c = self.field.coerce(coeff)
        if c == self.field.zero:
            return self.zero()
        return LocalPolynomial(self, {exps: c})


class LocalPolynomial:
    """Immutable sparse polynomial over a ring context.

    Terms map exponent tuples to nonzero field elements.  Instances are
    treated as read-only once built; every operation returns a fresh
    polynomial, which keeps sharing across ideal bases safe.
    """

    __slots__ = ("context", "terms", "_hash")

    def __init__(self, context, terms, _clean=False):
        self.context = context
        if _clean:
            self.terms = terms
        else:
            field = context.field
            clean = {}
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != context.num_vars or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent vector {exps}")
                c = field.coerce(coeff)
                if c != field.zero:
                    clean[exps] = c
            self.terms = clean
        self._hash = None

    # basic queries

    def is_zero(self) -> bool:
        return not self.terms

    def is_unit(self) -> bool:
        """A germ is a unit exactly when its constant term is nonzero."""
        return (0,) * self.context.num_vars in self.terms

    def constant_term(self):
        return self.terms.get((0,) * self.context.num_vars, self.context.field.zero)

    def total_degree(self) -> int:
        """Largest total degree among terms; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def order_of_vanishing(self) -> int:
        """Smallest total degree among terms; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return min(sum(e) for e in self.terms)

    def leading_monomial(self) -> Exponents:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order_key)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def sorted_terms(self):
        """Terms from the leading one downwards."""
        return sorted(self.terms.items(), key=lambda kv: order_key(kv[0]), reverse=True)

    # arithmetic

    def _check(self, other):
        if self.context != other.context:
            raise ContextMismatchError(
                f"mixed contexts {self.context!r} and {other.context!r}"
            )

    def _lift(self, other):
        if isinstance(other, LocalPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return self.context.constant(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        self._check(other)
        field = self.context.field
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            prev = out.get(exps)
            val = coeff if prev is None else field.add(prev, coeff)
            if val == field.zero:
                out.pop(exps, None)
            else:
                out[exps] = val
        return LocalPolynomial(self.context, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        field = self.context.field
        return LocalPolynomial(
            self.context,
            {e: field.neg(c) for e, c in self.terms.items()},
            _clean=True,
        )

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        self._check(other)
        field = self.context.field
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exps = monomial_mul(ea, eb)
                prod = field.mul(ca, cb)
                prev = out.get(exps)
                val = prod if prev is None else field.add(prev, prod)
                if val == field.zero:
                    out.pop(exps, None)
                else:
                    out[exps] = val
        return LocalPolynomial(self.context, out, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a non-negative integer")
        result = self.context.one()
        for _ in range(n):
            result = result * self
        return result

    def scale(self, coeff) -> "LocalPolynomial":
        field = self.context.field
        c = field.coerce(coeff)
        if c == field.zero:
            return self.context.zero()
        return LocalPolynomial(
            self.context,
            {e: field.mul(c, v) for e, v in self.terms.items()},
            _clean=True,
        )

    def monic(self) -> "LocalPolynomial":
        if not self.terms:
            return self
        field = self.context.field
        lc = self.leading_coefficient()
        if lc == field.one:
            return self
        return self.scale(field.div(field.one, lc))

    # calculus and truncation

    def partial_derivative(self, index: int) -> "LocalPolynomial":
        """Formal partial derivative with respect to the 0-based variable index."""
        if not 0 <= index < self.context.num_vars:
            raise IndexError(f"variable index {index} out of range")
        field = self.context.field
        out = {}
        for exps, coeff in self.terms.items():
            e = exps[index]
            if e == 0:
                continue
            lowered = exps[:index] + (e - 1,) + exps[index + 1 :]
            c = field.mul(coeff, field.coerce(e))
            if c != field.zero:
                out[lowered] = c
        return LocalPolynomial(self.context, out, _clean=True)

    def truncate(self, level: int) -> "LocalPolynomial":
        """Drop every term of total degree >= level (reduce modulo that
        power of the maximal ideal)."""
        if level < 0:
            raise ValueError("truncation level must be non-negative")
        return LocalPolynomial(
            self.context,
            {e: c for e, c in self.terms.items() if sum(e) < level},
            _clean=True,
        )

    def coerce_to(self, context: RingContext) -> "LocalPolynomial":
        """Rebuild this polynomial over another context with the same
        variables (used to move rational input into a prime field)."""
        if context.var_names != self.context.var_names:
            raise ContextMismatchError("variable names differ")
        return LocalPolynomial(context, dict(self.terms))

    # value semantics

    def __eq__(self, other):
        if not isinstance(other, LocalPolynomial):
            return NotImplemented
        return self.context == other.context and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.context, tuple(sorted(self.terms.items()))))
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"<{format_polynomial(self)}>"


def format_polynomial(p: LocalPolynomial) -> str:
    """Render a polynomial in the corpus expression grammar.

    The output parses back to an equal polynomial: explicit '*' between
    factors, '^' for powers, rational coefficients as a/b.
    """
    if p.is_zero():
        return "0"
    names = p.context.var_names
    rational = p.context.field.characteristic == 0
    pieces = []
    for exps, coeff in p.sorted_terms():
        if rational:
            negative = coeff < 0
            mag = -coeff if negative else coeff
        else:
            negative = False
            mag = coeff
        factors = []
        for name, e in zip(names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        coeff_txt = str(mag)
        if factors and mag == 1:
            body = "*".join(factors)
        elif factors:
            body = "*".join([coeff_txt] + factors)
        else:
            body = coeff_txt
        pieces.append(("-" if negative else "+", body))
    sign, body = pieces[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text
