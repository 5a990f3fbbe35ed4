"""Coefficient fields: exact rationals and odd prime fields.

Rational arithmetic is the reference. A prime field (32003 is the
customary modulus) is a faster drop-in for cross-checks, with the usual
caveat that lengths over an unlucky prime can differ from their
characteristic-zero values.
"""

from __future__ import annotations

from fractions import Fraction


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Rationals:
    """The field of rational numbers; elements are Fraction values."""

    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError(f"cannot interpret {value!r} as a rational number")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def neg(self, a):
        return -a

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("germlab.QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """Integers modulo an odd prime p, elements stored as ints in [0, p)."""

    def __init__(self, p: int):
        if p <= 2 or not is_prime(p):
            raise ValueError(f"field modulus must be an odd prime, got {p}")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def coerce(self, value):
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(
                    f"denominator of {value} vanishes modulo {self.p}"
                )
            return value.numerator * pow(den, self.p - 2, self.p) % self.p
        raise TypeError(f"cannot interpret {value!r} modulo {self.p}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return a * pow(b, self.p - 2, self.p) % self.p

    def neg(self, a):
        return -a % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("germlab.GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()
