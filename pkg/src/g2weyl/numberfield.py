"""Exact arithmetic in the real number field generated by sqrt(2) and sqrt(3).

Every element is stored uniquely as a + b*sqrt(2) + c*sqrt(3) + d*sqrt(6) with
rational coordinates, which closes all coefficients occurring in the rank-2
bracket tables (integers, rationals, sqrt(2), sqrt(3), sqrt(6), sqrt(3/2), ...).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

_RATIONAL_TYPES = (int, Fraction)


class UnsupportedRadicalError(ValueError):
    """Square root requested outside the supported field."""


class FieldZeroDivisionError(ZeroDivisionError):
    """Inverse of the zero field element."""


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an int or Fraction, got {type(value).__name__}")


@dataclass(frozen=True, slots=True)
class FieldElement:
    """An element a + b*sqrt(2) + c*sqrt(3) + d*sqrt(6) with exact coordinates."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))
        object.__setattr__(self, "c", _frac(self.c))
        object.__setattr__(self, "d", _frac(self.d))

    # -- conversions ---------------------------------------------------

    @classmethod
    def of(cls, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            return value
        if isinstance(value, _RATIONAL_TYPES):
            return cls(_frac(value))
        raise TypeError(f"cannot interpret {value!r} as a field element")

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.a

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- ring operations -----------------------------------------------

    def __add__(self, other) -> "FieldElement":
        o = FieldElement.of(other)
        return FieldElement(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other) -> "FieldElement":
        return self + (-FieldElement.of(other))

    def __rsub__(self, other) -> "FieldElement":
        return FieldElement.of(other) + (-self)

    def __mul__(self, other) -> "FieldElement":
        o = FieldElement.of(other)
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        # basis products: sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3,
        # sqrt3*sqrt6 = 3*sqrt2, sqrt2^2 = 2, sqrt3^2 = 3, sqrt6^2 = 6
        return FieldElement(
            a1 * a2 + 2 * b1 * b2 + 3 * c1 * c2 + 6 * d1 * d2,
            a1 * b2 + b1 * a2 + 3 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        """Exact inverse via conjugation over sqrt(3), then over sqrt(2)."""
        if self.is_zero():
            raise FieldZeroDivisionError("zero field element has no inverse")
        # x = (a + b*sqrt2) + (c + d*sqrt2)*sqrt3;  x * conj3(x) lies in Q(sqrt2)
        conj3 = FieldElement(self.a, self.b, -self.c, -self.d)
        norm3 = self * conj3  # c = d = 0 now
        u, v = norm3.a, norm3.b
        denom = u * u - 2 * v * v  # (u + v*sqrt2)(u - v*sqrt2), rational
        if denom == 0:
            raise FieldZeroDivisionError("degenerate norm while inverting")
        conj2 = FieldElement(u, -v)
        return conj3 * conj2 * FieldElement(Fraction(1, 1) / denom)

    def __truediv__(self, other) -> "FieldElement":
        return self * FieldElement.of(other).inverse()

    def __rtruediv__(self, other) -> "FieldElement":
        return FieldElement.of(other) * self.inverse()

    def __pow__(self, exponent: int) -> "FieldElement":
        if not isinstance(exponent, int):
            raise TypeError("exponent must be an integer")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- serialization ---------------------------------------------------

    def to_record(self) -> dict:
        """Four-coordinate record with rationals rendered as "p/q" strings."""
        return {
            "a": _fraction_str(self.a),
            "b": _fraction_str(self.b),
            "c": _fraction_str(self.c),
            "d": _fraction_str(self.d),
        }

    @classmethod
    def from_record(cls, record: dict) -> "FieldElement":
        return cls(*(Fraction(record.get(key, "0")) for key in "abcd"))

    # -- display ---------------------------------------------------------

    def __str__(self) -> str:
        terms = []
        for coeff, radical in ((self.a, ""), (self.b, "√2"), (self.c, "√3"), (self.d, "√6")):
            if coeff:
                terms.append(_term_str(coeff, radical))
        if not terms:
            return "0"
        out = terms[0]
        for term in terms[1:]:
            out += " - " + term[1:] if term.startswith("-") else " + " + term
        return out

    def __repr__(self) -> str:
        return f"FieldElement({self})"


def _fraction_str(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _term_str(coeff: Fraction, radical: str) -> str:
    if not radical:
        return _fraction_str(coeff)
    num, den = coeff.numerator, coeff.denominator
    sign = "-" if num < 0 else ""
    head = radical if abs(num) == 1 else f"{abs(num)}{radical}"
    return f"{sign}{head}" if den == 1 else f"{sign}{head}/{den}"


ZERO = FieldElement()
ONE = FieldElement(Fraction(1))
SQRT2 = FieldElement(0, Fraction(1), 0, 0)
SQRT3 = FieldElement(0, 0, Fraction(1), 0)
SQRT6 = FieldElement(0, 0, 0, Fraction(1))


def rational(p, q: int = 1) -> FieldElement:
    """Shorthand for the rational field element p/q."""
    return FieldElement(Fraction(p, q))


def _squarefree_part(n: int) -> int:
    part = 1
    factor = 2
    while factor * factor <= n:
        exponent = 0
        while n % factor == 0:
            n //= factor
            exponent += 1
        if exponent % 2:
            part *= factor
        factor += 1
    return part * n


def sqrt_rational(value) -> FieldElement:
    """Exact square root of a non-negative rational, if it lies in the field.

    The squarefree part of numerator*denominator must divide 6; anything else
    raises UnsupportedRadicalError.
    """
    r = _frac(value)
    if r < 0:
        raise UnsupportedRadicalError(f"square root of negative rational {r}")
    if r == 0:
        return ZERO
    p, q = r.numerator, r.denominator
    s = _squarefree_part(p * q)
    if 6 % s != 0:
        raise UnsupportedRadicalError(f"sqrt({r}) lies outside the sqrt(2)/sqrt(3) field")
    # sqrt(p/q) = sqrt(p*q)/q = k*sqrt(s)/q with p*q = k^2 * s
    k = _isqrt_exact(p * q // s)
    coeff = Fraction(k, q)
    if s == 1:
        return FieldElement(coeff)
    if s == 2:
        return FieldElement(0, coeff)
    if s == 3:
        return FieldElement(0, 0, coeff)
    return FieldElement(0, 0, 0, coeff)


def _isqrt_exact(n: int) -> int:
    import math

    root = math.isqrt(n)
    if root * root != n:
        raise UnsupportedRadicalError(f"{n} is not a perfect square after squarefree reduction")
    return root
