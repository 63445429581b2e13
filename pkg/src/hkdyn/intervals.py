"""Certified interval arithmetic with exact rational endpoints.

Every operation returns an interval guaranteed to contain the true value;
square roots are outward-rounded to a requested dyadic precision, all other
operations are exact on the endpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> "RationalInterval":
        f = Fraction(x)
        return cls(f, f)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __add__(self, other) -> "RationalInterval":
        other = _coerce(other)
        return RationalInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __mul__(self, other) -> "RationalInterval":
        other = _coerce(other)
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return RationalInterval(min(products), max(products))

    __rmul__ = __mul__

    def reciprocal(self) -> "RationalInterval":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval straddles zero")
        return RationalInterval(1 / self.hi, 1 / self.lo)

    def power(self, k: int) -> "RationalInterval":
        """Integer power, exact. Negative k requires the interval to miss 0."""
        if k == 0:
            return RationalInterval.point(1)
        if k < 0:
            return self.reciprocal().power(-k)
        result = RationalInterval.point(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def sqrt(self, precision_bits: int = 96) -> "RationalInterval":
        """Outward-rounded square root of a nonnegative interval."""
        if self.lo < 0:
            raise ValueError("square root of an interval below zero")
        return RationalInterval(
            _sqrt_lower(self.lo, precision_bits), _sqrt_upper(self.hi, precision_bits)
        )

    def log_float(self) -> float:
        """Float natural log of the midpoint; safe for huge rationals."""
        m = self.mid
        if m <= 0:
            raise ValueError("log of a nonpositive interval")
        return math.log(m.numerator) - math.log(m.denominator)

    def __float__(self) -> float:
        m = self.mid
        try:
            return float(m)
        except OverflowError:
            return math.inf if m > 0 else -math.inf

    def __repr__(self) -> str:
        return f"RationalInterval({self.lo}, {self.hi})"


def _coerce(x) -> RationalInterval:
    if isinstance(x, RationalInterval):
        return x
    return RationalInterval.point(x)


def _sqrt_lower(x: Fraction, bits: int) -> Fraction:
    if x == 0:
        return Fraction(0)
    scale = 1 << bits
    v = x.numerator * x.denominator * scale * scale
    return Fraction(math.isqrt(v), x.denominator * scale)


def _sqrt_upper(x: Fraction, bits: int) -> Fraction:
    if x == 0:
        return Fraction(0)
    scale = 1 << bits
    v = x.numerator * x.denominator * scale * scale
    r = math.isqrt(v)
    if r * r < v:
        r += 1
    return Fraction(r, x.denominator * scale)
