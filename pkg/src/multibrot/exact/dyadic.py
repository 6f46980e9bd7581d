"""Exact real interval arithmetic with rational endpoints.

Endpoints are Fractions, so ring operations are exact and comparisons
are decidable.  Outward rounding to a dyadic grid keeps endpoint sizes
bounded during iterations; k-th roots of rationals are enclosed through
integer k-th roots of scaled numerators, which gives width 2^-bits
without any floating point.
"""

from __future__ import annotations

from fractions import Fraction

import gmpy2


class DyadicInterval:
    """Closed interval [lo, hi] with exact rational endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        lo = Fraction(lo)
        hi = Fraction(hi)
        if lo > hi:
            raise ValueError("interval endpoints out of order")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("DyadicInterval is immutable")

    @classmethod
    def point(cls, x) -> "DyadicInterval":
        x = Fraction(x)
        return cls(x, x)

    # -- geometry ---------------------------------------------------------

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __repr__(self) -> str:
        return f"DyadicInterval({self.lo}, {self.hi})"

    def __float__(self) -> float:
        return float(self.mid)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "DyadicInterval":
        other = _coerce(other)
        return DyadicInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other) -> "DyadicInterval":
        other = _coerce(other)
        return DyadicInterval(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other) -> "DyadicInterval":
        return _coerce(other) - self

    def __neg__(self) -> "DyadicInterval":
        return DyadicInterval(-self.hi, -self.lo)

    def __mul__(self, other) -> "DyadicInterval":
        other = _coerce(other)
        cands = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return DyadicInterval(min(cands), max(cands))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "DyadicInterval":
        if e < 0:
            raise ValueError("negative power")
        if e == 0:
            return DyadicInterval.point(1)
        if e % 2 == 0 and self.lo < 0 <= self.hi:
            m = max(-self.lo, self.hi)
            return DyadicInterval(0, m**e)
        a, b = self.lo**e, self.hi**e
        return DyadicInterval(min(a, b), max(a, b))

    def reciprocal(self) -> "DyadicInterval":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval contains zero")
        return DyadicInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other) -> "DyadicInterval":
        return self * _coerce(other).reciprocal()

    def __abs__(self) -> "DyadicInterval":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return DyadicInterval(0, max(-self.lo, self.hi))

    # -- predicates ---------------------------------------------------------

    def contains(self, x) -> bool:
        x = Fraction(x)
        return self.lo <= x <= self.hi

    def contains_interval(self, other: "DyadicInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def overlaps(self, other: "DyadicInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def strictly_less(self, other) -> bool:
        other = _coerce(other)
        return self.hi < other.lo

    def strictly_positive(self) -> bool:
        return self.lo > 0

    def strictly_negative(self) -> bool:
        return self.hi < 0

    # -- rounding -------------------------------------------------------------

    def round_out(self, bits: int) -> "DyadicInterval":
        """Smallest enclosing interval with endpoints on the 2^-bits grid."""
        scale = 1 << bits
        lo = Fraction(_floor_div(self.lo.numerator * scale, self.lo.denominator), scale)
        hi = Fraction(_ceil_div(self.hi.numerator * scale, self.hi.denominator), scale)
        return DyadicInterval(lo, hi)


def _coerce(x) -> DyadicInterval:
    if isinstance(x, DyadicInterval):
        return x
    return DyadicInterval.point(x)


def _floor_div(a: int, b: int) -> int:
    return a // b


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def nth_root_interval(x, k: int, bits: int) -> DyadicInterval:
    """Enclosure of x^(1/k) for rational x >= 0, width at most 2^-bits.

    Exact rational roots come back as point intervals.
    """
    x = Fraction(x)
    if x < 0:
        raise ValueError("negative radicand")
    if k < 1:
        raise ValueError("root order must be positive")
    if x == 0:
        return DyadicInterval.point(0)
    scale = 1 << bits
    n = (x.numerator * scale**k) // x.denominator
    r, exact = gmpy2.iroot(n, k)
    r = int(r)
    if exact and Fraction(r, scale) ** k == x:
        return DyadicInterval.point(Fraction(r, scale))
    return DyadicInterval(Fraction(r, scale), Fraction(r + 1, scale))


def pow_frac_interval(x, num: int, den: int, bits: int) -> DyadicInterval:
    """Enclosure of x^(num/den) for rational x > 0, den >= 1."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("base must be positive")
    if den < 1:
        raise ValueError("denominator must be positive")
    return nth_root_interval(x**num, den, bits)


def ln2_interval(bits: int) -> DyadicInterval:
    """Enclosure of ln 2 of width below 2^-bits.

    Uses ln 2 = 2 atanh(1/3) = 2 sum_{j odd} (1/3)^j / j with the
    geometric tail bound 2 (1/3)^(J+2) / ((J+2)(1 - 1/9)).
    """
    target = Fraction(1, 1 << (bits + 2))
    s = Fraction(0)
    j = 1
    term = Fraction(2, 3)
    while True:
        s += term / j
        tail = Fraction(9, 8) * term * Fraction(1, 9) / (j + 2)
        if tail < target:
            break
        term /= 9
        j += 2
    return DyadicInterval(s, s + tail).round_out(bits)
