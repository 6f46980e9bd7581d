"""Algebraic numbers with Galois-conjugate reasoning.

An algebraic number is stored as its irreducible minimal polynomial
together with a certified isolating region: a rational interval on the
real line, or a rational rectangle off it.  Everything downstream
(total reality, Newton-polygon valuations, unit tests at primes,
root-of-unity detection, the arc enumeration) reduces to exact
operations on that pair.

Floating point appears in exactly one role: seeding complex isolating
rectangles, which are then certified by an interval Newton step in
exact rational arithmetic.  A certificate never depends on a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Union

import gmpy2

from .exact import (
    DyadicInterval,
    IntPoly,
    ONE,
    SturmChain,
    X,
    discriminant,
    exact_quotient,
    factor,
    isolate_real_roots,
    newton_interpolate,
    refine_isolator,
    resultant,
    sturm_count,
)

Rational = Union[int, Fraction]


# ---------------------------------------------------------------------------
# complex rectangles


def _di_intersect(a: DyadicInterval, b: DyadicInterval) -> DyadicInterval:
    lo = max(a.lo, b.lo)
    hi = min(a.hi, b.hi)
    if lo > hi:
        raise ValueError("empty intersection")
    return DyadicInterval(lo, hi)


def _as_interval(x) -> DyadicInterval:
    if isinstance(x, DyadicInterval):
        return x
    return DyadicInterval.point(Fraction(x))


class Rect:
    """Axis-aligned rectangle in the complex plane, exact rational corners."""

    __slots__ = ("re", "im")

    def __init__(self, re, im):
        object.__setattr__(self, "re", _as_interval(re))
        object.__setattr__(self, "im", _as_interval(im))

    def __setattr__(self, name, value):
        raise AttributeError("Rect is immutable")

    @classmethod
    def point(cls, re, im=0) -> "Rect":
        return cls(DyadicInterval.point(re), DyadicInterval.point(im))

    @property
    def width(self) -> Fraction:
        return max(self.re.width, self.im.width)

    @property
    def mid(self) -> tuple[Fraction, Fraction]:
        return (self.re.mid, self.im.mid)

    def __repr__(self) -> str:
        return f"Rect(re=[{self.re.lo},{self.re.hi}], im=[{self.im.lo},{self.im.hi}])"

    def __complex__(self) -> complex:
        return complex(float(self.re.mid), float(self.im.mid))

    # arithmetic; scalars mean real numbers

    def _coerce(self, other) -> "Rect":
        if isinstance(other, Rect):
            return other
        return Rect(_as_interval(other), DyadicInterval.point(0))

    def __add__(self, other) -> "Rect":
        o = self._coerce(other)
        return Rect(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other) -> "Rect":
        o = self._coerce(other)
        return Rect(self.re - o.re, self.im - o.im)

    def __rsub__(self, other) -> "Rect":
        return self._coerce(other) - self

    def __neg__(self) -> "Rect":
        return Rect(-self.re, -self.im)

    def __mul__(self, other) -> "Rect":
        if not isinstance(other, Rect):
            s = _as_interval(other)
            return Rect(self.re * s, self.im * s)
        return Rect(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Rect":
        if e < 0:
            raise ValueError("negative power")
        acc = Rect.point(1)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def conj(self) -> "Rect":
        return Rect(self.re, -self.im)

    def abs_sq(self) -> DyadicInterval:
        return self.re**2 + self.im**2

    def reciprocal(self) -> "Rect":
        den = self.abs_sq()
        if den.lo <= 0:
            raise ZeroDivisionError("rectangle may contain zero")
        return Rect(self.re / den, -self.im / den)

    def __truediv__(self, other) -> "Rect":
        return self * self._coerce(other).reciprocal()

    # predicates

    def contains_zero(self) -> bool:
        return self.re.contains(0) and self.im.contains(0)

    def contains_point(self, re, im) -> bool:
        return self.re.contains(re) and self.im.contains(im)

    def overlaps(self, other: "Rect") -> bool:
        return self.re.overlaps(other.re) and self.im.overlaps(other.im)

    def strictly_contains(self, other: "Rect") -> bool:
        return (
            self.re.lo < other.re.lo
            and other.re.hi < self.re.hi
            and self.im.lo < other.im.lo
            and other.im.hi < self.im.hi
        )

    def intersect(self, other: "Rect") -> "Rect":
        return Rect(_di_intersect(self.re, other.re), _di_intersect(self.im, other.im))

    def round_out(self, bits: int) -> "Rect":
        return Rect(self.re.round_out(bits), self.im.round_out(bits))

    def to_json(self) -> dict:
        return {
            "re": [str(self.re.lo), str(self.re.hi)],
            "im": [str(self.im.lo), str(self.im.hi)],
        }


# ---------------------------------------------------------------------------
# interval Newton certification


def _newton_step(h: IntPoly, dh: IntPoly, z: Rect) -> Rect | None:
    """One interval Newton step N(z) = mid - h(mid)/dh(z).

    Returns None when the derivative rectangle straddles zero.  If the
    result lies strictly inside z, then z contains exactly one root of
    h, it is simple, and it lies in the result.
    """
    der = dh(z)
    if der.contains_zero():
        return None
    m = Rect.point(*z.mid)
    return m - h(m) / der


def _newton_refine(h: IntPoly, dh: IntPoly, z: Rect, bits: int) -> Rect:
    """Shrink a certified rectangle to width at most 2^-bits."""
    target = Fraction(1, 1 << bits)
    guard = bits + 64
    while z.width > target:
        step = _newton_step(h, dh, z)
        if step is None:
            raise AssertionError("derivative lost on a certified rectangle")
        z = step.intersect(z).round_out(guard)
    return z


def _certify_seed(h: IntPoly, dh: IntPoly, re0: Fraction, im0: Fraction) -> Rect | None:
    """Certified root rectangle near a numeric seed, or None."""
    for wexp in (48, 40, 34, 28, 22, 16, 10, 6, 3):
        w = Fraction(1, 1 << wexp)
        z = Rect(
            DyadicInterval(re0 - w, re0 + w),
            DyadicInterval(im0 - w, im0 + w),
        )
        step = _newton_step(h, dh, z)
        if step is not None and z.strictly_contains(step):
            # outward rounding keeps the certified root and caps the
            # endpoint denominators before the next evaluation
            z = step.round_out(256)
            for _ in range(2):
                step = _newton_step(h, dh, z)
                if step is None:
                    break
                z = step.intersect(z).round_out(256)
            return z
    return None


def _seed_roots(p: IntPoly, level: int) -> list[tuple[Fraction, Fraction]]:
    """Numeric root seeds, exact-rational coordinates of float output.

    Level 0 uses numpy; higher levels use mpmath at increasing working
    precision for polynomials numpy's eigensolver handles poorly.
    """
    scale = max(abs(c) for c in p.coeffs)
    if level == 0:
        import numpy as np

        cs = [float(Fraction(c, scale)) for c in reversed(p.coeffs)]
        roots = np.roots(cs)
        return [(Fraction(float(r.real)), Fraction(float(r.imag))) for r in roots]
    import mpmath

    def to_frac(x) -> Fraction:
        sign, man, exp, _ = x._mpf_
        v = Fraction(man) * Fraction(2) ** exp
        return -v if sign else v

    dps = 40 * (2**(level - 1))
    with mpmath.workdps(dps):
        cs = [mpmath.mpf(c) / mpmath.mpf(scale) for c in reversed(p.coeffs)]
        try:
            roots = mpmath.polyroots(cs, maxsteps=200, extraprec=120)
        except mpmath.libmp.libhyper.NoConvergence:
            return []
        # keep the full working precision; rounding through float here
        # would defeat the escalation
        return [
            (to_frac(r.real), to_frac(r.imag))
            for r in roots
            if mpmath.isfinite(r.real) and mpmath.isfinite(r.imag)
        ]


# ---------------------------------------------------------------------------
# algebraic numbers


def _root_sep_lower(p: IntPoly) -> Fraction:
    """Positive lower bound on the distance between distinct roots.

    Mahler's bound sep > sqrt(3|disc|) / (n^((n+2)/2) ||p||_2^(n-1)),
    rounded down componentwise.
    """
    n = p.degree
    if n < 2:
        return Fraction(1)
    disc = abs(discriminant(p))
    if disc == 0:
        raise ValueError("separation bound needs a squarefree polynomial")
    num = gmpy2.isqrt(3 * disc)
    norm2 = int(gmpy2.isqrt(sum(c * c for c in p.coeffs))) + 1
    den = (int(gmpy2.isqrt(gmpy2.mpz(n) ** (n + 2))) + 1) * norm2 ** (n - 1)
    return Fraction(max(int(num), 1), den)


class AlgebraicNumber:
    """Root of an irreducible integer polynomial, isolated exactly.

    Real numbers carry a rational isolating interval, complex ones a
    rational rectangle certified by an interval Newton step.  Instances
    refine their region in place; the identity of the root never
    changes.
    """

    __slots__ = ("minpoly", "_iv", "_rect", "_dh")

    def __init__(self, minpoly: IntPoly, iv=None, rect=None):
        if (iv is None) == (rect is None):
            raise ValueError("exactly one of interval or rectangle required")
        object.__setattr__(self, "minpoly", minpoly)
        object.__setattr__(self, "_iv", iv)
        object.__setattr__(self, "_rect", rect)
        object.__setattr__(self, "_dh", None)

    def __setattr__(self, name, value):
        raise AttributeError("use refine(); AlgebraicNumber is immutable")

    def _set(self, name, value):
        object.__setattr__(self, name, value)

    # construction

    @classmethod
    def from_rational(cls, q) -> "AlgebraicNumber":
        q = Fraction(q)
        poly = IntPoly([-q.numerator, q.denominator])
        return cls(poly, iv=(q, q))

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    @property
    def is_real(self) -> bool:
        return self._iv is not None

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def as_fraction(self) -> Fraction:
        if self.degree != 1:
            raise ValueError("not a rational number")
        a0, a1 = self.minpoly.coeffs
        return Fraction(-a0, a1)

    # refinement and regions

    def refine(self, bits: int) -> "AlgebraicNumber":
        """Shrink the isolating region to width at most 2^-bits."""
        target = Fraction(1, 1 << bits)
        if self._iv is not None:
            lo, hi = self._iv
            if hi - lo > target:
                self._set("_iv", refine_isolator(self.minpoly, self._iv, target))
        else:
            if self._rect.width > target:
                if self._dh is None:
                    self._set("_dh", self.minpoly.derivative())
                self._set("_rect", _newton_refine(self.minpoly, self._dh, self._rect, bits))
        return self

    def interval(self, bits: int = 64) -> DyadicInterval:
        if self._iv is None:
            raise ValueError("complex number has no real interval")
        self.refine(bits)
        return DyadicInterval(*self._iv)

    def region(self, bits: int = 64) -> Rect:
        """Rectangle enclosure, real numbers sitting on the axis."""
        self.refine(bits)
        if self._iv is not None:
            return Rect(DyadicInterval(*self._iv), DyadicInterval.point(0))
        return self._rect

    def enclosure(self, bits: int = 64):
        """DyadicInterval for real numbers, Rect for complex ones."""
        self.refine(bits)
        if self._iv is not None:
            return DyadicInterval(*self._iv)
        return self._rect

    # identity

    def _sturm(self) -> SturmChain:
        return SturmChain(self.minpoly)

    def _index(self) -> int:
        """Number of real roots of minpoly strictly below this root."""
        if self._iv is None:
            raise ValueError("index of a non-real root")
        lo, hi = self._iv
        if lo == hi:
            return self._sturm().count(None, lo) - 1
        return self._sturm().count(None, lo)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.degree == 1 and self.as_fraction() == Fraction(other)
        if not isinstance(other, AlgebraicNumber):
            return NotImplemented
        if self.minpoly != other.minpoly:
            return False
        if self is other:
            return True
        if self.is_real != other.is_real:
            return False
        if self.is_real:
            return self._index() == other._index()
        sep = _root_sep_lower(self.minpoly)
        bits = 16
        while Fraction(1, 1 << bits) > sep / 4:
            bits += 16
        a = self.region(bits)
        b = other.region(bits)
        return a.overlaps(b)

    def __hash__(self) -> int:
        if self.degree == 1:
            return hash(self.as_fraction())
        return hash(self.minpoly.coeffs)

    def _cmp_real(self, other) -> int:
        if isinstance(other, (int, Fraction)):
            other = AlgebraicNumber.from_rational(other)
        if not isinstance(other, AlgebraicNumber):
            raise TypeError(f"cannot compare with {type(other).__name__}")
        if not (self.is_real and other.is_real):
            raise TypeError("complex algebraic numbers are unordered")
        if self == other:
            return 0
        if self.minpoly == other.minpoly:
            return -1 if self._index() < other._index() else 1
        bits = 32
        while True:
            a = self.interval(bits)
            b = other.interval(bits)
            if a.hi < b.lo:
                return -1
            if b.hi < a.lo:
                return 1
            bits *= 2

    def __lt__(self, other) -> bool:
        return self._cmp_real(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp_real(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp_real(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp_real(other) >= 0

    def __neg__(self) -> "AlgebraicNumber":
        poly = self.minpoly.negate_roots()
        if poly.lc < 0:
            poly = -poly
        if self._iv is not None:
            lo, hi = self._iv
            return AlgebraicNumber(poly, iv=(-hi, -lo))
        return AlgebraicNumber(poly, rect=-self._rect)

    # conversions

    def __float__(self) -> float:
        if not self.is_real:
            raise TypeError("not a real number")
        return float(self.interval(80).mid)

    def __complex__(self) -> complex:
        if self.is_real:
            return complex(float(self))
        r = self.region(80)
        return complex(float(r.re.mid), float(r.im.mid))

    def __repr__(self) -> str:
        if self.is_real:
            approx = f"{float(self):.12g}"
        else:
            z = complex(self)
            approx = f"{z.real:.12g}{z.imag:+.12g}j"
        return f"AlgebraicNumber({approx}, minpoly={list(self.minpoly.coeffs)})"

    def conjugates(self) -> list["AlgebraicNumber"]:
        return roots_of(self.minpoly)

    # serialization

    def to_json(self) -> dict:
        if self._iv is not None:
            lo, hi = self._iv
            locator = [str(lo), str(hi)]
        else:
            locator = self._rect.to_json()
        return {"minpoly": self.minpoly.to_json_list(), "locator": locator}

    @classmethod
    def from_json(cls, obj: dict) -> "AlgebraicNumber":
        poly = IntPoly.from_json_list(obj["minpoly"])
        loc = obj["locator"]
        if isinstance(loc, list):
            lo, hi = Fraction(loc[0]), Fraction(loc[1])
            if lo == hi:
                if poly(lo) != 0:
                    raise ValueError("locator point is not a root")
            else:
                chain = SturmChain(poly)
                ok = (
                    poly(lo) != 0
                    and poly(hi) != 0
                    and chain.count(lo, hi) == 1
                )
                if not ok:
                    raise ValueError("locator does not isolate one root")
            return cls(poly, iv=(lo, hi))
        rect = Rect(
            DyadicInterval(Fraction(loc["re"][0]), Fraction(loc["re"][1])),
            DyadicInterval(Fraction(loc["im"][0]), Fraction(loc["im"][1])),
        )
        if rect.width == 0:
            # a zero-width box cannot contract strictly; check the exact
            # Gaussian rational point by Horner over Q(i) instead
            re0, im0 = rect.re.lo, rect.im.lo
            vre, vim = Fraction(0), Fraction(0)
            for c in reversed(poly.coeffs):
                vre, vim = vre * re0 - vim * im0 + c, vre * im0 + vim * re0
            if vre != 0 or vim != 0:
                raise ValueError("locator point is not a root")
            return cls(poly, rect=rect)
        dh = poly.derivative()
        step = _newton_step(poly, dh, rect)
        if step is None or not rect.strictly_contains(step.intersect(rect)):
            # one contraction is allowed before giving up
            if step is None:
                raise ValueError("locator rectangle fails certification")
            rect2 = step.intersect(rect)
            step2 = _newton_step(poly, dh, rect2)
            if step2 is None or not rect2.strictly_contains(step2):
                raise ValueError("locator rectangle fails certification")
            rect = rect2
        return cls(poly, rect=rect)


def _coerce_alg(x) -> AlgebraicNumber:
    if isinstance(x, AlgebraicNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return AlgebraicNumber.from_rational(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as an algebraic number")


# ---------------------------------------------------------------------------
# root extraction


def real_roots_of(p: IntPoly) -> list[AlgebraicNumber]:
    """All distinct real roots of p, ascending, as algebraic numbers."""
    if not p:
        raise ValueError("zero polynomial")
    out = []
    for h, _mult in factor(p)[1]:
        if h.degree < 1:
            continue
        if h.degree == 1:
            a0, a1 = h.coeffs
            out.append(AlgebraicNumber.from_rational(Fraction(-a0, a1)))
            continue
        for iv in isolate_real_roots(h):
            out.append(AlgebraicNumber(h, iv=iv))
    out.sort()
    return out


def _roots_of_irreducible(h: IntPoly) -> list[AlgebraicNumber]:
    if h.degree == 1:
        a0, a1 = h.coeffs
        return [AlgebraicNumber.from_rational(Fraction(-a0, a1))]
    real = [AlgebraicNumber(h, iv=iv) for iv in isolate_real_roots(h)]
    ncomplex = h.degree - len(real)
    if ncomplex == 0:
        return real
    assert ncomplex % 2 == 0
    want = ncomplex // 2
    dh = h.derivative()
    # numpy's eigensolver seeds are only worth trying at small degree
    first = 0 if h.degree <= 12 else 1
    for level in range(first, first + 4):
        rects: list[Rect] = []
        for re0, im0 in _seed_roots(h, level):
            if im0 <= 0:
                continue
            z = _certify_seed(h, dh, re0, im0)
            if z is None or z.im.lo <= 0:
                continue
            if any(z.overlaps(w) for w in rects):
                continue
            rects.append(z)
            if len(rects) == want:
                break
        if len(rects) == want:
            upper = [AlgebraicNumber(h, rect=z) for z in rects]
            lower = [AlgebraicNumber(h, rect=z.conj()) for z in rects]
            return real + upper + lower
    raise RuntimeError(
        f"failed to certify all complex roots of degree-{h.degree} polynomial"
    )


def roots_of(p: IntPoly) -> list[AlgebraicNumber]:
    """All distinct roots of p: real ones ascending, then complex ones."""
    if not p:
        raise ValueError("zero polynomial")
    real: list[AlgebraicNumber] = []
    cplx: list[AlgebraicNumber] = []
    for h, _mult in factor(p)[1]:
        if h.degree < 1:
            continue
        for r in _roots_of_irreducible(h):
            (real if r.is_real else cplx).append(r)
    real.sort()
    cplx.sort(key=lambda r: (complex(r).real, complex(r).imag))
    return real + cplx


# ---------------------------------------------------------------------------
# value selection for resultant-built polynomials


def _select_factor(
    w: IntPoly, region_fn: Callable[[int], Rect], max_bits: int = 4096
) -> IntPoly:
    """The unique irreducible factor of w vanishing on every refinement
    of region_fn."""
    live = [h for h, _mult in factor(w)[1] if h.degree >= 1]
    if not live:
        raise AssertionError("no nonconstant factor")
    bits = 64
    while bits <= max_bits:
        if len(live) == 1:
            return live[0]
        target = region_fn(bits)
        nxt = [h for h in live if h(target).contains_zero()]
        if not nxt:
            raise AssertionError("enclosure excluded every factor")
        live = nxt
        bits *= 2
    raise RuntimeError("could not separate candidate factors")


def _select_value(
    w: IntPoly, region_fn: Callable[[int], Rect], max_bits: int = 4096
) -> AlgebraicNumber:
    """The unique root of w lying in every refinement of region_fn."""
    candidates = roots_of(_select_factor(w, region_fn, max_bits))
    bits = 64
    while bits <= max_bits:
        target = region_fn(bits)
        survivors = [r for r in candidates if r.region(bits).overlaps(target)]
        if len(survivors) == 1:
            return survivors[0]
        if not survivors:
            raise AssertionError("enclosure excluded every root")
        candidates = survivors
        bits *= 2
    raise RuntimeError("could not separate candidate roots")


# ---------------------------------------------------------------------------
# images and products


def algebraic_image(a, num: IntPoly, den: int = 1) -> AlgebraicNumber:
    """g(a) for the rational-coefficient polynomial g = num/den."""
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    a = _coerce_alg(a)
    if a.is_rational:
        return AlgebraicNumber.from_rational(Fraction(num(a.as_fraction()), den))
    if num.degree <= 0:
        val = num.coeffs[0] if num.coeffs else 0
        return AlgebraicNumber.from_rational(Fraction(val, den))

    k = a.degree
    lo0 = -(k // 2) - 1
    values = []
    for t in range(lo0, lo0 + k + 3):
        q_t = IntPoly([den * t]) - num
        values.append(resultant(a.minpoly, q_t))
    w = newton_interpolate(lo0, values[: k + 1])
    for j in (k + 1, k + 2):
        if w(lo0 + j) != values[j]:
            raise AssertionError("image resultant interpolation mismatch")

    inv_den = Fraction(1, den)

    def region(bits: int) -> Rect:
        return num(a.region(bits)) * inv_den

    return _select_value(w, region)


def algebraic_mul(a, b) -> AlgebraicNumber:
    """The product a*b as an algebraic number."""
    a = _coerce_alg(a)
    b = _coerce_alg(b)
    if a.is_rational:
        a, b = b, a
    if b.is_rational:
        r = b.as_fraction()
        if a.is_rational:
            return AlgebraicNumber.from_rational(a.as_fraction() * r)
        if r == 0:
            return AlgebraicNumber.from_rational(0)
        poly = a.minpoly.scale_roots(r.numerator, r.denominator).primitive_part()
        if a._iv is not None:
            lo, hi = a._iv
            pts = sorted((lo * r, hi * r))
            return AlgebraicNumber(poly, iv=(pts[0], pts[1]))
        return AlgebraicNumber(poly, rect=a._rect * r)

    def region(bits: int) -> Rect:
        return a.region(bits) * b.region(bits)

    return _select_value(_mul_eliminant(a, b), region)


def _mul_eliminant(a: AlgebraicNumber, b: AlgebraicNumber) -> IntPoly:
    """Polynomial vanishing on every product of a conjugate of a with a
    conjugate of b, built by evaluation and interpolation."""
    ka = a.degree
    npts = ka * b.degree + 1
    lo0 = -(npts // 2)
    ma = a.minpoly.coeffs
    values = []
    for t in range(lo0, lo0 + npts + 2):
        # x^ka * m_a(t/x): coefficient of x^j is ma[ka-j] * t^(ka-j)
        p_t = IntPoly([ma[ka - j] * t ** (ka - j) for j in range(ka + 1)])
        values.append(resultant(b.minpoly, p_t))
    w = newton_interpolate(lo0, values[:npts])
    for j in (npts, npts + 1):
        if w(lo0 + j) != values[j]:
            raise AssertionError("product resultant interpolation mismatch")
    return w


def scaled_minpoly(a, r) -> IntPoly:
    """Canonical minimal polynomial of r*a; r rational or algebraic."""
    a = _coerce_alg(a)
    if isinstance(r, AlgebraicNumber) and r.is_rational:
        r = r.as_fraction()
    if isinstance(r, (int, Fraction)):
        r = Fraction(r)
        if r == 0:
            raise ValueError("scale must be nonzero")
        return a.minpoly.scale_roots(r.numerator, r.denominator).primitive_part()
    if not isinstance(r, AlgebraicNumber):
        raise TypeError("scale must be rational or algebraic")
    if r == 0:
        raise ValueError("scale must be nonzero")
    if a.is_rational:
        return scaled_minpoly(r, a.as_fraction())

    def region(bits: int) -> Rect:
        return a.region(bits) * r.region(bits)

    # only the factor is needed, so skip certifying any roots
    return _select_factor(_mul_eliminant(a, r), region)


# ---------------------------------------------------------------------------
# reality and interval membership


def is_totally_real(a: AlgebraicNumber) -> bool:
    """True when every Galois conjugate of a is real."""
    a = _coerce_alg(a)
    return sturm_count(a.minpoly, None, None) == a.degree


def conjugates_in_interval(a: AlgebraicNumber, lo, hi) -> bool:
    """True when a is totally real and every conjugate lies in [lo, hi].

    Endpoints may be rational or algebraic; a number that is not
    totally real yields False, not an error.
    """
    a = _coerce_alg(a)
    if not is_totally_real(a):
        return False
    if isinstance(lo, AlgebraicNumber) or isinstance(hi, AlgebraicNumber):
        roots = real_roots_of(a.minpoly)
        lo_a = _coerce_alg(lo)
        hi_a = _coerce_alg(hi)
        return all(lo_a <= r and r <= hi_a for r in roots)
    lo = Fraction(lo)
    hi = Fraction(hi)
    if lo > hi:
        raise ValueError("interval endpoints out of order")
    chain = SturmChain(a.minpoly)
    inside = chain.count(lo, hi) + (1 if a.minpoly(lo) == 0 else 0)
    return inside == a.degree


# ---------------------------------------------------------------------------
# p-adic valuations via Newton polygons


def vp(x, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    if not gmpy2.is_prime(p):
        raise ValueError(f"{p} is not prime")
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of zero is infinite")

    def _vint(n: int) -> int:
        v = 0
        while n % p == 0:
            n //= p
            v += 1
        return v

    return _vint(x.numerator) - _vint(x.denominator)


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower hull of (i, v_p(a_i)) over nonzero coefficients."""

    p: int
    points: tuple[tuple[int, int], ...]
    segments: tuple[tuple[Fraction, int], ...]  # (slope, horizontal length)

    @classmethod
    def of(cls, poly: IntPoly, p: int) -> "NewtonPolygon":
        if not gmpy2.is_prime(p):
            raise ValueError(f"{p} is not prime")
        if not poly:
            raise ValueError("zero polynomial")
        pts = []
        for i, c in enumerate(poly.coeffs):
            if c:
                pts.append((i, vp(c, p)))
        hull: list[tuple[int, int]] = []
        for pt in pts:
            while len(hull) >= 2:
                (x1, y1), (x2, y2) = hull[-2], hull[-1]
                # drop the middle point unless it is strictly below the chord
                if (x2 - x1) * (pt[1] - y1) - (y2 - y1) * (pt[0] - x1) <= 0:
                    hull.pop()
                else:
                    break
            hull.append(pt)
        segs = []
        for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
            segs.append((Fraction(y2 - y1, x2 - x1), x2 - x1))
        return cls(p=p, points=tuple(pts), segments=tuple(segs))

    def root_valuations(self) -> list[Fraction]:
        out: list[Fraction] = []
        for slope, length in self.segments:
            out.extend([-slope] * length)
        out.sort()
        return out


def root_valuations(poly: IntPoly, p: int) -> list[Fraction]:
    """Multiset of v_p over the nonzero roots, ascending.

    Negated lower-hull slopes with multiplicity equal to the segment's
    horizontal length.  Zero roots (valuation infinity) are omitted, so
    the list has deg - ord_0 entries and sums to v_p(a_i0) - v_p(a_n)
    with i0 the lowest nonzero index.
    """
    return NewtonPolygon.of(poly, p).root_valuations()


# ---------------------------------------------------------------------------
# Milnor units


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def dd_scale(d: int) -> AlgebraicNumber:
    """The real number d^(d/(d-1)), as the positive root of T^(d-1) - d^d."""
    if d < 2:
        raise ValueError("degree must be at least 2")
    poly = X ** (d - 1) - IntPoly([d**d])
    for r in real_roots_of(poly):
        if r > 0:
            return r
    raise AssertionError("positive root must exist")


def is_milnor_unit(c, d: int) -> bool:
    """True when u = d^(d/(d-1)) * c is an algebraic integer that is a
    unit at every prime dividing d (all Newton-polygon valuations 0)."""
    c = _coerce_alg(c)
    if c == 0:
        raise ValueError("c must be nonzero")
    if d < 2:
        raise ValueError("degree must be at least 2")
    u_min = scaled_minpoly(c, dd_scale(d))
    if u_min.lc != 1:
        return False
    for p in _prime_factors(d):
        if any(v != 0 for v in root_valuations(u_min, p)):
            return False
    return True


# ---------------------------------------------------------------------------
# cyclotomic machinery


_CYCLO_CACHE: dict[int, IntPoly] = {1: X - ONE}


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def cyclotomic(m: int) -> IntPoly:
    """The m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("order must be positive")
    got = _CYCLO_CACHE.get(m)
    if got is not None:
        return got
    q = X**m - ONE
    for d in _divisors(m):
        if d < m:
            q = exact_quotient(q, cyclotomic(d))
    _CYCLO_CACHE[m] = q
    return q


def euler_phi(m: int) -> int:
    out = m
    for p in _prime_factors(m):
        out = out // p * (p - 1)
    return out


def is_root_of_unity(a: AlgebraicNumber) -> int | None:
    """Multiplicative order when a is a root of unity, else None.

    Since phi(m) >= sqrt(m/2), only m <= 2 deg^2 can have phi(m) = deg.
    """
    a = _coerce_alg(a)
    poly = a.minpoly
    if poly.lc != 1 or abs(poly.coeffs[0]) != 1:
        return None
    k = poly.degree
    for m in range(1, 2 * k * k + 3):
        if euler_phi(m) == k and poly == cyclotomic(m):
            return m
    return None


def real_cyclotomic(m: int) -> IntPoly:
    """Minimal polynomial of 2 cos(2 pi / m).

    For m >= 3 the m-th cyclotomic polynomial is palindromic of even
    degree phi(m), and collapses under y = x + 1/x through
    q_0 = 2, q_1 = y, q_{k+1} = y q_k - q_{k-1} (q_k = x^k + x^-k).
    """
    if m < 1:
        raise ValueError("order must be positive")
    if m == 1:
        return X - IntPoly([2])
    if m == 2:
        return X + IntPoly([2])
    phi = cyclotomic(m)
    half = phi.degree // 2
    a = phi.coeffs
    out = IntPoly([a[half]])
    q_prev, q_cur = IntPoly([2]), X
    for k in range(1, half + 1):
        out = out + q_cur * a[half + k]
        if k < half:
            q_prev, q_cur = q_cur, X * q_cur - q_prev
    return out


def arc_unit_images(bound: int) -> set[AlgebraicNumber]:
    """Images zeta + 1/zeta of roots of unity of order <= bound whose
    full conjugate class lies in the closed left half plane.

    The image of a primitive m-th root is 2 cos(2 pi k / m), a root of
    real_cyclotomic(m); the half-plane condition says no conjugate of
    2 cos(2 pi / m) is positive, which is a Sturm count.
    """
    if bound < 1:
        raise ValueError("order bound must be at least 1")
    out: set[AlgebraicNumber] = set()
    for m in range(1, bound + 1):
        psi = real_cyclotomic(m)
        if sturm_count(psi, 0, None) == 0:
            out.update(real_roots_of(psi))
    return out
