"""Real dynamics of the unicritical family f_c(z) = z^d + c.

Covers the constants alpha/beta/gamma/delta that frame the real
parameter slice, exact classification of real fixed points, the
period-2 bifurcation construction (lambda -> x -> c), critical orbits
in exact and enclosure modes, a PCF decision procedure for rational
parameters, and a floating-point cycle probe for diagnostics.

Everything feeding a certificate is exact; the probe and the
convergence heuristic are explicitly diagnostic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .algebraic import AlgebraicNumber, algebraic_image, real_roots_of
from .exact import DyadicInterval, IntPoly, X, pow_frac_interval, sturm_count

RealParam = Union[int, Fraction, AlgebraicNumber]


def _check_degree(d: int) -> None:
    if not isinstance(d, int) or d < 2:
        raise ValueError("degree must be an integer >= 2")


def _as_algebraic(c) -> AlgebraicNumber:
    if isinstance(c, AlgebraicNumber):
        return c
    return AlgebraicNumber.from_rational(c)


# ---------------------------------------------------------------------------
# slice constants


_CONSTANTS_CACHE: dict[int, tuple] = {}


def constants(d: int):
    """(alpha, beta, gamma, delta) for degree d.

    alpha = (d-1) d^(-d/(d-1)):  positive root of d^d T^(d-1) - (d-1)^(d-1)
    beta  = -2^(1/(d-1))
    gamma = -(d+1) d^(-d/(d-1))
    delta = d^(-1/(d-1)):        positive root of d T^(d-1) - 1
    """
    _check_degree(d)
    got = _CONSTANTS_CACHE.get(d)
    if got is not None:
        return got

    def positive_root(p: IntPoly) -> AlgebraicNumber:
        for r in real_roots_of(p):
            if r > 0:
                return r
        raise AssertionError("expected a positive real root")

    e = d - 1
    alpha = positive_root(IntPoly([-(e**e)] + [0] * (e - 1) + [d**d]))
    beta = -positive_root(IntPoly([-2] + [0] * (e - 1) + [1]))
    gamma = -positive_root(IntPoly([-((d + 1) ** e)] + [0] * (e - 1) + [d**d]))
    delta = positive_root(IntPoly([-1] + [0] * (e - 1) + [d]))
    out = (alpha, beta, gamma, delta)
    _CONSTANTS_CACHE[d] = out
    return out


def real_slice(d: int) -> tuple[AlgebraicNumber, AlgebraicNumber]:
    """Endpoints of M_d on the real line: [-alpha, alpha] for odd d,
    [beta, alpha] for even d."""
    alpha, beta, _, _ = constants(d)
    if d % 2:
        return (-alpha, alpha)
    return (beta, alpha)


# ---------------------------------------------------------------------------
# fixed points


@dataclass(frozen=True)
class ClassifiedFixedPoint:
    """A real fixed point of z^d + c with its multiplier d z^(d-1).

    classification is one of superattracting, attracting, parabolic,
    repelling; on the real slice parabolic means multiplier exactly
    +1 or -1.
    """

    location: AlgebraicNumber
    multiplier: AlgebraicNumber
    classification: str

    def to_json(self) -> dict:
        return {
            "location": self.location.to_json(),
            "multiplier": self.multiplier.to_json(),
            "class": self.classification,
        }


def _classify_real_multiplier(mult: AlgebraicNumber) -> str:
    if mult == 0:
        return "superattracting"
    if mult == 1 or mult == -1:
        return "parabolic"
    if Fraction(-1) < mult and mult < Fraction(1):
        return "attracting"
    return "repelling"


def real_fixed_points(d: int, c: RealParam) -> list[ClassifiedFixedPoint]:
    """All real solutions of z^d + c = z, classified exactly.

    For algebraic c the fixed-point equation c = z - z^d is lifted
    through the minimal polynomial of c, then solutions belonging to
    other conjugates of c are filtered out by exact image comparison.
    """
    _check_degree(d)
    c = _as_algebraic(c)
    if not c.is_real:
        raise ValueError("parameter must be real")
    inner = X - X**d
    if c.is_rational:
        q = c.as_fraction()
        w = inner * q.denominator - IntPoly([q.numerator])
        locs = real_roots_of(w)
    else:
        w = c.minpoly.compose(inner)
        locs = [z for z in real_roots_of(w) if algebraic_image(z, inner) == c]
    out = []
    dmul = IntPoly([0] * (d - 1) + [d])  # d z^(d-1)
    for z in locs:
        mult = algebraic_image(z, dmul)
        out.append(ClassifiedFixedPoint(z, mult, _classify_real_multiplier(mult)))
    return out


# ---------------------------------------------------------------------------
# the period-2 construction


def g_lambda(d: int, lam) -> IntPoly:
    """Integer clearing of lambda (sum_{k<d} x^k)^2 - d^2 x^(d-1).

    For lambda = p/q the returned polynomial is q times the displayed
    one, so its values at 0 and 1 are p and q d^2 (lambda - 1) = d^2 (p - q).
    """
    _check_degree(d)
    lam = Fraction(lam)
    s = IntPoly([1] * d)
    return s * s * lam.numerator - IntPoly([0] * (d - 1) + [lam.denominator * d * d])


def lambda_to_x(d: int, lam) -> AlgebraicNumber:
    """The unique root of g_lambda in (0, 1), Sturm-certified."""
    _check_degree(d)
    lam = Fraction(lam)
    if not (0 < lam < 1):
        raise ValueError("lambda must lie strictly between 0 and 1")
    g = g_lambda(d, lam)
    inside = sturm_count(g, 0, 1)
    if inside != 1:
        raise AssertionError(f"expected a unique root in (0,1), found {inside}")
    for r in real_roots_of(g):
        if Fraction(0) < r and r < Fraction(1):
            return r
    raise AssertionError("certified root not located")


def x_to_c(d: int, x):
    """Parameter c = -(sum_{k<=d} x^k) / (sum_{k<d} x^k)^(d/(d-1)).

    Rational x gives the exact algebraic value: c is pinned as the
    unique negative real root of S^d T^(d-1) - (-N)^(d-1) with N, S the
    two power sums; x = 0 gives -1, x = 1 gives gamma(d).  Irrational
    algebraic or interval x gives a dyadic enclosure instead.
    """
    _check_degree(d)
    if isinstance(x, AlgebraicNumber) and x.is_rational:
        x = x.as_fraction()
    if isinstance(x, AlgebraicNumber):
        xi = x.interval(192)
    elif isinstance(x, DyadicInterval):
        xi = x
    else:
        xi = None
    if xi is not None:
        if xi.lo < 0 or xi.hi > 1:
            raise ValueError("x must lie in [0, 1]")
        # both power sums have positive coefficients, hence increase on
        # [0, 1]; endpoint images bound them exactly
        n_poly = IntPoly([1] * (d + 1))
        s_poly = IntPoly([1] * d)
        n_lo, n_hi = n_poly(xi.lo), n_poly(xi.hi)
        bits = 192
        s_pow_lo = pow_frac_interval(s_poly(xi.lo), d, d - 1, bits).lo
        s_pow_hi = pow_frac_interval(s_poly(xi.hi), d, d - 1, bits).hi
        return DyadicInterval(-n_hi / s_pow_lo, -n_lo / s_pow_hi).round_out(160)
    x = Fraction(x)
    if not (0 <= x <= 1):
        raise ValueError("x must lie in [0, 1]")
    if x == 0:
        return AlgebraicNumber.from_rational(-1)
    n_sum = sum(x**k for k in range(d + 1))
    s_sum = sum(x**k for k in range(d))
    e = d - 1
    # c^(d-1) = (-1)^(d-1) N^(d-1) / S^d
    lhs = s_sum**d
    rhs = (-1) ** e * n_sum**e
    den = lhs.denominator * rhs.denominator // math.gcd(
        lhs.denominator, rhs.denominator
    )
    poly = IntPoly([int(-rhs * den)] + [0] * (e - 1) + [int(lhs * den)])
    negatives = [r for r in real_roots_of(poly) if r < 0]
    if len(negatives) != 1:
        raise AssertionError("parameter root is not unique")
    return negatives[0]


# ---------------------------------------------------------------------------
# critical orbits


@dataclass
class OrbitRecord:
    """Trace of the critical orbit 0, c, c^d + c, ...

    kind is escaped / cycle / converged / budget_exhausted; escaped
    carries the step index, cycle carries (preperiod, period), and
    converged carries a floating-point estimate of the limit cycle.
    """

    iterates: list
    kind: str
    step: Optional[int] = None
    preperiod: Optional[int] = None
    period: Optional[int] = None
    estimate: Optional[list] = None

    def to_json(self) -> dict:
        def enc(z):
            if isinstance(z, DyadicInterval):
                return [str(z.lo), str(z.hi)]
            return str(z)

        out: dict = {"outcome": self.kind, "iterates": [enc(z) for z in self.iterates]}
        for name in ("step", "preperiod", "period", "estimate"):
            v = getattr(self, name)
            if v is not None:
                out[name] = v
        return out


def _escapes_rational(z: Fraction, c_abs: Fraction, d: int) -> bool:
    # |z| > max(|c|, 2^(1/(d-1))), the second test cleared of the root
    az = abs(z)
    return az > c_abs and az ** (d - 1) > 2


def critical_orbit(d: int, c, budget: int) -> OrbitRecord:
    """Iterate the critical point with an exact or enclosure backend.

    Rational c: exact iteration; outcomes are cycle on exact repeat,
    certified escape, or budget_exhausted.  Algebraic or interval c:
    dyadic interval iteration; escape stays certified, convergence is
    detected heuristically on a float shadow orbit.
    """
    _check_degree(d)
    if budget < 1:
        raise ValueError("budget must be at least 1")
    if isinstance(c, (int, Fraction)):
        return _critical_orbit_exact(d, Fraction(c), budget)
    if isinstance(c, AlgebraicNumber):
        if not c.is_real:
            raise ValueError("parameter must be real")
        return _critical_orbit_interval(d, c.interval(160), budget)
    if isinstance(c, DyadicInterval):
        return _critical_orbit_interval(d, c, budget)
    raise TypeError("parameter must be rational, algebraic, or an interval")


def _critical_orbit_exact(d: int, c: Fraction, budget: int) -> OrbitRecord:
    z = Fraction(0)
    iterates = [z]
    seen = {z: 0}
    c_abs = abs(c)
    for step in range(1, budget + 1):
        z = z**d + c
        iterates.append(z)
        if _escapes_rational(z, c_abs, d):
            return OrbitRecord(iterates, "escaped", step=step)
        prev = seen.get(z)
        if prev is not None:
            return OrbitRecord(iterates, "cycle", preperiod=prev, period=step - prev)
        seen[z] = step
        if z.denominator.bit_length() > 1024:
            # Denominators grow strictly from here on (powers of the
            # denominator of c), so an exact repeat is impossible; keep
            # watching for certified escape on cheap interval iterates.
            return _orbit_escape_tail(d, c, z, iterates, step, budget)
    return OrbitRecord(iterates, "budget_exhausted")


def _orbit_escape_tail(
    d: int, c: Fraction, z: Fraction, iterates: list, step: int, budget: int
) -> OrbitRecord:
    bits = 256
    zi = DyadicInterval.point(z).round_out(bits)
    ci = DyadicInterval.point(c).round_out(bits)
    c_abs_hi = abs(c)
    while step < budget:
        step += 1
        zi = (zi**d + ci).round_out(bits)
        iterates.append(zi)
        az_lo = abs(zi).lo
        if az_lo > c_abs_hi and az_lo ** (d - 1) > 2:
            return OrbitRecord(iterates, "escaped", step=step)
    return OrbitRecord(iterates, "budget_exhausted")


def _critical_orbit_interval(d: int, c: DyadicInterval, budget: int) -> OrbitRecord:
    bits = 192
    z = DyadicInterval.point(0)
    iterates = [z]
    c_abs_hi = max(abs(c.lo), abs(c.hi))
    zf = 0.0
    cf = float(c.mid)
    shadow = [zf]
    for step in range(1, budget + 1):
        z = (z**d + c).round_out(bits)
        iterates.append(z)
        az_lo = abs(z).lo
        if az_lo > c_abs_hi and az_lo ** (d - 1) > 2:
            return OrbitRecord(iterates, "escaped", step=step)
        zf = zf**d + cf
        shadow.append(zf)
        if step > 16:
            for period in range(1, min(65, step // 2)):
                if abs(shadow[-1] - shadow[-1 - period]) < 1e-12 * max(1.0, abs(zf)):
                    est = [shadow[-1 - k] for k in range(period)][::-1]
                    period, est = _reduce_period(period, est)
                    return OrbitRecord(
                        iterates, "converged", period=period, estimate=est
                    )
    return OrbitRecord(iterates, "budget_exhausted")


def _reduce_period(period: int, est: list) -> tuple[int, list]:
    # alternating convergence makes the period-2p difference shrink
    # faster than the period-p one, so the first hit can overshoot the
    # true period; collapse to the smallest divisor consistent with est
    for q in range(1, period):
        if period % q:
            continue
        scale = max(1.0, max(abs(v) for v in est))
        if all(abs(est[i] - est[i % q]) < 1e-9 * scale for i in range(period)):
            return q, est[:q]
    return period, est


def is_pcf(d: int, c) -> bool:
    """Decide postcritical finiteness for rational c.

    For c = p/q in lowest terms with q > 1, the q-adic valuation of the
    iterates drops by a factor d each step, so the orbit never repeats:
    immediately False.  For integer c, exact iteration must end in a
    repeat or a certified escape (integer orbits below the escape
    radius are finite in number).
    """
    _check_degree(d)
    c = Fraction(c)
    if c.denominator > 1:
        return False
    c = c.numerator
    z = 0
    seen = {0}
    c_abs = abs(c)
    while True:
        z = z**d + c
        if abs(z) > c_abs and abs(z) ** (d - 1) > 2:
            return False
        if z in seen:
            return True
        seen.add(z)


def attracting_cycle_probe(
    d: int, c: float, budget: int = 20000
) -> Optional[tuple[int, float]]:
    """Floating-point search for the attracting cycle of the critical
    orbit: (period, multiplier estimate), or None.  Diagnostic only."""
    _check_degree(d)
    c = float(c)
    z = 0.0
    transient = max(64, budget // 2)
    for _ in range(transient):
        z = z**d + c
        if abs(z) > 1e9:
            return None
    max_period = max(2, min(256, budget // 4))
    orbit = [z]
    for _ in range(2 * max_period):
        z = z**d + c
        if abs(z) > 1e9:
            return None
        orbit.append(z)
    tol = 1e-9
    for period in range(1, max_period + 1):
        if abs(orbit[period] - orbit[0]) < tol * max(1.0, abs(orbit[0])):
            mult = 1.0
            for k in range(period):
                mult *= d * orbit[k] ** (d - 1)
            return (period, mult)
    return None
