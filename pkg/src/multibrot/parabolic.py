"""Parameters with a parabolic cycle of multiplier +1 or -1.

The cycle variable is eliminated by a resultant in the parameter, computed
through evaluation at integers and Newton interpolation. Factoring the
eliminant, discarding factors whose witnesses have a smaller least period,
and certifying the survivors yields the candidate parameters; the search
unions these over periods and both multiplier signs and keeps the totally
real ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Set

import numpy as np

from .algebraic import (
    AlgebraicNumber,
    Rect,
    is_milnor_unit,
    is_totally_real,
    roots_of,
)
from .exact import (
    DyadicInterval,
    IntPoly,
    X,
    count_real_roots,
    divides,
    factor_irreducible,
    newton_interpolate,
    resultant,
)

__all__ = [
    "ParabolicCandidate",
    "per_resultant",
    "solve_parabolic",
    "totally_real_parabolic_search",
    "milnor_audit",
]

INSTANCE_CAP = 100


def _check_instance(d: int, n: int, lam: int) -> None:
    if not isinstance(d, int) or d < 2:
        raise ValueError("degree must be an integer >= 2")
    if not isinstance(n, int) or n < 1:
        raise ValueError("period must be a positive integer")
    if lam not in (1, -1):
        raise ValueError("multiplier sign must be +1 or -1")
    if d**n > INSTANCE_CAP:
        raise ValueError("instance too large")


def _fn_poly(d: int, n: int, t: int) -> IntPoly:
    """The n-th iterate of z^d + t as a polynomial in z."""
    p = X
    c = IntPoly([t])
    for _ in range(n):
        p = p**d + c
    return p


def _interp_resultant(eval_at: Callable[[int], int], bound: int) -> IntPoly:
    """Integer polynomial matching eval_at on the integers, degree <= bound.

    Samples consecutive integers around 0, interpolates, and validates at
    two points outside the window; the sample is doubled until validation
    passes. At bound+1 points the result needs no validation, so a failure
    there means the degree bound itself is wrong.
    """
    cache: dict = {}

    def val(t: int) -> int:
        if t not in cache:
            cache[t] = eval_at(t)
        return cache[t]

    npts = min(bound + 1, 33)
    while True:
        lo = -(npts // 2)
        try:
            poly = newton_interpolate(lo, [val(t) for t in range(lo, lo + npts)])
        except ValueError:
            poly = None
        if poly is not None and poly(lo - 1) == val(lo - 1) and poly(lo + npts) == val(lo + npts):
            return poly
        if npts > bound:
            raise RuntimeError("interpolation failed at the full degree bound")
        npts = min(2 * npts, bound + 1)


def per_resultant(d: int, n: int, lam: int) -> IntPoly:
    """Eliminant R(c) = Res_z(f_c^n(z) - z, (f_c^n)'(z) - lam), content-cleared.

    Every parameter carrying a cycle of period dividing n whose n-fold
    multiplier equals lam is a root.
    """
    _check_instance(d, n, lam)
    dega = d ** (n - 1)
    degb = d ** (n - 1) - 1 if n > 1 else 0
    bound = (d**n - 1) * dega + d**n * degb

    def ev(t: int) -> int:
        fn = _fn_poly(d, n, t)
        return resultant(fn - X, fn.derivative() - IntPoly([lam]))

    r = _interp_resultant(ev, bound)
    if not r:
        raise RuntimeError("eliminant vanished identically")
    return r.primitive_part()


def _divisor_resultant(d: int, m: int, n: int, lam: int) -> IntPoly:
    """Res_z(f^m(z) - z, (f^n)'(z) - lam) in the parameter.

    Vanishes exactly at parameters where some point of period dividing m
    has n-fold multiplier lam; used to strip low-period factors out of
    per_resultant.
    """
    dega = d ** (m - 1)
    degb = d ** (n - 1) - 1
    bound = d**m * degb + (d**n - 1) * dega

    def ev(t: int) -> int:
        a = _fn_poly(d, m, t) - X
        b = _fn_poly(d, n, t).derivative() - IntPoly([lam])
        return resultant(a, b)

    return _interp_resultant(ev, bound).primitive_part()


@dataclass(frozen=True)
class ParabolicCandidate:
    d: int
    period: int
    multiplier_sign: int
    parameter: AlgebraicNumber
    verified: bool

    def to_json(self) -> dict:
        pj = self.parameter.to_json()
        return {
            "d": self.d,
            "n": self.period,
            "lambda": self.multiplier_sign,
            "minpoly": pj["minpoly"],
            "locator": pj["locator"],
            "verified": self.verified,
        }


def _float_iterate(d: int, n: int, cc: complex) -> np.ndarray:
    p = np.array([0, 1], dtype=complex)
    for _ in range(n):
        q = p.copy()
        for _ in range(d - 1):
            q = np.convolve(q, p)
        q[0] += cc
        p = q
    return p


def _certify_separation(d: int, n: int, c0: AlgebraicNumber, z0: complex) -> bool:
    """Interval recomputation of the cycle through the box around z0.

    Checks that the n-th interval iterate returns to the starting box and
    that no iterate at a proper divisor of n does, which pins the least
    period of any cycle meeting the box.
    """
    bits = 160
    creg = c0.region(bits)
    r = Fraction(1, 1 << 30)
    z = Rect(
        DyadicInterval(Fraction(z0.real) - r, Fraction(z0.real) + r),
        DyadicInterval(Fraction(z0.imag) - r, Fraction(z0.imag) + r),
    )
    box = z
    for k in range(1, n + 1):
        z = (z**d + creg).round_out(bits)
        if k < n and n % k == 0 and z.overlaps(box):
            return False
    return z.overlaps(box)


def _cycle_consistent(d: int, n: int, lam: int, c0: AlgebraicNumber) -> bool:
    """Locate a least-period-n witness cycle numerically and certify it.

    Existence of some lam-multiplier witness is already exact (the
    parameter is a root of the eliminant); this pins down where it sits.
    """
    cc = complex(c0)
    f = _float_iterate(d, n, cc)
    f[1] -= 1
    roots = np.roots(f[::-1])
    divisors = [m for m in range(1, n) if n % m == 0]
    for z0 in roots:
        orbit = [z0]
        for _ in range(n):
            orbit.append(orbit[-1] ** d + cc)
        scale = max(1.0, abs(z0))
        if abs(orbit[n] - z0) > 1e-5 * scale:
            continue
        if any(abs(orbit[m] - z0) < 1e-5 * scale for m in divisors):
            continue
        mult = complex(1)
        for k in range(n):
            mult *= d * orbit[k] ** (d - 1)
        if abs(mult - lam) > 1e-3:
            continue
        if _certify_separation(d, n, c0, complex(z0)):
            return True
    return False


def _surviving_factors(d: int, n: int, lam: int) -> List[IntPoly]:
    """Irreducible factors of the eliminant with least period exactly n.

    Factors that also divide a lower-period eliminant are rejected: their
    witnesses live at a proper divisor of n.
    """
    r = per_resultant(d, n, lam)
    if r.degree < 1:
        return []
    lower = [_divisor_resultant(d, m, n, lam) for m in range(1, n) if n % m == 0]
    return [h for h, _ in factor_irreducible(r)
            if not any(divides(h, g) for g in lower)]


def solve_parabolic(d: int, n: int, lam: int) -> List[ParabolicCandidate]:
    """Candidates with a least-period-n cycle of multiplier lam.

    Every root of every surviving factor is certified and marked verified
    on success.
    """
    _check_instance(d, n, lam)
    out = []
    for h in _surviving_factors(d, n, lam):
        for root in roots_of(h):
            out.append(ParabolicCandidate(d, n, lam, root, _cycle_consistent(d, n, lam, root)))
    out.sort(key=lambda cand: (cand.parameter.minpoly.coeffs,
                               complex(cand.parameter).real,
                               complex(cand.parameter).imag))
    return out


def totally_real_parabolic_search(d: int, n_max: int) -> Set[AlgebraicNumber]:
    """Verified totally real candidates over periods up to n_max, both signs.

    Periods past the d^n instance cap are skipped rather than raising; the
    cap bounds the search depth for large degrees. A surviving factor is
    certified only when all its roots are real: each root's minimal
    polynomial is the factor itself, so a Sturm count below the degree
    already rules out every root it carries.
    """
    if not isinstance(n_max, int) or n_max < 1:
        raise ValueError("n_max must be a positive integer")
    found: Set[AlgebraicNumber] = set()
    for n in range(1, n_max + 1):
        if d**n > INSTANCE_CAP:
            break
        for lam in (1, -1):
            for h in _surviving_factors(d, n, lam):
                if count_real_roots(h) < h.degree:
                    continue
                for root in roots_of(h):
                    if _cycle_consistent(d, n, lam, root):
                        found.add(root)
    return found


def milnor_audit(candidates) -> dict:
    """Unit test over candidates: d^(d/(d-1)) * c must be an algebraic unit
    away from the primes of d. Any failure points at an elimination bug."""
    failures = []
    for cand in candidates:
        if not is_milnor_unit(cand.parameter, cand.d):
            failures.append(cand.to_json())
    return {
        "total": len(candidates),
        "failures": failures,
        "verdict": "pass" if not failures else "fail",
    }
