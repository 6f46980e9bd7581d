"""Capacity-style quantities of real intervals.

Exact n-th diameter table via the Stieltjes-Schur recursion, certified
dyadic enclosures for the derived quantities sigma and tau, a certified
verdict for the product inequality sigma(d) * tau(n) >= 1, and a
floating-point Fekete-point maximizer used as an independent cross-check
of the exact values.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import DyadicInterval, nth_root_interval, pow_frac_interval

__all__ = [
    "DiameterTable",
    "D_table",
    "dn_interval",
    "tau",
    "sigma",
    "Ineq41Verdict",
    "inequality_41",
    "FeketeResult",
    "fekete_oracle",
]


@dataclass(frozen=True)
class DiameterTable:
    """Exact rationals D_2..D_N, indexed by n."""

    values: tuple

    @property
    def last(self) -> int:
        return len(self.values) + 1

    def __getitem__(self, n: int) -> Fraction:
        if not 2 <= n <= self.last:
            raise IndexError(f"table holds D_2..D_{self.last}")
        return self.values[n - 2]

    def to_json(self) -> dict:
        return {str(n): str(self[n]) for n in range(2, self.last + 1)}


def D_table(N: int) -> DiameterTable:
    """Exact D_2..D_N.

    D_2 = 1 and each later entry multiplies the previous one by
    n^n (n-2)^(n-2) / (2^(2n-2) (2n-3)^(2n-3)).
    """
    if N < 2:
        raise ValueError("need N >= 2")
    vals = [Fraction(1)]
    for n in range(3, N + 1):
        step = Fraction(n**n * (n - 2) ** (n - 2), 2 ** (2 * n - 2) * (2 * n - 3) ** (2 * n - 3))
        vals.append(vals[-1] * step)
    return DiameterTable(tuple(vals))


_D_CACHE: Optional[DiameterTable] = None


def _diameter(n: int) -> Fraction:
    global _D_CACHE
    if _D_CACHE is None or _D_CACHE.last < n:
        _D_CACHE = D_table(max(n, 2))
    return _D_CACHE[n]


def tau(n: int, bits: int = 128) -> DyadicInterval:
    """Enclosure of D_n^(1/(n(n-1))), the normalized n-th diameter."""
    if n < 2:
        raise ValueError("need n >= 2")
    return pow_frac_interval(_diameter(n), 1, n * (n - 1), bits)


def sigma(d: int, bits: int = 128) -> DyadicInterval:
    """Enclosure of d^(d/(d-1)) * (2^(1/(d-1)) - 1)."""
    if d < 2:
        raise ValueError("need d >= 2")
    lead = pow_frac_interval(d, d, d - 1, bits)
    root = nth_root_interval(2, d - 1, bits)
    return lead * (root - 1)


def dn_interval(a, b, n: int, bits: int = 128) -> DyadicInterval:
    """Certified enclosure of the n-th diameter of [a, b].

    Equals (b - a) * tau(n); the rational prefactor scales the enclosure
    exactly, so the relative width is at most 2^(-bits+2).
    """
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("need a < b")
    return tau(n, bits) * (b - a)


@dataclass(frozen=True)
class Ineq41Verdict:
    d: int
    n: int
    product: DyadicInterval
    verdict: str
    bits_used: int

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "product_enclosure": [str(self.product.lo), str(self.product.hi)],
            "verdict": self.verdict,
        }


def inequality_41(d: int, n: int, bits: int = 128) -> Ineq41Verdict:
    """Certified comparison of sigma(d) * tau(n) against 1.

    Verdict "holds" means the product is certainly >= 1, "fails" means it
    is certainly < 1. Precision is raised until the enclosure clears 1;
    the product is never exactly 1 here, so separation is always reached.
    """
    if d < 4 or d % 2:
        raise ValueError("need even d >= 4")
    if n < 2:
        raise ValueError("need n >= 2")
    b = bits
    while b <= 4096:
        prod = sigma(d, b) * tau(n, b)
        if prod.lo > 1:
            return Ineq41Verdict(d, n, prod, "holds", b)
        if prod.hi < 1:
            return Ineq41Verdict(d, n, prod, "fails", b)
        b *= 2
    raise RuntimeError("enclosure would not separate from 1")


@dataclass(frozen=True)
class FeketeResult:
    points: tuple
    log_product: float
    restarts_used: int

    def dn_estimate(self) -> float:
        n = len(self.points)
        return math.exp(2.0 * self.log_product / (n * (n - 1)))


def _log_product(pts) -> float:
    total = 0.0
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            gap = abs(pts[i] - pts[j])
            if gap == 0.0:
                return -math.inf
            total += math.log(gap)
    return total


def _ascend(pts, a: float, b: float) -> float:
    """Golden-section coordinate ascent on the interior points.

    The per-coordinate objective sum(log|x - z_i|) is strictly concave
    between the two neighbours, so each 1-d search is exact up to the
    bracketing tolerance. Endpoints stay pinned at a and b.
    """
    n = len(pts)
    inv = (math.sqrt(5) - 1) / 2
    prev = _log_product(pts)
    for _ in range(300):
        for j in range(1, n - 1):
            lo, hi = pts[j - 1], pts[j + 1]
            others = pts[:j] + pts[j + 1 :]

            def g(x):
                s = 0.0
                for z in others:
                    gap = abs(x - z)
                    if gap == 0.0:
                        return -math.inf
                    s += math.log(gap)
                return s

            x1 = hi - inv * (hi - lo)
            x2 = lo + inv * (hi - lo)
            g1, g2 = g(x1), g(x2)
            while hi - lo > 1e-15 * (b - a):
                if g1 < g2:
                    lo, x1, g1 = x1, x2, g2
                    x2 = lo + inv * (hi - lo)
                    g2 = g(x2)
                else:
                    hi, x2, g2 = x2, x1, g1
                    x1 = hi - inv * (hi - lo)
                    g1 = g(x1)
            pts[j] = (lo + hi) / 2
        cur = _log_product(pts)
        if cur - prev <= 1e-13 * max(1.0, abs(cur)):
            return cur
        prev = cur
    return prev


def fekete_oracle(a, b, n: int, restarts: int = 8, seed: int = 0) -> FeketeResult:
    """Numerical maximizer of the pairwise-distance product on [a, b].

    Chebyshev-Lobatto initialization plus uniform-random restarts; the
    endpoints are always part of the configuration. Floating point by
    design: certified claims come from dn_interval, this is the sanity
    check against it.
    """
    af, bf = float(a), float(b)
    if not af < bf:
        raise ValueError("need a < b")
    if not 2 <= n <= 12:
        raise ValueError("need 2 <= n <= 12")
    mid, half = (af + bf) / 2, (bf - af) / 2
    init = [mid + half * math.cos(math.pi * (n - 1 - j) / (n - 1)) for j in range(n)]
    init[0], init[-1] = af, bf
    best_pts = list(init)
    best_val = _ascend(best_pts, af, bf)
    rng = random.Random(seed)
    used = 0
    for _ in range(max(0, restarts)):
        pts = sorted(rng.uniform(af, bf) for _ in range(n - 2))
        pts = [af] + pts + [bf]
        val = _ascend(pts, af, bf)
        used += 1
        if val > best_val:
            best_pts, best_val = pts, val
    return FeketeResult(tuple(sorted(best_pts)), best_val, used)
