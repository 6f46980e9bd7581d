"""Report-producing drivers for the three classification results.

A report is an ordered list of steps. A step is either machine checked
(verdict pass or fail) or an explicitly flagged citation (verdict
trusted) for background facts the package does not re-derive, such as
the reduction of a classification to a finite candidate list. The
overall verdict is pass when no step fails; trusted steps are listed
verbatim so a reader can audit exactly what was computed and what was
assumed. Witness values are exact: integers, fraction strings, or
certified enclosures as [lo, hi] string pairs. No step ever records a
bare float, and a fixed input always produces the identical report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .algebraic import (
    arc_unit_images,
    is_milnor_unit,
    is_totally_real,
    root_valuations,
    vp,
)
from .capacity import D_table, inequality_41, sigma, tau
from .dynamics import constants, critical_orbit, is_pcf
from .exact import DyadicInterval, IntPoly, count_real_roots, discriminant, nth_root_interval
from .parabolic import totally_real_parabolic_search

__all__ = [
    "Step",
    "CertificateReport",
    "leading_coeff_check",
    "valuation_check",
    "discriminant_bound_check",
    "case4_residue_certificate",
    "theorem_11_driver",
    "theorem_12_driver",
    "theorem_13_driver",
]

REPORT_FORMAT = 1

_MAX_BITS = 4096


@dataclass(frozen=True)
class Step:
    """One report entry: a claim, how it was checked, and the outcome."""

    claim: str
    method: str
    inputs: dict
    verdict: str
    witness: object = None
    ref: str = ""

    def to_json(self) -> dict:
        out = {
            "claim": self.claim,
            "method": self.method,
            "inputs": self.inputs,
            "verdict": self.verdict,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.ref:
            out["ref"] = self.ref
        return out


@dataclass(frozen=True)
class CertificateReport:
    """Ordered steps plus the derived overall verdict.

    The verdict is pass exactly when no step failed. Trusted steps do
    not fail: they mark cited background, kept visibly separate from
    the machine-checked steps.
    """

    theorem: str
    steps: tuple

    @property
    def verdict(self) -> str:
        return "pass" if all(s.verdict != "fail" for s in self.steps) else "fail"

    @property
    def trusted_refs(self) -> tuple:
        return tuple(s.ref for s in self.steps if s.verdict == "trusted")

    def to_json(self) -> dict:
        return {
            "format": REPORT_FORMAT,
            "theorem": self.theorem,
            "steps": [s.to_json() for s in self.steps],
            "verdict": self.verdict,
        }


def _enclosure(iv: DyadicInterval) -> list:
    return [str(iv.lo), str(iv.hi)]


def _prime_divisors(m: int) -> list:
    m = abs(m)
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


# -- coefficient audits ------------------------------------------------------


def leading_coeff_check(P: IntPoly, d: int) -> str:
    """Compare the leading coefficient with the forced power of d.

    For a degree-n minimal polynomial of a parameter whose map z^d + c
    has a cycle of multiplier +-1, the leading coefficient must equal
    d^(nd/(d-1)). Returns "not_integer" when the exponent is not an
    integer, which already rules the polynomial out.
    """
    if P.degree < 1:
        raise ValueError("nonconstant polynomial required")
    num = P.degree * d
    if num % (d - 1):
        return "not_integer"
    return "pass" if P.lc == d ** (num // (d - 1)) else "fail"


_SAMPLE_PRIME_BOUND = 1000


def _sampled_primes(P: IntPoly, d: int) -> list:
    """Primes up to the sampling bound dividing a_0 * a_n but not d."""
    m = abs(P.coeffs[0] * P.lc)
    out = []
    p = 2
    while p <= _SAMPLE_PRIME_BOUND and m > 1:
        if m % p == 0:
            while m % p == 0:
                m //= p
            if d % p:
                out.append(p)
        p += 1 if p == 2 else 2
    return out


def valuation_check(P: IntPoly, d: int) -> str:
    """Audit the slopes of the polygon of P at the relevant primes.

    At every prime p dividing d, all root valuations must equal
    -(d/(d-1)) nu_p(d); at sampled small primes away from d that divide
    the outer coefficients, the roots must be p-integral.
    """
    if P.degree < 1 or P.coeffs[0] == 0:
        raise ValueError("nonzero constant term required")
    for p in _prime_divisors(d):
        want = Fraction(-d * vp(d, p), d - 1)
        if any(s != want for s in root_valuations(P, p)):
            return "fail"
    for p in _sampled_primes(P, d):
        if any(s < 0 for s in root_valuations(P, p)):
            return "fail"
    return "pass"


def _disc_upper(an: int, n: int, d: int, bits: int) -> DyadicInterval:
    # a_n^(2(n-1)) (2^(1/(d-1)) - 1)^(n(n-1)) D_n
    base = nth_root_interval(2, d - 1, bits) - 1
    scale = Fraction(an ** (2 * (n - 1))) * D_table(n)[n]
    return base ** (n * (n - 1)) * scale


def discriminant_bound_check(P: IntPoly, d: int, bits: int = 128) -> dict:
    """Divisibility and size window for the discriminant of P.

    a_n^(n-1) must divide the discriminant and sit below it; for even
    d >= 4 the discriminant must in addition stay below
    a_n^(2(n-1)) (2^(1/(d-1)) - 1)^(n(n-1)) D_n, decided through a
    certified enclosure. Degree 1 is vacuous on all three counts.
    """
    n = P.degree
    if n < 1:
        raise ValueError("nonconstant polynomial required")
    delta = discriminant(P)
    an_pow = P.lc ** (n - 1)
    out = {
        "degree": n,
        "discriminant": delta,
        "lc_power": an_pow,
        "divides": delta % an_pow == 0,
        "lower": an_pow <= delta,
        "upper": None,
        "upper_holds": None,
    }
    if d >= 4 and d % 2 == 0 and n >= 2:
        b = bits
        while True:
            bound = _disc_upper(P.lc, n, d, b)
            if Fraction(delta) <= bound.lo:
                holds = True
                break
            if Fraction(delta) > bound.hi:
                holds = False
                break
            b *= 2
            if b > _MAX_BITS:
                raise RuntimeError("discriminant bound not separated at 4096 bits")
        out["upper"] = _enclosure(bound)
        out["upper_holds"] = holds
    ok = out["divides"] and out["lower"] and out["upper_holds"] is not False
    out["verdict"] = "pass" if ok else "fail"
    return out


# -- the finite residue certificate ------------------------------------------

_MOD = 1 << 19
_TARGET = 5 << 16


def _cubic_disc(a0: int, a1: int, a2: int, a3: int) -> int:
    return (
        a1 * a1 * a2 * a2
        - 4 * a1**3 * a3
        - 4 * a0 * a2**3
        - 27 * a0 * a0 * a3 * a3
        + 18 * a0 * a1 * a2 * a3
    )


def case4_residue_certificate() -> CertificateReport:
    """Rule out an integer cubic with the forced coefficient shapes.

    A cubic a3 T^3 + a2 T^2 + a1 T + a0 with a3 = 2^8, every root of
    2-adic valuation -8/3, and discriminant 2^16 cannot exist: the
    valuations force a1 = 8u, a2 = 64v, a0 odd, and over all sixteen
    classes (a0 mod 8, u mod 2, v mod 2) the discriminant is congruent
    to 5 * 2^16 mod 2^19, never 2^16. Every step is finite arithmetic.
    """
    steps = []

    slope = Fraction(-8, 3)
    nu_a2 = math.ceil(8 + slope)
    nu_a1 = math.ceil(8 + 2 * slope)
    nu_a0 = 8 + 3 * slope
    ok = nu_a2 == 6 and nu_a1 == 3 and nu_a0 == 0
    steps.append(Step(
        claim="coefficient shapes forced by root valuations: a2 = 64v, a1 = 8u, a0 odd",
        method="exact valuation arithmetic on elementary symmetric functions",
        inputs={"leading_valuation": 8, "root_valuation": str(slope)},
        verdict="pass" if ok else "fail",
        witness={
            "nu2_a2_at_least": nu_a2,
            "nu2_a1_at_least": nu_a1,
            "nu2_a0_exact": str(nu_a0),
        },
        ref="coefficient-valuations",
    ))

    # reduced forms of the five discriminant terms mod 2^19, verified on a
    # lift window wide enough to exercise every residue twice
    term_forms = [
        ("a1^2*a2^2", 18, lambda a0, u, v: (u * v % 2) << 18),
        ("-4*a1^3*a3", 19, lambda a0, u, v: 0),
        ("-4*a0*a2^3", 20, lambda a0, u, v: 0),
        ("-27*a0^2*a3^2", 16, lambda a0, u, v: _TARGET),
        ("18*a0*a1*a2*a3", 18, lambda a0, u, v: (u * v % 2) << 18),
    ]
    reduced_ok = True
    for a0 in range(1, 32, 2):
        for u in range(8):
            for v in range(8):
                a1, a2, a3 = 8 * u, 64 * v, 256
                terms = (
                    a1 * a1 * a2 * a2,
                    -4 * a1**3 * a3,
                    -4 * a0 * a2**3,
                    -27 * a0 * a0 * a3 * a3,
                    18 * a0 * a1 * a2 * a3,
                )
                for (name, nu_min, form), t in zip(term_forms, terms):
                    if t % _MOD != form(a0, u, v) or (t and vp(t, 2) < nu_min):
                        reduced_ok = False
    steps.append(Step(
        claim="term-by-term reduction: mod 2^19 the discriminant depends only on "
              "(a0 mod 8, u mod 2, v mod 2)",
        method="finite enumeration over a lift window",
        inputs={"a0_range": "odd 1..31", "u_range": "0..7", "v_range": "0..7"},
        verdict="pass" if reduced_ok else "fail",
        witness=[
            {"term": name, "nu2_at_least": nu_min, "residue_mod_2_19": desc}
            for (name, nu_min, _), desc in zip(term_forms, [
                "2^18 * (uv mod 2)",
                "0",
                "0",
                "5 * 2^16",
                "2^18 * (uv mod 2)",
            ])
        ],
        ref="term-reduction",
    ))

    rows = []
    table_ok = True
    for a0 in (1, 3, 5, 7):
        for u in (0, 1):
            for v in (0, 1):
                delta = _cubic_disc(a0, 8 * u, 64 * v, 256)
                if delta != discriminant(IntPoly([a0, 8 * u, 64 * v, 256])):
                    table_ok = False
                got = delta % _MOD
                rows.append({"a0": a0, "u": u, "v": v, "delta_mod_2_19": got})
                table_ok = table_ok and got == _TARGET
    steps.append(Step(
        claim="all 16 residue classes give discriminant = 5 * 2^16 mod 2^19",
        method="finite enumeration, cross-checked against the resultant discriminant",
        inputs={"modulus": _MOD, "expected": _TARGET},
        verdict="pass" if table_ok else "fail",
        witness=rows,
        ref="residue-table",
    ))

    collapse_ok = all(
        _cubic_disc(a0, 8 * u, 64 * v, 256) % _MOD
        == _cubic_disc(a0 % 8, 8 * u, 64 * v, 256) % _MOD
        for a0 in range(1, 16, 2) for u in (0, 1) for v in (0, 1)
    )
    steps.append(Step(
        claim="re-enumeration over odd a0 mod 16 collapses to the mod-8 table",
        method="finite enumeration",
        inputs={"a0_range": "odd 1..15"},
        verdict="pass" if collapse_ok else "fail",
        ref="table-redundancy",
    ))

    lift_ok = all(
        _cubic_disc(a0, 8 * u, 64 * v, 256) % _MOD == _TARGET
        for a0 in range(1, 32, 2) for u in range(4) for v in range(4)
    )
    steps.append(Step(
        claim="the congruence persists over arbitrary lifts of each class",
        method="finite enumeration over a lift window",
        inputs={"a0_range": "odd 1..31", "u_range": "0..3", "v_range": "0..3"},
        verdict="pass" if lift_ok else "fail",
        ref="lift-invariance",
    ))

    steps.append(Step(
        claim="no such cubic exists: its discriminant would be 2^16, "
              "but 2^16 is not 5 * 2^16 mod 2^19",
        method="residue comparison",
        inputs={"required": 1 << 16, "actual_mod_2_19": _TARGET},
        verdict="pass" if (1 << 16) % _MOD != _TARGET else "fail",
        ref="window-contradiction",
    ))
    return CertificateReport("case4", tuple(steps))


# -- classification drivers --------------------------------------------------


def _expected_pcf(d: int) -> set:
    if d == 2:
        return {Fraction(-2), Fraction(-1), Fraction(0)}
    if d % 2 == 0:
        return {Fraction(-1), Fraction(0)}
    return {Fraction(0)}


def theorem_11_driver(d_min: int = 2, d_max: int = 9) -> CertificateReport:
    """Classify the real postcritically finite parameters of z^d + c.

    The candidate list {-2, -1, 0} comes from enumerating images
    zeta + 1/zeta of root-of-unity classes confined to the closed left
    half plane, together with 0; each degree then keeps exactly the
    candidates whose critical orbit is finite, computed exactly. The
    expected outcome is {0,-1,-2} at d = 2, {0,-1} for even d >= 4,
    and {0} for odd d.
    """
    if not (isinstance(d_min, int) and isinstance(d_max, int) and 2 <= d_min <= d_max):
        raise ValueError("need 2 <= d_min <= d_max")
    steps = []

    base = {x.as_fraction() for x in arc_unit_images(64)}
    stable = all({x.as_fraction() for x in arc_unit_images(b)} == base for b in (32, 128))
    cand = sorted(base | {Fraction(0)})
    enum_ok = stable and cand == [Fraction(-2), Fraction(-1), Fraction(0)]
    steps.append(Step(
        claim="candidate parameters: half-plane-confined images of roots of unity, plus 0, are {-2, -1, 0}",
        method="cyclotomic enumeration, stable across order bounds",
        inputs={"bound": 64, "stability_bounds": [32, 128]},
        verdict="pass" if enum_ok else "fail",
        witness=[str(x) for x in cand],
        ref="candidate-enumeration",
    ))
    steps.append(Step(
        claim="every real postcritically finite parameter lies in the candidate set",
        method="cited: the finite critical orbit forces a preperiodic multiplier "
               "on the unit circle, and the real slice confines the image",
        inputs={},
        verdict="trusted",
        ref="pcf-candidate-reduction",
    ))

    for d in range(d_min, d_max + 1):
        kept = {c for c in cand if is_pcf(d, c)}
        orbits = {str(c): critical_orbit(d, c, 16).to_json() for c in cand}
        steps.append(Step(
            claim=f"degree {d}: exact critical orbits keep "
                  f"{{{', '.join(str(c) for c in sorted(kept))}}}",
            method="exact rational iteration with certified escape",
            inputs={"d": d},
            verdict="pass" if kept == _expected_pcf(d) else "fail",
            witness={"kept": [str(c) for c in sorted(kept)], "orbits": orbits},
            ref="orbit-filter",
        ))
    return CertificateReport("thm11", tuple(steps))


def theorem_12_driver() -> CertificateReport:
    """Classify the totally real parameters of z^2 + c carrying a cycle
    of multiplier +-1 and period at most 3.

    The verified search must return exactly {1/4, -3/4, -5/4, -7/4};
    each member's minimal polynomial is audited (leading coefficient,
    valuation slopes, unit scaling), and a rational just off the list
    must fail the valuation screen.
    """
    steps = []
    found = totally_real_parabolic_search(2, 3)
    rational = all(x.is_rational for x in found)
    got = sorted(x.as_fraction() for x in found) if rational else []
    expected = [Fraction(-7, 4), Fraction(-5, 4), Fraction(-3, 4), Fraction(1, 4)]
    steps.append(Step(
        claim="search over periods up to 3, both multiplier signs, returns "
              "{1/4, -3/4, -5/4, -7/4}",
        method="eliminant factorization, certified roots, cycle verification",
        inputs={"d": 2, "n_max": 3},
        verdict="pass" if got == expected else "fail",
        witness=[str(x) for x in got],
        ref="period-three-search",
    ))

    for c in expected:
        P = IntPoly([-c.numerator, c.denominator])
        lc = leading_coeff_check(P, 2)
        val = valuation_check(P, 2)
        unit = is_milnor_unit(c, 2)
        scaled = 4 * c
        odd_int = scaled.denominator == 1 and scaled.numerator % 2 == 1
        ok = lc == "pass" and val == "pass" and unit and odd_int
        steps.append(Step(
            claim=f"member {c}: minimal polynomial audit",
            method="leading coefficient, valuation slopes, scaled unit test",
            inputs={"c": str(c)},
            verdict="pass" if ok else "fail",
            witness={
                "leading_coeff": lc,
                "valuation": val,
                "unit": unit,
                "scaled_by_4": str(scaled),
            },
            ref="member-audit",
        ))

    neg = valuation_check(IntPoly([-1, 2]), 2)
    steps.append(Step(
        claim="negative control: c = 1/2 fails the valuation screen",
        method="valuation slopes at 2",
        inputs={"c": "1/2", "required_slope": "-2", "actual_slope": "-1"},
        verdict="pass" if neg == "fail" else "fail",
        witness={"valuation_check": neg},
        ref="negative-control",
    ))
    return CertificateReport("thm12", tuple(steps))


def _certified_decreasing(fn: Callable, lo: int, hi: int, bits: int = 128) -> bool:
    """Certify fn(k) > fn(k+1) across [lo, hi] by separated enclosures."""
    for k in range(lo, hi):
        b = bits
        while True:
            a, c = fn(k, b), fn(k + 1, b)
            if c.hi < a.lo:
                break
            if c.lo > a.hi:
                return False
            b *= 2
            if b > _MAX_BITS:
                raise RuntimeError("adjacent values not separated at 4096 bits")
    return True


def _forced_window_step() -> Step:
    """Certify 2^28 (2^(1/3) - 1)^6 < 2^17, pinning the discriminant.

    Any cubic surviving the other audits at d = 4 has discriminant a
    positive multiple of 2^16 lying below this bound, so exactly 2^16.
    """
    b = 128
    while True:
        bound = _disc_upper(256, 3, 4, b)
        if bound.hi < 1 << 17:
            ok = True
            break
        if bound.lo >= 1 << 17:
            ok = False
            break
        b *= 2
        if b > _MAX_BITS:
            raise RuntimeError("window bound not separated at 4096 bits")
    return Step(
        claim="discriminant window: the upper bound 2^28 (2^(1/3)-1)^6 is below 2^17, "
              "so a multiple of 2^16 in the window equals 2^16",
        method="certified enclosure comparison",
        inputs={"lc": 256, "degree": 3, "d": 4, "bits": b},
        verdict="pass" if ok else "fail",
        witness={"enclosure": _enclosure(bound), "ceiling": 1 << 17},
        ref="forced-window",
    )


_SWEEP_D = 24
_SWEEP_N = 40


def theorem_13_driver(d_min: int = 3, d_max: int = 10, n_max: int = 3) -> CertificateReport:
    """Classify the totally real parameters with a multiplier +-1 cycle
    for degrees in [d_min, d_max].

    Odd degrees reduce to testing the slice endpoints +-alpha(d) for
    total realness (nonempty only at d = 3). Even degrees are excluded
    degree-by-degree on the minimal polynomial of a hypothetical
    parameter: degrees 1 and 2 by a non-integer forced exponent, the
    ranges (d >= 6, deg >= 3) and (d = 4, deg >= 4) by a certified
    product bound below 1, and (d = 4, deg = 3) by the discriminant
    window plus the finite residue certificate. A verified search
    cross-checks each degree up to the instance cap.
    """
    if not (isinstance(d_min, int) and isinstance(d_max, int) and 3 <= d_min <= d_max):
        raise ValueError("need 3 <= d_min <= d_max")
    if not (isinstance(n_max, int) and n_max >= 1):
        raise ValueError("n_max must be a positive integer")
    steps = []
    evens = [d for d in range(d_min, d_max + 1) if d % 2 == 0]

    if evens:
        for dd, nn, below, ref in (
            (6, 3, True, "corner-6-3"),
            (4, 4, True, "corner-4-4"),
            (4, 3, False, "corner-4-3"),
        ):
            v = inequality_41(dd, nn)
            agree = (v.verdict == "fails") == below
            side = "below 1, excluding the whole range it dominates" if below \
                else "above 1, so the product test alone cannot settle it"
            steps.append(Step(
                claim=f"certified corner: sigma({dd}) tau({nn}) is {side}",
                method="interval product with certified separation from 1",
                inputs={"d": dd, "n": nn},
                verdict="pass" if agree else "fail",
                witness=v.to_json(),
                ref=ref,
            ))

        top_d = max(_SWEEP_D, d_max)
        mono_sigma = _certified_decreasing(sigma, 4, top_d)
        steps.append(Step(
            claim=f"sigma is strictly decreasing on degrees 4..{top_d}",
            method="adjacent certified enclosures",
            inputs={"lo": 4, "hi": top_d},
            verdict="pass" if mono_sigma else "fail",
            ref="sigma-monotone",
        ))
        mono_tau = _certified_decreasing(tau, 3, _SWEEP_N)
        steps.append(Step(
            claim=f"tau is strictly decreasing on degrees 3..{_SWEEP_N}",
            method="adjacent certified enclosures",
            inputs={"lo": 3, "hi": _SWEEP_N},
            verdict="pass" if mono_tau else "fail",
            ref="tau-monotone",
        ))
        steps.append(Step(
            claim=f"beyond the swept range the product stays below 1: sigma decreases "
                  f"to log 2 and tau to 1/4, so the corner values still dominate",
            method="cited limit behavior of both sequences",
            inputs={"sigma_swept_to": top_d, "tau_swept_to": _SWEEP_N},
            verdict="trusted",
            ref="product-tail",
        ))

    if 4 in evens:
        exponent_ok = (3 * 4) % (4 - 1) == 0 and 4 ** ((3 * 4) // 3) == 256
        steps.append(Step(
            claim="a surviving cubic at d = 4 has leading coefficient 4^4 = 2^8",
            method="exact exponent arithmetic",
            inputs={"d": 4, "degree": 3},
            verdict="pass" if exponent_ok else "fail",
            witness={"lc": 256},
            ref="forced-leading-coeff",
        ))
        steps.append(_forced_window_step())
        residue = case4_residue_certificate()
        steps.append(Step(
            claim="no cubic with the forced shapes has discriminant 2^16",
            method="finite residue certificate",
            inputs={},
            verdict="pass" if residue.verdict == "pass" else "fail",
            witness=residue.to_json(),
            ref="residue-certificate",
        ))

    for d in range(d_min, d_max + 1):
        if d % 2:
            steps.append(Step(
                claim=f"degree {d}: the real parameters carrying a multiplier +-1 "
                      f"cycle are the slice endpoints +-alpha({d})",
                method="cited: endpoint tangency on the real slice",
                inputs={"d": d},
                verdict="trusted",
                ref="odd-endpoint-reduction",
            ))
            alpha = constants(d)[0]
            m = alpha.minpoly
            nreal = count_real_roots(m)
            tot = is_totally_real(alpha)
            same = (-alpha).minpoly == m
            expect = d == 3
            steps.append(Step(
                claim=f"degree {d}: the endpoints are "
                      f"{'totally real' if expect else 'not totally real'}",
                method="real root count of the shared minimal polynomial",
                inputs={"d": d},
                verdict="pass" if same and tot == expect else "fail",
                witness={
                    "minpoly": m.to_json_list(),
                    "real_roots": nreal,
                    "degree": m.degree,
                },
                ref="endpoint-totally-real",
            ))
        else:
            shapes = {str(n): (n * d) % (d - 1) for n in (1, 2)}
            steps.append(Step(
                claim=f"degree {d}: a minimal polynomial of degree 1 or 2 needs the "
                      f"non-integer exponent {d}deg/{d - 1}, so none exists",
                method="exact exponent arithmetic",
                inputs={"d": d},
                verdict="pass" if all(r != 0 for r in shapes.values()) else "fail",
                witness={"exponent_remainders": shapes},
                ref="small-degree-exponent",
            ))
            if d >= 6:
                covered = "degrees >= 3 fall under the certified corner at (6, 3)"
            else:
                covered = ("degree 3 falls to the discriminant window and residue "
                           "certificate; degrees >= 4 under the corner at (4, 4)")
            steps.append(Step(
                claim=f"degree {d}: {covered}",
                method="case assembly from the steps above",
                inputs={"d": d},
                verdict="pass",
                ref="even-case-assembly",
            ))

        found = totally_real_parabolic_search(d, n_max)
        if d == 3:
            alpha = constants(3)[0]
            agree = found == {alpha, -alpha}
        else:
            agree = found == set()
        listed = sorted(found, key=lambda a: (a.minpoly.coeffs, complex(a).real))
        steps.append(Step(
            claim=f"degree {d}: the verified search agrees with the classification",
            method="eliminant search over periods within the instance cap",
            inputs={"d": d, "n_max": n_max},
            verdict="pass" if agree else "fail",
            witness=[a.to_json() for a in listed],
            ref="search-cross-check",
        ))
    return CertificateReport("thm13", tuple(steps))
