"""Dynamics of z^d + c on the real slice: constants, fixed points,
the period-2 parametrization, critical orbits."""

from fractions import Fraction

from multibrot.algebraic import AlgebraicNumber, real_roots_of
from multibrot.dynamics import (
    attracting_cycle_probe,
    constants,
    critical_orbit,
    g_lambda,
    is_pcf,
    lambda_to_x,
    real_fixed_points,
    real_slice,
    x_to_c,
)
from multibrot.exact import DyadicInterval, IntPoly


def test_constants_quadratic_case():
    alpha, beta, gamma, delta = constants(2)
    assert alpha == Fraction(1, 4)
    assert beta == -2
    assert gamma == Fraction(-3, 4)
    assert delta == Fraction(1, 2)


def test_constants_cubic_case():
    alpha, beta, gamma, delta = constants(3)
    assert alpha.minpoly == IntPoly([-4, 0, 27])
    assert alpha > 0
    assert beta.minpoly == IntPoly([-2, 0, 1])
    assert beta < 0
    assert gamma.minpoly == IntPoly([-16, 0, 27])
    assert gamma < 0
    assert delta.minpoly == IntPoly([-1, 0, 3])
    assert delta > 0
    # gamma = -2 alpha for d = 3 only because 4 = 2^(d-1)
    assert float(gamma) + 2 * float(alpha) < 1e-12


def test_constants_float_values():
    for d in range(2, 8):
        alpha, beta, gamma, delta = constants(d)
        assert abs(float(alpha) - (d - 1) * d ** (-d / (d - 1))) < 1e-12
        assert abs(float(beta) + 2 ** (1 / (d - 1))) < 1e-12
        assert abs(float(gamma) + (d + 1) * d ** (-d / (d - 1))) < 1e-12
        assert abs(float(delta) - d ** (-1 / (d - 1))) < 1e-12


def test_real_slice():
    lo, hi = real_slice(2)
    assert lo == -2 and hi == Fraction(1, 4)
    lo, hi = real_slice(3)
    alpha = constants(3)[0]
    assert hi == alpha and lo == -alpha
    lo, hi = real_slice(4)
    assert lo == constants(4)[1] and hi == constants(4)[0]


def test_degree_validation():
    try:
        constants(1)
        assert False
    except ValueError:
        pass


def test_fixed_points_parabolic_root():
    pts = real_fixed_points(2, Fraction(1, 4))
    assert len(pts) == 1
    assert pts[0].location == Fraction(1, 2)
    assert pts[0].multiplier == 1
    assert pts[0].classification == "parabolic"


def test_fixed_points_basilica_root():
    pts = real_fixed_points(2, Fraction(-3, 4))
    by_loc = {p.location.as_fraction(): p for p in pts}
    assert set(by_loc) == {Fraction(-1, 2), Fraction(3, 2)}
    assert by_loc[Fraction(-1, 2)].multiplier == -1
    assert by_loc[Fraction(-1, 2)].classification == "parabolic"
    assert by_loc[Fraction(3, 2)].classification == "repelling"


def test_fixed_points_origin():
    pts = real_fixed_points(2, 0)
    classes = sorted(p.classification for p in pts)
    assert classes == ["repelling", "superattracting"]
    sup = [p for p in pts if p.classification == "superattracting"][0]
    assert sup.location == 0 and sup.multiplier == 0


def test_fixed_points_attracting():
    pts = real_fixed_points(2, Fraction(-1, 2))
    kinds = {p.classification for p in pts}
    assert "attracting" in kinds and "repelling" in kinds


def test_fixed_points_algebraic_parameter_filters_conjugates():
    # c = -sqrt(2): two real fixed points; the conjugate +sqrt(2) has
    # none, and its roots must not leak through
    c = min(real_roots_of(IntPoly([-2, 0, 1])))
    pts = real_fixed_points(2, c)
    assert len(pts) == 2
    for p in pts:
        z = float(p.location)
        assert abs(z * z + float(c) - z) < 1e-9
        assert abs(float(p.multiplier) - 2 * z) < 1e-9


def test_fixed_points_to_json():
    rec = real_fixed_points(2, Fraction(1, 4))[0].to_json()
    assert rec["class"] == "parabolic"
    assert rec["location"]["minpoly"] == ["-1", "2"]


def test_g_lambda_endpoint_values():
    for d in (2, 3, 5):
        for lam in (Fraction(1, 4), Fraction(1, 2), Fraction(5, 7)):
            g = g_lambda(d, lam)
            assert g(Fraction(0)) == lam.numerator
            assert g(Fraction(1)) == d * d * (lam.numerator - lam.denominator)


def test_lambda_to_x_quadratic_closed_form():
    # lambda = 1/2, d = 2: g = x^2 - 6x + 1, root 3 - 2 sqrt(2)
    x = lambda_to_x(2, Fraction(1, 2))
    assert x.minpoly == IntPoly([1, -6, 1])
    assert abs(float(x) - (3 - 2 * 2**0.5)) < 1e-12
    try:
        lambda_to_x(2, 1)
        assert False
    except ValueError:
        pass


def test_x_to_c_endpoints():
    for d in (2, 3, 4, 6):
        assert x_to_c(d, 0) == -1
        assert x_to_c(d, 1) == constants(d)[2]
    assert x_to_c(2, 1) == Fraction(-3, 4)


def test_x_to_c_interior_window_and_monotone():
    for d in (2, 4):
        gamma = constants(d)[2]
        prev = AlgebraicNumber.from_rational(-1)
        for num in (1, 2, 3):
            c = x_to_c(d, Fraction(num, 4))
            assert c.is_real
            assert Fraction(-1) < c and c < gamma
            assert prev < c
            prev = c


def test_x_to_c_algebraic_input_gives_enclosure():
    x = lambda_to_x(2, Fraction(1, 2))  # 3 - 2 sqrt(2)
    c = x_to_c(2, x)
    assert isinstance(c, DyadicInterval)
    assert c.width < Fraction(1, 1 << 100)
    # same point through the exact rational path, 60 bits apart
    approx = x.interval(200).mid
    exact = x_to_c(2, approx)
    assert abs(float(c) - float(exact)) < 1e-18
    try:
        x_to_c(2, DyadicInterval(Fraction(1, 2), 2))
        assert False
    except ValueError:
        pass


def test_parametrization_hits_requested_multiplier():
    lam = Fraction(1, 3)
    c = x_to_c(2, lambda_to_x(2, lam))
    probe = attracting_cycle_probe(2, float(c))
    assert probe is not None
    period, mult = probe
    assert period == 2
    assert abs(mult - float(lam)) < 1e-6


def test_critical_orbit_cycle_outcomes():
    rec = critical_orbit(2, -1, 16)
    assert rec.kind == "cycle" and rec.preperiod == 0 and rec.period == 2
    assert rec.iterates[:3] == [0, -1, 0]

    rec = critical_orbit(2, -2, 16)
    assert rec.kind == "cycle" and rec.preperiod == 2 and rec.period == 1

    rec = critical_orbit(2, 0, 16)
    assert rec.kind == "cycle" and rec.period == 1 and rec.preperiod == 0


def test_critical_orbit_escape_outcomes():
    rec = critical_orbit(2, 1, 16)
    assert rec.kind == "escaped" and rec.step == 3
    rec = critical_orbit(3, -1, 16)
    assert rec.kind == "escaped" and rec.step == 2


def test_critical_orbit_non_repeating_rational():
    rec = critical_orbit(2, Fraction(-1, 2), 60)
    assert rec.kind == "budget_exhausted"


def test_critical_orbit_interval_backend():
    rec = critical_orbit(2, DyadicInterval.point(Fraction(-1, 2)), 500)
    assert rec.kind == "converged" and rec.period == 1
    fixed = (1 - 3**0.5) / 2
    assert abs(rec.estimate[0] - fixed) < 1e-9
    rec = critical_orbit(2, DyadicInterval.point(Fraction(1, 2)), 200)
    assert rec.kind == "escaped"


def test_critical_orbit_validation():
    try:
        critical_orbit(2, 0, 0)
        assert False
    except ValueError:
        pass
    try:
        critical_orbit(2, "x", 5)
        assert False
    except TypeError:
        pass


def test_orbit_record_json():
    rec = critical_orbit(2, -1, 16).to_json()
    assert rec["outcome"] == "cycle"
    assert rec["iterates"][:3] == ["0", "-1", "0"]
    assert rec["period"] == 2 and rec["preperiod"] == 0
    rec = critical_orbit(2, DyadicInterval.point(Fraction(-1, 2)), 500).to_json()
    assert rec["outcome"] == "converged"
    assert all(isinstance(z, list) and len(z) == 2 for z in rec["iterates"])


def test_is_pcf():
    assert is_pcf(2, -1)
    assert is_pcf(2, 0)
    assert is_pcf(2, -2)
    assert is_pcf(4, -1)
    assert not is_pcf(2, 1)
    assert not is_pcf(2, Fraction(-1, 2))
    assert not is_pcf(3, -1)
    assert not is_pcf(4, -2)


def test_attracting_cycle_probe():
    got = attracting_cycle_probe(2, -1.0)
    assert got is not None and got[0] == 2 and abs(got[1]) < 1e-6
    got = attracting_cycle_probe(2, 0.0)
    assert got == (1, 0.0)
    assert attracting_cycle_probe(2, 0.3) is None
    got = attracting_cycle_probe(2, -0.5)
    assert got is not None and got[0] == 1
    assert abs(got[1] - (1 - 3**0.5)) < 1e-6
