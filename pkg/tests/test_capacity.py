"""Interval diameters, sigma/tau enclosures, the product inequality,
and the Fekete cross-check."""

import math
from fractions import Fraction

from multibrot.capacity import (
    D_table,
    dn_interval,
    fekete_oracle,
    inequality_41,
    sigma,
    tau,
)
from multibrot.exact import ln2_interval


def test_diameter_table_values():
    table = D_table(4)
    assert table[2] == 1
    assert table[3] == Fraction(1, 16)
    assert table[4] == Fraction(1, 3125)
    assert table.last == 4


def test_diameter_table_recursion_holds():
    table = D_table(20)
    for n in range(3, 21):
        step = Fraction(
            n**n * (n - 2) ** (n - 2), 2 ** (2 * n - 2) * (2 * n - 3) ** (2 * n - 3)
        )
        assert table[n] == table[n - 1] * step
        assert 0 < table[n] < table[n - 1]


def test_diameter_table_access_and_json():
    table = D_table(4)
    assert table.to_json() == {"2": "1", "3": "1/16", "4": "1/3125"}
    try:
        table[5]
        assert False
    except IndexError:
        pass
    try:
        D_table(1)
        assert False
    except ValueError:
        pass


def test_tau_exact_and_enclosed():
    t2 = tau(2)
    assert t2.lo == t2.hi == 1
    t3 = tau(3, 96)
    # tau(3) = 2^(-2/3)
    assert t3.width <= Fraction(1, 1 << 96)
    assert t3.lo**3 <= Fraction(1, 4) <= t3.hi**3
    try:
        tau(1)
        assert False
    except ValueError:
        pass


def test_sigma_exact_and_enclosed():
    s2 = sigma(2)
    assert s2.lo == s2.hi == 4
    s4 = sigma(4, 96)
    want = 4 ** (4 / 3) * (2 ** (1 / 3) - 1)
    assert abs(float(s4.mid) - want) < 1e-12
    try:
        sigma(1)
        assert False
    except ValueError:
        pass


def test_tau_and_sigma_certified_decreasing():
    bits = 160
    prev = tau(2, bits)
    for n in range(3, 31):
        cur = tau(n, bits)
        assert cur.strictly_less(prev)
        prev = cur
    prev = sigma(2, bits)
    for d in range(3, 31):
        cur = sigma(d, bits)
        assert cur.strictly_less(prev)
        prev = cur


def test_tau_and_sigma_limits():
    t = tau(200, 160)
    assert t.lo > Fraction(1, 4)
    assert t.hi - Fraction(1, 4) < Fraction(2, 100)
    s = sigma(100, 160)
    ln2 = ln2_interval(160)
    assert s.lo > ln2.hi
    assert s.hi - ln2.lo < Fraction(5, 100)


def test_dn_interval():
    d2 = dn_interval(0, 4, 2)
    assert d2.lo == d2.hi == 4
    d3 = dn_interval(-1, 1, 3, 128)
    assert d3.lo**3 <= 2 <= d3.hi**3
    assert d3.width <= 2 * Fraction(1, 1 << 126)
    try:
        dn_interval(1, 1, 2)
        assert False
    except ValueError:
        pass


def test_dn_scaling_covariance():
    for n in (3, 5, 8):
        unit = dn_interval(0, 1, n)
        scaled = dn_interval(Fraction(-1, 2), Fraction(7, 2), n)
        assert scaled.lo == 4 * unit.lo
        assert scaled.hi == 4 * unit.hi


def test_dn_monotone_decreasing():
    bits = 128
    prev = dn_interval(-1, 1, 2, bits)
    for n in range(3, 51):
        cur = dn_interval(-1, 1, n, bits)
        assert cur.strictly_less(prev)
        prev = cur


def test_inequality_41_corner_cases():
    v = inequality_41(6, 3)
    assert v.verdict == "fails" and v.product.hi < 1
    v = inequality_41(4, 4)
    assert v.verdict == "fails" and v.product.hi < 1
    v = inequality_41(4, 3)
    assert v.verdict == "holds" and v.product.lo > 1
    assert v.bits_used <= 256
    rec = v.to_json()
    assert rec["d"] == 4 and rec["n"] == 3 and rec["verdict"] == "holds"
    assert Fraction(rec["product_enclosure"][0]) > 1


def test_inequality_41_validation():
    for bad in [(5, 3), (2, 3), (3, 2), (4, 1)]:
        try:
            inequality_41(*bad)
            assert False
        except ValueError:
            pass


def test_fekete_two_points():
    res = fekete_oracle(0, 3, 2)
    assert res.points == (0.0, 3.0)
    assert abs(res.log_product - math.log(3)) < 1e-12
    assert abs(res.dn_estimate() - 3.0) < 1e-12


def test_fekete_three_points_symmetric():
    res = fekete_oracle(-1, 1, 3)
    assert abs(res.points[0] + 1) < 1e-9
    assert abs(res.points[1]) < 1e-6
    assert abs(res.points[2] - 1) < 1e-9
    assert abs(res.log_product - math.log(2)) < 1e-9


def test_fekete_four_points_closed_form():
    res = fekete_oracle(-1, 1, 4)
    inner = 1 / math.sqrt(5)
    want = (-1.0, -inner, inner, 1.0)
    assert all(abs(p - w) < 1e-6 for p, w in zip(res.points, want))
    assert abs(math.exp(res.log_product) - 64 * 5 ** (-2.5)) < 1e-9


def test_fekete_agrees_with_certified_diameter():
    for a, b in [(-1, 1), (0, 1)]:
        for n in range(2, 7):
            res = fekete_oracle(a, b, n, restarts=4)
            mid = float(dn_interval(a, b, n).mid)
            assert abs(res.dn_estimate() - mid) <= 1e-6


def test_fekete_deterministic_and_validated():
    r1 = fekete_oracle(-1, 1, 5, restarts=3, seed=7)
    r2 = fekete_oracle(-1, 1, 5, restarts=3, seed=7)
    assert r1 == r2
    assert r1.restarts_used == 3
    try:
        fekete_oracle(1, 1, 3)
        assert False
    except ValueError:
        pass
    try:
        fekete_oracle(0, 1, 13)
        assert False
    except ValueError:
        pass
