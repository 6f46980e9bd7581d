"""Algebraic numbers: root isolation, arithmetic, valuations, cyclotomy."""

import math
import random
from fractions import Fraction

import sympy

from multibrot.algebraic import (
    AlgebraicNumber,
    NewtonPolygon,
    algebraic_image,
    algebraic_mul,
    arc_unit_images,
    conjugates_in_interval,
    cyclotomic,
    dd_scale,
    euler_phi,
    is_milnor_unit,
    is_root_of_unity,
    is_totally_real,
    real_cyclotomic,
    real_roots_of,
    root_valuations,
    roots_of,
    scaled_minpoly,
    vp,
)
from multibrot.exact import IntPoly, X, is_irreducible

T = sympy.Symbol("T")

SQRT2 = IntPoly([-2, 0, 1])
SQRT6 = IntPoly([-6, 0, 1])


def sqrt_of(n: int) -> AlgebraicNumber:
    return max(real_roots_of(IntPoly([-n, 0, 1])))


def test_roots_of_mixed_quartic():
    # (T^2 - 2)(T^2 + 1): two real roots, one conjugate pair
    p = IntPoly([-2, 0, -1, 0, 1])
    roots = roots_of(p)
    assert len(roots) == 4
    real = [r for r in roots if r.is_real]
    assert len(real) == 2
    assert sorted(float(r) for r in real) == sorted([-math.sqrt(2), math.sqrt(2)])
    for r in roots:
        if not r.is_real:
            z = complex(r)
            assert abs(z - 1j) < 1e-9 or abs(z + 1j) < 1e-9


def test_real_roots_sorted_and_certified():
    p = IntPoly([6, -5, -2, 1])  # roots 1, 3, -2
    roots = real_roots_of(p)
    assert [r.as_fraction() for r in roots] == [-2, 1, 3]
    assert all(r.is_rational for r in roots)


def test_rational_constructor_and_equality():
    a = AlgebraicNumber.from_rational(Fraction(3, 7))
    assert a.is_rational and a.as_fraction() == Fraction(3, 7)
    assert a == Fraction(3, 7)
    assert AlgebraicNumber.from_rational(5) == 5
    assert sqrt_of(2) != sqrt_of(3)
    assert sqrt_of(2) == sqrt_of(2)
    assert -sqrt_of(2) < sqrt_of(2)
    assert hash(AlgebraicNumber.from_rational(2)) == hash(Fraction(2))


def test_refinement_shrinks_interval():
    a = sqrt_of(2)
    iv = a.interval(100)
    assert iv.width <= Fraction(1, 1 << 100)
    assert iv.lo**2 <= 2 <= iv.hi**2


def test_algebraic_mul_surds():
    prod = algebraic_mul(sqrt_of(2), sqrt_of(3))
    assert prod.minpoly == SQRT6
    assert prod > 0
    # collapsing product: sqrt2 * sqrt2 = 2
    sq = algebraic_mul(sqrt_of(2), sqrt_of(2))
    assert sq == 2
    # rational scaling stays exact
    tripled = algebraic_mul(sqrt_of(2), AlgebraicNumber.from_rational(3))
    assert tripled.minpoly == IntPoly([-18, 0, 1])
    assert algebraic_mul(sqrt_of(2), AlgebraicNumber.from_rational(0)) == 0


def test_algebraic_mul_matches_sympy_minpoly():
    rng = random.Random(31)
    squarefree = [2, 3, 5, 6, 7, 10, 11, 13]
    for _ in range(12):
        m, n = rng.choice(squarefree), rng.choice(squarefree)
        prod = algebraic_mul(sqrt_of(m), sqrt_of(n))
        want = sympy.minimal_polynomial(sympy.sqrt(m) * sympy.sqrt(n), T)
        want_coeffs = tuple(reversed([int(c) for c in sympy.Poly(want, T).all_coeffs()]))
        assert prod.minpoly.coeffs == want_coeffs


def test_algebraic_image_polynomial_map():
    a = sqrt_of(2)
    sq = algebraic_image(a, X**2)
    assert sq == 2
    shifted = algebraic_image(a, X**2 + IntPoly([1]))
    assert shifted == 3
    halved = algebraic_image(a, X, 2)
    assert halved.minpoly == IntPoly([-1, 0, 2])


def test_scaled_minpoly():
    assert scaled_minpoly(sqrt_of(2), 3) == IntPoly([-18, 0, 1])
    assert scaled_minpoly(sqrt_of(2), Fraction(1, 2)) == IntPoly([-1, 0, 2])
    assert scaled_minpoly(sqrt_of(2), sqrt_of(3)) == SQRT6
    assert scaled_minpoly(AlgebraicNumber.from_rational(2), sqrt_of(2)) == IntPoly([-8, 0, 1])
    try:
        scaled_minpoly(sqrt_of(2), 0)
        assert False
    except ValueError:
        pass


def test_totally_real():
    assert is_totally_real(sqrt_of(2))
    assert is_totally_real(AlgebraicNumber.from_rational(-7))
    # real cube root of 2 has two complex conjugates
    cbrt2 = real_roots_of(IntPoly([-2, 0, 0, 1]))[0]
    assert not is_totally_real(cbrt2)
    i_unit = [r for r in roots_of(IntPoly([1, 0, 1])) if not r.is_real][0]
    assert not is_totally_real(i_unit)


def test_conjugates_in_interval():
    a = sqrt_of(2)
    assert conjugates_in_interval(a, -2, 2)
    assert not conjugates_in_interval(a, 0, 2)  # -sqrt2 escapes
    assert conjugates_in_interval(AlgebraicNumber.from_rational(Fraction(1, 2)), 0, 1)
    # endpoint membership is closed
    assert conjugates_in_interval(AlgebraicNumber.from_rational(1), 0, 1)
    # algebraic endpoints
    assert conjugates_in_interval(a, -sqrt_of(3), sqrt_of(3))
    assert not conjugates_in_interval(sqrt_of(3), -sqrt_of(2), sqrt_of(2))
    cbrt2 = real_roots_of(IntPoly([-2, 0, 0, 1]))[0]
    assert not conjugates_in_interval(cbrt2, -10, 10)


def test_vp():
    assert vp(12, 2) == 2
    assert vp(Fraction(3, 8), 2) == -3
    assert vp(5, 3) == 0
    assert vp(-27, 3) == 3
    try:
        vp(0, 2)
        assert False
    except ValueError:
        pass
    try:
        vp(1, 4)
        assert False
    except ValueError:
        pass


def test_newton_polygon_and_root_valuations():
    assert root_valuations(IntPoly([-4, 0, 27]), 3) == [Fraction(-3, 2)] * 2
    assert root_valuations(IntPoly([-4, 0, 27]), 2) == [1, 1]
    assert root_valuations(IntPoly([8, 4, 2, 1]), 2) == [1, 1, 1]
    # zero roots are dropped: T^3 + 2T^2 has roots 0, 0, -2
    assert root_valuations(IntPoly([0, 0, 2, 1]), 2) == [1]
    np23 = NewtonPolygon.of(IntPoly([8, 4, 2, 1]), 2)
    assert np23.segments == ((Fraction(-1), 3),)


def test_valuation_sum_identity_random():
    rng = random.Random(55)
    for _ in range(60):
        deg = rng.randint(1, 6)
        coeffs = [rng.randint(-40, 40) for _ in range(deg)] + [rng.randint(1, 40)]
        if coeffs[0] == 0:
            coeffs[0] = 1
        p = IntPoly(coeffs)
        for q in (2, 3, 5):
            vals = root_valuations(p, q)
            assert sum(vals) == vp(p.coeffs[0], q) - vp(p.lc, q)


def test_dd_scale():
    assert dd_scale(2) == 4
    three = dd_scale(3)
    assert three.minpoly == IntPoly([-27, 0, 1])
    assert abs(float(three) - 27**0.5) < 1e-12
    assert abs(float(dd_scale(4)) - 4 ** Fraction(4, 3)) < 1e-9


def test_is_milnor_unit():
    # d = 2: u = 4c must be an odd integer
    assert is_milnor_unit(Fraction(1, 4), 2)
    assert is_milnor_unit(Fraction(-3, 4), 2)
    assert is_milnor_unit(Fraction(-7, 4), 2)
    assert not is_milnor_unit(Fraction(-1, 2), 2)
    assert not is_milnor_unit(Fraction(1, 3), 2)
    assert not is_milnor_unit(Fraction(1, 8), 2)
    # d = 3: c = 2 sqrt(3)/9 gives u = 2
    c = max(real_roots_of(IntPoly([-4, 0, 27])))
    assert is_milnor_unit(c, 3)
    try:
        is_milnor_unit(0, 2)
        assert False
    except ValueError:
        pass


def test_cyclotomic_polynomials():
    assert cyclotomic(1) == X - IntPoly([1])
    assert cyclotomic(2) == X + IntPoly([1])
    assert cyclotomic(4) == IntPoly([1, 0, 1])
    assert cyclotomic(6) == IntPoly([1, -1, 1])
    assert cyclotomic(12) == IntPoly([1, 0, -1, 0, 1])
    for m in range(1, 31):
        phi = cyclotomic(m)
        assert phi.degree == euler_phi(m)
        assert is_irreducible(phi)


def test_euler_phi_matches_sympy():
    for m in range(1, 60):
        assert euler_phi(m) == int(sympy.totient(m))


def test_is_root_of_unity():
    assert is_root_of_unity(AlgebraicNumber.from_rational(1)) == 1
    assert is_root_of_unity(AlgebraicNumber.from_rational(-1)) == 2
    zeta12 = roots_of(cyclotomic(12))[0]
    assert is_root_of_unity(zeta12) == 12
    assert is_root_of_unity(sqrt_of(2)) is None
    # golden ratio is a unit but not a root of unity
    golden = max(real_roots_of(IntPoly([-1, -1, 1])))
    assert is_root_of_unity(golden) is None


def test_real_cyclotomic():
    assert real_cyclotomic(1) == X - IntPoly([2])
    assert real_cyclotomic(2) == X + IntPoly([2])
    assert real_cyclotomic(3) == X + IntPoly([1])
    assert real_cyclotomic(4) == X
    assert real_cyclotomic(5) == IntPoly([-1, 1, 1])
    assert real_cyclotomic(6) == X - IntPoly([1])
    for m in range(3, 25):
        psi = real_cyclotomic(m)
        got = sorted(float(r) for r in real_roots_of(psi))
        want = sorted(
            2 * math.cos(2 * math.pi * k / m)
            for k in range(1, m + 1)
            if math.gcd(k, m) == 1 and 2 * k <= m
        )
        assert len(got) == len(want)
        assert all(abs(g - w) < 1e-9 for g, w in zip(got, want))


def test_arc_unit_images():
    assert arc_unit_images(1) == set()
    assert arc_unit_images(2) == {AlgebraicNumber.from_rational(-2)}
    want = {
        AlgebraicNumber.from_rational(-2),
        AlgebraicNumber.from_rational(-1),
        AlgebraicNumber.from_rational(0),
    }
    assert arc_unit_images(3) == want - {AlgebraicNumber.from_rational(0)}
    for bound in (4, 5, 12, 64):
        assert arc_unit_images(bound) == want


def test_json_roundtrip():
    a = sqrt_of(2)
    back = AlgebraicNumber.from_json(a.to_json())
    assert back == a
    z = [r for r in roots_of(IntPoly([1, 0, 1])) if not r.is_real][0]
    back = AlgebraicNumber.from_json(z.to_json())
    assert back == z
    bad = a.to_json()
    bad["locator"] = ["-10", "10"]  # isolates two roots
    try:
        AlgebraicNumber.from_json(bad)
        assert False
    except ValueError:
        pass
