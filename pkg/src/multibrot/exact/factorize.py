"""Factorization of integer polynomials into irreducibles.

Pipeline: Yun squarefree decomposition, then for each squarefree part a
modular factorization (distinct-degree plus Cantor-Zassenhaus splitting
over a small prime field), multifactor Hensel lifting past the Mignotte
factor bound, and subset recombination with trial division.  Degree
patterns from several primes are intersected first, which certifies
many inputs irreducible before any lifting happens.  Randomness only
steers Cantor-Zassenhaus splitting and is seeded from the input, so
results are deterministic.
"""

from __future__ import annotations

import itertools
import random
import zlib

import gmpy2
from gmpy2 import mpz

from .intpoly import IntPoly, divides, exact_quotient, yun_squarefree

_PRIME_PATTERN_COUNT = 4
_MAX_MODULAR_FACTORS = 40


def factor(p: IntPoly) -> tuple[int, list[tuple[IntPoly, int]]]:
    """Content and irreducible factors of p with multiplicities.

    p == content * prod f_i^m_i with every f_i primitive, irreducible
    over Q, positive leading coefficient.  Factors are sorted by degree
    then coefficient tuple.
    """
    if not p:
        raise ValueError("zero polynomial")
    cont, parts = yun_squarefree(p)
    out: list[tuple[IntPoly, int]] = []
    for g, mult in parts:
        for h in _factor_squarefree(g):
            out.append((h, mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return cont, out


def factor_irreducible(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Irreducible factors with multiplicities, content dropped."""
    return factor(p)[1]


def is_irreducible(p: IntPoly) -> bool:
    """True when the primitive part of p is irreducible over Q."""
    q = p.primitive_part()
    if q.degree < 1:
        return False
    cont, factors = factor(q)
    return len(factors) == 1 and factors[0][1] == 1


def _factor_squarefree(g: IntPoly) -> list[IntPoly]:
    """Irreducible factors of a squarefree primitive g, lc > 0."""
    if g.degree == 1:
        return [g]
    out = []
    if g.coeffs[0] == 0:
        out.append(IntPoly([0, 1]))
        g = IntPoly(g.coeffs[1:])
        if g.degree == 0:
            return out
        if g.degree == 1:
            return out + [g]

    primes, patterns, best = _modular_patterns(g)
    allowed = _allowed_degrees(g.degree, patterns)
    if not any(0 < d < g.degree for d in allowed):
        return out + [g]

    p, modular = best
    factors = _recombine(g, p, modular, allowed)
    return out + factors


# -- prime selection and degree patterns -----------------------------------


def _next_prime(n: int) -> int:
    return int(gmpy2.next_prime(n))


def _modular_patterns(g: IntPoly):
    """Degree patterns of g mod p for several good primes.

    Returns (primes, patterns, (best_prime, modular_factorization))
    where the best prime minimizes the modular factor count.
    """
    primes: list[int] = []
    patterns: list[list[int]] = []
    best = None
    best_count = None
    p = 2
    rng = random.Random(zlib.crc32(str(g.coeffs).encode()))
    while len(primes) < _PRIME_PATTERN_COUNT:
        p = _next_prime(p)
        if g.lc % p == 0:
            continue
        gp = [c % p for c in g.coeffs]
        if not _p_is_squarefree(gp, p):
            continue
        ddf = _distinct_degree(gp, p)
        pattern = []
        for d, prod in ddf:
            pattern.extend([d] * ((len(prod) - 1) // d))
        primes.append(p)
        patterns.append(pattern)
        if best_count is None or len(pattern) < best_count:
            blocks = []
            for d, prod in ddf:
                blocks.extend((d2, f) for d2, f in _equal_degree_split(prod, d, p, rng))
            best = (p, [f for _, f in blocks])
            best_count = len(pattern)
        if best_count == 1:
            break
    return primes, patterns, best


def _allowed_degrees(n: int, patterns: list[list[int]]) -> set[int]:
    """Degrees a true factor can have, from subset sums of every pattern."""
    allowed = set(range(n + 1))
    for pat in patterns:
        poss = 1
        for d in pat:
            poss |= poss << d
        s = {i for i in range(n + 1) if (poss >> i) & 1}
        allowed &= s
    return allowed


# -- arithmetic in F_p[x] ----------------------------------------------------

# polynomials mod p are lists of ints in [0, p), index = degree


def _p_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _p_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _p_trim([c % p for c in out])


def _p_rem(a: list[int], f: list[int], p: int) -> list[int]:
    """a mod f with f made monic mod p."""
    inv = pow(f[-1], -1, p)
    f = [(c * inv) % p for c in f]
    r = list(a)
    df = len(f) - 1
    while len(r) - 1 >= df:
        top = r[-1]
        if top:
            k = len(r) - 1 - df
            for j in range(df):
                r[j + k] = (r[j + k] - top * f[j]) % p
        r.pop()
        _p_trim(r)
    return r


def _p_mulmod(a, b, f, p):
    return _p_rem(_p_mul(a, b, p), f, p)


def _p_powmod(a, e: int, f, p):
    result = [1]
    base = _p_rem(a, f, p)
    while e:
        if e & 1:
            result = _p_mulmod(result, base, f, p)
        base = _p_mulmod(base, base, f, p)
        e >>= 1
    return result


def _p_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _p_rem(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [(c * inv) % p for c in a]
    return a


def _p_deriv(a, p):
    return _p_trim([(i * a[i]) % p for i in range(1, len(a))])


def _p_is_squarefree(a, p) -> bool:
    a = _p_trim(list(a))
    if len(a) - 1 < 1:
        return False
    d = _p_deriv(a, p)
    if not d:
        return False
    return len(_p_gcd(a, d, p)) == 1


def _p_monic(a, p):
    inv = pow(a[-1], -1, p)
    return [(c * inv) % p for c in a]


def _distinct_degree(gp: list[int], p: int) -> list[tuple[int, list[int]]]:
    """[(d, product of irreducible factors of degree d)], monic inputs."""
    f = _p_monic(_p_trim(list(gp)), p)
    out = []
    h = [0, 1]
    d = 0
    while len(f) - 1 > 0:
        d += 1
        if 2 * d > len(f) - 1:
            out.append((len(f) - 1, f))
            break
        h = _p_powmod(h, p, f, p)
        hh = list(h) + [0] * max(0, 2 - len(h))
        hx = _p_trim([(hh[i] - (1 if i == 1 else 0)) % p for i in range(len(hh))])
        g = _p_gcd(hx, f, p)
        if len(g) > 1:
            out.append((d, g))
            q, r = _p_divmod(f, g, p)
            assert not r
            f = q
            h = _p_rem(h, f, p)
    return out


def _p_divmod(a, b, p):
    inv = pow(b[-1], -1, p)
    bm = [(c * inv) % p for c in b]
    r = list(a)
    q = [0] * max(0, len(r) - len(bm) + 1)
    db = len(bm) - 1
    while len(r) - 1 >= db:
        top = r[-1]
        k = len(r) - 1 - db
        if top:
            q[k] = top
            for j in range(db):
                r[j + k] = (r[j + k] - top * bm[j]) % p
        r.pop()
        _p_trim(r)
    # q was computed against monic bm; fold b's unit back in
    q = [(c * inv) % p for c in q]
    return _p_trim(q), r


def _equal_degree_split(prod: list[int], d: int, p: int, rng) -> list[tuple[int, list[int]]]:
    """Split a product of degree-d irreducibles into its factors."""
    n = len(prod) - 1
    if n == d:
        return [(d, prod)]
    exponent = (p**d - 1) // 2
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        a = _p_trim(a)
        if len(a) - 1 < 1:
            continue
        g = _p_gcd(a, prod, p)
        if len(g) - 1 >= 1 and len(g) < len(prod):
            left, right = g, _p_divmod(prod, g, p)[0]
        else:
            b = _p_powmod(a, exponent, prod, p)
            b = _p_trim([(b[i] - (1 if i == 0 else 0)) % p for i in range(max(len(b), 1))])
            if not b:
                continue
            g = _p_gcd(b, prod, p)
            if len(g) - 1 < 1 or len(g) == len(prod):
                continue
            left, right = g, _p_divmod(prod, g, p)[0]
        return _equal_degree_split(left, d, p, rng) + _equal_degree_split(
            right, d, p, rng
        )


# -- Hensel lifting -----------------------------------------------------------


def _z_mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _p_trim([c % m for c in out])


def _z_divmod_monic(a, b, m):
    """Division by monic b in (Z/m)[x]."""
    assert b[-1] == 1
    r = list(a)
    q = [0] * max(0, len(r) - len(b) + 1)
    db = len(b) - 1
    while len(r) - 1 >= db:
        top = r[-1]
        k = len(r) - 1 - db
        if top:
            q[k] = top
            for j in range(db):
                r[j + k] = (r[j + k] - top * b[j]) % m
        r.pop()
        _p_trim(r)
    return q, r


def _z_add(a, b, m):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % m
    return _p_trim([c % m for c in out])


def _z_sub(a, b, m):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % m
    return _p_trim([c % m for c in out])


def _p_xgcd(a, b, p):
    """(g, s, t) with s a + t b = g, g monic gcd in F_p[x]."""
    r0, r1 = _p_trim([c % p for c in a]), _p_trim([c % p for c in b])
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _p_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _z_sub(s0, _p_mul(q, s1, p), p)
        t0, t1 = t1, _z_sub(t0, _p_mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    norm = lambda u: [(c * inv) % p for c in u]
    return norm(r0), norm(s0), norm(t0)


def _hensel_step(f, g, h, s, t, m):
    """One quadratic Hensel step modulo m -> m^2.

    Input: f = g h mod m, s g + t h = 1 mod m, h monic.
    Output: (g*, h*, s*, t*) with the same relations mod m^2, h* monic.
    """
    m2 = m * m
    e = _z_sub(f, _z_mul(g, h, m2), m2)
    q, r = _z_divmod_monic(_z_mul(s, e, m2), h, m2)
    g1 = _z_add(g, _z_add(_z_mul(t, e, m2), _z_mul(q, g, m2), m2), m2)
    h1 = _z_add(h, r, m2)
    b = _z_sub(_z_add(_z_mul(s, g1, m2), _z_mul(t, h1, m2), m2), [1], m2)
    c, d = _z_divmod_monic(_z_mul(s, b, m2), h1, m2)
    s1 = _z_sub(s, d, m2)
    t1 = _z_sub(t, _z_add(_z_mul(t, b, m2), _z_mul(c, g1, m2), m2), m2)
    return g1, h1, s1, t1


def _hensel_pair(f, g, h, s, t, p, bound):
    """Lift f = g h from mod p to mod p^(2^k) >= bound."""
    m = p
    while m < bound:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m = m * m
    return g, h, m


def _tree_lift(f: list[int], ws: list[list[int]], lc: int, p: int, bound: int):
    """Lift f = lc * prod(ws) mod p to monic factors mod m >= bound.

    Returns (lifted_monic_factors, modulus).  f's coefficients are taken
    mod the final modulus as needed; the invariant maintained is
    f = U * V mod current modulus at every split, V monic.
    """
    m = p
    while m < bound:
        m = m * m
    fm = [c % m for c in f]
    if len(ws) == 1:
        inv = pow(fm[-1], -1, m)
        return [[(c * inv) % m for c in fm]], m
    half = len(ws) // 2
    left, right = ws[:half], ws[half:]
    u0 = [lc % p]
    for w in left:
        u0 = _p_mul(u0, w, p)
    v0 = [1]
    for w in right:
        v0 = _p_mul(v0, w, p)
    gcd1, s, t = _p_xgcd(u0, v0, p)
    assert len(gcd1) == 1
    u, v, m2 = _hensel_pair(fm, u0, v0, s, t, p, bound)
    assert m2 == m
    lu, _ = _tree_lift(u, left, lc, p, bound)
    lv, _ = _tree_lift(v, right, 1, p, bound)
    return lu + lv, m


# -- recombination ------------------------------------------------------------


def _mignotte_bound(g: IntPoly) -> int:
    """Bound on |coefficient| of lc(g) times any monic factor of g."""
    n = g.degree
    height = max(abs(c) for c in g.coeffs)
    root = int(gmpy2.isqrt(n + 1)) + 1
    return (1 << (n + 1)) * root * height * abs(g.lc)


def _sym(x: int, m: int) -> int:
    x %= m
    return x - m if 2 * x > m else x


def _recombine(g: IntPoly, p: int, modular: list[list[int]], allowed: set[int]) -> list[IntPoly]:
    """Zassenhaus subset recombination after Hensel lifting."""
    bound = 2 * _mignotte_bound(g) + 1
    lifted, m = _tree_lift([int(c) for c in g.coeffs], modular, g.lc, p, bound)
    if len(lifted) > _MAX_MODULAR_FACTORS:
        raise RuntimeError("too many modular factors to recombine")

    factors: list[IntPoly] = []
    remaining = list(range(len(lifted)))
    size = 1
    while 2 * size <= len(remaining):
        found = False
        for combo in itertools.combinations(remaining, size):
            deg = sum(len(lifted[i]) - 1 for i in combo)
            if deg not in allowed:
                continue
            lc = g.lc
            # cheap test on the constant coefficient first
            c0 = lc % m
            for i in combo:
                c0 = (c0 * lifted[i][0]) % m
            c0 = _sym(c0, m)
            g0 = g.coeffs[0]
            if g0 != 0 and (c0 == 0 or (lc * g0) % c0 != 0):
                continue
            prod = [lc % m]
            for i in combo:
                prod = _z_mul(prod, lifted[i], m)
            cand = IntPoly([_sym(c, m) for c in prod]).primitive_part()
            if cand.degree < 1:
                continue
            if divides(cand, g):
                factors.append(cand if cand.lc > 0 else -cand)
                g = exact_quotient(g, cand)
                for i in combo:
                    remaining.remove(i)
                found = True
                break
        if not found:
            size += 1
    if g.degree >= 1:
        factors.append(g if g.lc > 0 else -g)
    return factors
