"""Exact univariate polynomial arithmetic over the integers.

Polynomials are stored densely, coefficient of degree i at index i.
Everything here is exact: resultants via the subresultant PRS,
discriminants, primitive-PRS gcd, Yun squarefree decomposition, Sturm
chains, and real root isolation with rational endpoints.  gmpy2
integers are used inside the resultant loop where products get large;
inputs and outputs are plain Python ints.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import gmpy2
from gmpy2 import mpz


def _trim(coeffs: list) -> list:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


class IntPoly:
    """Immutable integer polynomial, coefficients indexed by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # -- basic structure -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            a = self.coeffs[i]
            if a == 0:
                continue
            term = f"{abs(a)}" if (i == 0 or abs(a) != 1) else ""
            if i == 1:
                term += "T"
            elif i > 1:
                term += f"T^{i}"
            parts.append(("- " if a < 0 else "+ ") + term)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, x in enumerate(other.coeffs):
            out[i] -= x
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly([-x for x in self.coeffs])

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([other * x for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise ValueError("negative power")
        result = IntPoly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derivative(self) -> "IntPoly":
        return IntPoly([i * self.coeffs[i] for i in range(1, len(self.coeffs))])

    def compose(self, inner: "IntPoly") -> "IntPoly":
        """self(inner(T)), by Horner on the outer coefficients."""
        acc = IntPoly()
        for a in reversed(self.coeffs):
            acc = acc * inner + IntPoly([a])
        return acc

    def scale_roots(self, num: int, den: int) -> "IntPoly":
        """Integer polynomial whose roots are (num/den) times the roots
        of self.  num and den must be nonzero."""
        n = self.degree
        if n < 0:
            return IntPoly()
        return IntPoly(
            [self.coeffs[i] * den**i * num ** (n - i) for i in range(n + 1)]
        )

    def negate_roots(self) -> "IntPoly":
        """self(-T), roots negated."""
        return IntPoly(
            [-a if i % 2 else a for i, a in enumerate(self.coeffs)]
        )

    # -- evaluation ------------------------------------------------------

    def __call__(self, x):
        """Evaluate by Horner.  Exact for int and Fraction arguments,
        and works for any type supporting * and + with ints (intervals,
        complex rectangles)."""
        acc = None
        for a in reversed(self.coeffs):
            acc = a if acc is None else acc * x + a
        if acc is None:
            return 0
        return acc

    def sign_at(self, x) -> int:
        v = self(Fraction(x))
        return (v > 0) - (v < 0)

    def sign_at_inf(self, direction: int) -> int:
        """Sign of self(x) as x -> +inf (direction=+1) or -inf (-1)."""
        if not self.coeffs:
            return 0
        s = (self.lc > 0) - (self.lc < 0)
        if direction < 0 and self.degree % 2:
            s = -s
        return s

    # -- content and normal forms ----------------------------------------

    def content(self) -> int:
        """Gcd of the coefficients, with the sign of the leading one.

        content(0) = 0.  The primitive part self // content has positive
        leading coefficient.
        """
        if not self.coeffs:
            return 0
        g = mpz(0)
        for a in self.coeffs:
            g = gmpy2.gcd(g, a)
            if g == 1:
                break
        g = int(g)
        return -g if self.lc < 0 else g

    def primitive_part(self) -> "IntPoly":
        c = self.content()
        if c in (0, 1):
            return self
        return IntPoly([a // c for a in self.coeffs])

    # -- serialization ----------------------------------------------------

    def to_json_list(self) -> list[str]:
        """Coefficients as decimal strings, index = degree."""
        return [str(a) for a in self.coeffs]

    @classmethod
    def from_json_list(cls, items: Sequence[str]) -> "IntPoly":
        return cls([int(s) for s in items])


X = IntPoly([0, 1])
ONE = IntPoly([1])


# -- rational coefficient helpers ------------------------------------------


def divmod_frac(
    a: Sequence, b: Sequence
) -> tuple[list[Fraction], list[Fraction]]:
    """Quotient and remainder of coefficient lists over the rationals."""
    b = [Fraction(x) for x in b]
    while b and b[-1] == 0:
        b.pop()
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(x) for x in a]
    while r and r[-1] == 0:
        r.pop()
    q = [Fraction(0)] * max(0, len(r) - len(b) + 1)
    db = len(b) - 1
    while len(r) - 1 >= db:
        k = len(r) - 1 - db
        coef = r[-1] / b[-1]
        q[k] = coef
        for j in range(db + 1):
            r[j + k] -= coef * b[j]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return q, r


def divides(b: IntPoly, a: IntPoly) -> bool:
    """True when b divides a over the rationals."""
    if not b:
        return not a
    if not a:
        return True
    if b.degree > a.degree:
        return False
    _, r = divmod_frac(a.coeffs, b.coeffs)
    return not r


def exact_quotient(a: IntPoly, b: IntPoly) -> IntPoly:
    """a / b for a known divisor b, with an integer result expected."""
    q, r = divmod_frac(a.coeffs, b.coeffs)
    if r:
        raise ValueError("expected exact polynomial division")
    if any(x.denominator != 1 for x in q):
        raise ValueError("expected integer quotient")
    return IntPoly([int(x) for x in q])


def _frac_to_primitive(fr: Sequence[Fraction]) -> IntPoly:
    """Clear denominators and strip content, preserving sign."""
    fr = list(fr)
    while fr and fr[-1] == 0:
        fr.pop()
    if not fr:
        return IntPoly()
    den = 1
    for x in fr:
        den = den * x.denominator // int(gmpy2.gcd(den, x.denominator))
    ints = IntPoly([int(x * den) for x in fr])
    c = abs(ints.content())
    return IntPoly([a // c for a in ints.coeffs])


# -- resultant and friends (subresultant PRS) -----------------------------


def _prem(a: list, b: list) -> list:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, mpz lists."""
    da, db = len(a) - 1, len(b) - 1
    lb = b[-1]
    r = list(a)
    for k in range(da - db, -1, -1):
        top = r[db + k]
        r = [c * lb for c in r]
        for j in range(db + 1):
            r[j + k] -= top * b[j]
        assert not r[db + k]
        r.pop()
    return _trim(r)


def _resultant_mpz(a: list, b: list):
    """Subresultant PRS resultant of mpz coefficient lists.

    Convention: Res(a, b) = lc(a)^deg(b) * prod b(alpha_i) over the
    roots alpha_i of a, so Res(a, b) = (-1)^(deg a * deg b) Res(b, a).
    """
    a = _trim(list(a))
    b = _trim(list(b))
    if not a or not b:
        raise ValueError("resultant of the zero polynomial is undefined")
    if len(a) == 1 and len(b) == 1:
        return mpz(1)
    s = 1
    if len(a) - 1 < len(b) - 1:
        if ((len(a) - 1) * (len(b) - 1)) % 2:
            s = -s
        a, b = b, a
    if len(b) == 1:
        return s * b[0] ** (len(a) - 1)
    g = mpz(1)
    h = mpz(1)
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if (da % 2) and (db % 2):
            s = -s
        r = _prem(a, b)
        if not r:
            return mpz(0)
        denom = g * h**delta
        a, b = b, [c // denom for c in r]
        g = a[-1]
        if delta:
            h = g**delta // h ** (delta - 1)
        if len(b) == 1:
            dA = len(a) - 1
            if dA >= 1:
                return s * (b[0] ** dA // h ** (dA - 1))
            return s * h


def resultant(p: IntPoly, q: IntPoly) -> int:
    """Res(p, q) = lc(p)^deg(q) * prod over roots of p of q(root)."""
    return int(_resultant_mpz([mpz(c) for c in p.coeffs], [mpz(c) for c in q.coeffs]))


def discriminant(p: IntPoly) -> int:
    """disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p), an integer."""
    n = p.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    r = resultant(p, p.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    d, rem = divmod(sign * r, p.lc)
    assert rem == 0, "resultant not divisible by leading coefficient"
    return d


# -- gcd, squarefree -------------------------------------------------------


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Gcd over Z: primitive gcd with positive leading coefficient,
    times the gcd of the contents."""
    if not p:
        return q if (not q or q.lc > 0) else -q
    if not q:
        return p if p.lc > 0 else -p
    cont = int(gmpy2.gcd(abs(p.content()), abs(q.content())))
    a = [mpz(c) for c in p.primitive_part().coeffs]
    b = [mpz(c) for c in q.primitive_part().coeffs]
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, r
        if b:
            g = mpz(0)
            for c in b:
                g = gmpy2.gcd(g, c)
                if g == 1:
                    break
            if b[-1] < 0:
                g = -g
            if g != 1:
                b = [c // g for c in b]
    g = mpz(0)
    for c in a:
        g = gmpy2.gcd(g, c)
    if a[-1] < 0:
        g = -g
    return IntPoly([int(c // g) * cont for c in a])


def squarefree_part(p: IntPoly) -> IntPoly:
    """Product of the distinct irreducible factors, primitive, lc > 0."""
    if p.degree < 1:
        raise ValueError("squarefree part needs degree >= 1")
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        q = p.primitive_part()
        return q if q.lc > 0 else -q
    q, r = divmod_frac(p.coeffs, g.coeffs)
    assert not r
    out = _frac_to_primitive(q)
    return out if out.lc > 0 else -out


def yun_squarefree(p: IntPoly) -> tuple[int, list[tuple[IntPoly, int]]]:
    """Yun decomposition: p = content * prod g_i^i over the returned
    (g_i, i), with each g_i squarefree, pairwise coprime, primitive,
    lc > 0.  Trivial g_i are omitted."""
    if not p:
        raise ValueError("zero polynomial")
    cont = p.content()
    w = p.primitive_part()
    if w.degree < 1:
        return cont, []
    g = poly_gcd(w, w.derivative())
    if g.degree == 0:
        return cont, [(w, 1)]

    def deriv(fr: list[Fraction]) -> list[Fraction]:
        return [i * fr[i] for i in range(1, len(fr))]

    def sub(u: list[Fraction], v: list[Fraction]) -> list[Fraction]:
        out = list(u) + [Fraction(0)] * max(0, len(v) - len(u))
        for i, x in enumerate(v):
            out[i] -= x
        while out and out[-1] == 0:
            out.pop()
        return out

    c, r = divmod_frac(w.coeffs, g.coeffs)
    assert not r
    dq, r = divmod_frac(w.derivative().coeffs, g.coeffs)
    assert not r
    d = sub(dq, deriv(c))
    out: list[tuple[IntPoly, int]] = []
    i = 1
    while len(c) - 1 >= 1:
        a = poly_gcd(_frac_to_primitive(c), _frac_to_primitive(d))
        if a.degree >= 1:
            out.append((a, i))
        c, r = divmod_frac(c, a.coeffs)
        assert not r
        dq, r = divmod_frac(d, a.coeffs)
        assert not r
        d = sub(dq, deriv(c))
        i += 1
    return cont, out


# -- Sturm chains and root isolation ---------------------------------------


class SturmChain:
    """Sturm chain of the squarefree part of a polynomial.

    count(a, b) returns the number of distinct real roots in the
    half-open interval (a, b]; None stands for an infinite endpoint.
    Rational endpoints that happen to be roots are divided out, so the
    count is exact in every case.
    """

    def __init__(self, p: IntPoly):
        if not p:
            raise ValueError("zero polynomial")
        sf = squarefree_part(p) if p.degree >= 1 else ONE
        chain = [sf]
        if sf.degree >= 1:
            chain.append(sf.derivative().primitive_part())
            while chain[-1].degree >= 1:
                q, r = divmod_frac(chain[-2].coeffs, chain[-1].coeffs)
                rem = _frac_to_primitive(r)
                if not rem:
                    break
                # sign matters, _frac_to_primitive preserves it
                neg = IntPoly([-x for x in rem.coeffs])
                chain.append(neg)
        self.poly = p
        self.squarefree = sf
        self.chain = chain

    @staticmethod
    def _variations(signs: list[int]) -> int:
        seq = [s for s in signs if s != 0]
        return sum(1 for i in range(len(seq) - 1) if seq[i] != seq[i + 1])

    def variations_at(self, x) -> int:
        x = Fraction(x)
        return self._variations([q.sign_at(x) for q in self.chain])

    def variations_at_inf(self, direction: int) -> int:
        return self._variations([q.sign_at_inf(direction) for q in self.chain])

    def count(self, a, b) -> int:
        """Distinct real roots in (a, b], None meaning an infinite end."""
        if a is not None and b is not None and Fraction(a) >= Fraction(b):
            return 0
        sf = self.squarefree
        if sf.degree < 1:
            return 0
        if a is not None and sf(Fraction(a)) == 0:
            red = divide_out_rational_root(sf, Fraction(a))
            return SturmChain(red).count(a, b) if red.degree >= 1 else 0
        if b is not None and sf(Fraction(b)) == 0:
            red = divide_out_rational_root(sf, Fraction(b))
            inner = SturmChain(red).count(a, b) if red.degree >= 1 else 0
            return inner + 1
        va = self.variations_at_inf(-1) if a is None else self.variations_at(a)
        vb = self.variations_at_inf(+1) if b is None else self.variations_at(b)
        return va - vb


def divide_out_rational_root(p: IntPoly, root: Fraction) -> IntPoly:
    """p divided by (den*T - num) for a known rational root num/den."""
    root = Fraction(root)
    if p(root) != 0:
        raise ValueError("not a root")
    lin = IntPoly([-root.numerator, root.denominator])
    q, r = divmod_frac(p.coeffs, lin.coeffs)
    assert not r
    return _int_quotient(q)


def _int_quotient(q: list[Fraction]) -> IntPoly:
    den = 1
    for x in q:
        den = den * x.denominator // int(gmpy2.gcd(den, x.denominator))
    return IntPoly([int(x * den) for x in q])


def sturm_count(p: IntPoly, a, b) -> int:
    """Number of distinct real roots of p in (a, b]; None = infinite end."""
    return SturmChain(p).count(a, b)


def count_real_roots(p: IntPoly) -> int:
    return SturmChain(p).count(None, None)


def cauchy_bound(p: IntPoly) -> Fraction:
    """B with every real root of p inside [-B, B]."""
    if p.degree < 1:
        return Fraction(0)
    m = max(abs(a) for a in p.coeffs[:-1])
    return 1 + Fraction(m, abs(p.lc))


def isolate_real_roots(p: IntPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint rational intervals, one distinct real root of p in each.

    Intervals are either degenerate [r, r] at an exact rational root or
    open (a, b) with p(a)p(b) < 0 and exactly one root inside; they are
    returned sorted increasingly and cover all real roots.
    """
    if p.degree < 1:
        return []
    sf = squarefree_part(p)
    chain = SturmChain(sf)
    B = cauchy_bound(sf) + 1
    out: list[tuple[Fraction, Fraction]] = []

    def nonroot_between(lo: Fraction, hi: Fraction, start: Fraction) -> Fraction:
        """A point in (lo, hi) near start where sf does not vanish and
        with no root between it and hi if start drifts left, by halving."""
        x = start
        while sf(x) == 0:
            x = (x + lo) / 2
        return x

    def recurse(lo: Fraction, hi: Fraction, n: int):
        # invariant: sf(lo) != 0 != sf(hi), n roots in (lo, hi)
        if n == 0:
            return
        if n == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        if sf(mid) == 0:
            out.append((mid, mid))
            # choose gap endpoints around mid with nothing else inside
            eps = (hi - lo) / 4
            while True:
                lmid, rmid = mid - eps, mid + eps
                if (
                    sf(lmid) != 0
                    and sf(rmid) != 0
                    and chain.count(lmid, mid) == 1
                    and chain.count(mid, rmid) == 0
                ):
                    break
                eps /= 2
            recurse(lo, lmid, chain.count(lo, lmid))
            recurse(rmid, hi, chain.count(rmid, hi))
        else:
            nl = chain.count(lo, mid)
            recurse(lo, mid, nl)
            recurse(mid, hi, n - nl)

    total = chain.count(-B, B)
    recurse(-B, B, total)
    out.sort(key=lambda iv: iv[0])
    return out


def refine_isolator(
    sf: IntPoly, iv: tuple[Fraction, Fraction], width: Fraction
) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval of a squarefree polynomial below the
    requested width by sign bisection."""
    lo, hi = iv
    if lo == hi:
        return iv
    slo = sf.sign_at(lo)
    if slo == 0:
        raise ValueError("isolator endpoint is a root")
    while hi - lo > width:
        mid = (lo + hi) / 2
        sm = sf.sign_at(mid)
        if sm == 0:
            return (mid, mid)
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return (lo, hi)


def poly_content_valuation(p: IntPoly, prime: int) -> int:
    """Largest e with prime^e dividing every coefficient."""
    if not p:
        raise ValueError("zero polynomial")
    e = None
    for a in p.coeffs:
        if a == 0:
            continue
        v = 0
        while a % prime == 0:
            a //= prime
            v += 1
        e = v if e is None else min(e, v)
        if e == 0:
            break
    return e


def poly_valuation(p: IntPoly, prime: int) -> int:
    """Minimum p-adic valuation over the coefficients of a nonzero polynomial."""
    if not gmpy2.is_prime(prime):
        raise ValueError(f"{prime} is not prime")
    return poly_content_valuation(p, prime)


def newton_interpolate(lo: int, values: Sequence[int]) -> IntPoly:
    """Polynomial of degree < len(values) taking the given values at the
    consecutive integers lo, lo+1, ...

    Uses forward differences.  The result is required to have integer
    coefficients; a non-integer coefficient raises, which callers use to
    detect an undersized sample.
    """
    diffs = [mpz(v) for v in values]
    n = len(diffs)
    # Forward-difference table, kept in place: after step k, diffs[k] holds
    # the k-th forward difference at lo.
    for k in range(1, n):
        for i in range(n - 1, k - 1, -1):
            diffs[i] = diffs[i] - diffs[i - 1]
    # Accumulate sum_k diffs[k] * binom(T - lo, k) in the monomial basis.
    # basis holds k! * binom(T - lo, k); the factorial is divided back out
    # of each term, exactly.
    coeffs = [mpz(0)] * n
    basis = [mpz(1)]
    fact = mpz(1)
    for k in range(n):
        if k:
            fact *= k
        # k! divides the k-th difference of any integer polynomial, so a
        # remainder here means the sample is too small for the true degree.
        term, r = divmod(diffs[k], fact)
        if r:
            raise ValueError("interpolated polynomial is not integral")
        for i, b in enumerate(basis):
            coeffs[i] += term * b
        if k + 1 < n:
            # basis <- basis * (T - (lo + k))
            shift = lo + k
            nb = [mpz(0)] * (len(basis) + 1)
            for i, b in enumerate(basis):
                nb[i] -= b * shift
                nb[i + 1] += b
            basis = nb
    return IntPoly(int(c) for c in coeffs)
