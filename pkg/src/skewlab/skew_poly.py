"""The twisted polynomial ring R = K[t; sigma] with t a = sigma(a) t."""

import math
from dataclasses import dataclass

from . import linalg
from .center_poly import CenterPoly, FMatrix, cp_divisors, min_poly_of_matrix
from .errors import BothZero, DegenerateInput, DivisionByZero, ZeroInput


class SkewPoly:
    """Element of K[t; sigma]; ``coeffs[i]`` is the K-coefficient of t^i."""

    __slots__ = ("tower", "coeffs")

    def __init__(self, tower, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.tower = tower
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, tower, a):
        return cls(tower, (a,))

    @classmethod
    def t(cls, tower, k=1):
        return cls(tower, (0,) * k + (1,))

    @classmethod
    def from_center(cls, p, tower):
        """p(t^n) for p in F[x]."""
        n = tower.n
        cs = [0] * (n * p.degree + 1) if p.coeffs else []
        for i, c in enumerate(p.coeffs):
            cs[n * i] = c
        return cls(tower, cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def monic(self):
        """lc^{-1} * self (left scaling keeps every right divisor)."""
        if not self.coeffs:
            return self
        K = self.tower.K
        inv = K.inv(self.lc)
        return SkewPoly(self.tower, [K.mul(inv, c) for c in self.coeffs])

    def valuation(self):
        """Largest v with t^v a right factor (the index of the lowest nonzero coefficient)."""
        return next(i for i, c in enumerate(self.coeffs) if c)

    def shift_down(self, v):
        return SkewPoly(self.tower, self.coeffs[v:])

    def __eq__(self, other):
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.coeffs == other.coeffs and self.tower == other.tower

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        self.tower.check(other.tower)
        K = self.tower.K
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = K.add(out[i], c)
        return SkewPoly(self.tower, out)

    def __neg__(self):
        K = self.tower.K
        return SkewPoly(self.tower, [K.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return s_mul(self, other)

    def __str__(self):
        from .text import format_skew

        return format_skew(self)

    def __repr__(self):
        return f"SkewPoly({self})"


def _twisted(tower, coeffs, i):
    return [tower.frob(c, i) for c in coeffs]


def s_mul(a, b):
    """Twisted product: the t^k coefficient is sum_{i+j=k} a_i sigma^i(b_j)."""
    tower = a.tower
    tower.check(b.tower)
    if not a.coeffs or not b.coeffs:
        return SkewPoly(tower)
    K, n = tower.K, tower.n
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    twists = {}
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        tb = twists.get(i % n)
        if tb is None:
            tb = twists[i % n] = _twisted(tower, b.coeffs, i)
        for j, bj in enumerate(tb):
            if bj:
                out[i + j] = K.add(out[i + j], K.mul(ai, bj))
    return SkewPoly(tower, out)


def s_right_divmod(a, b):
    """(q, r) with a = q*b + r and deg r < deg b."""
    tower = a.tower
    tower.check(b.tower)
    if b.is_zero():
        raise DivisionByZero("right division by zero")
    K, n = tower.K, tower.n
    db = b.degree
    r = list(a.coeffs)
    if len(r) - 1 < db:
        return SkewPoly(tower), SkewPoly(tower, r)
    q = [0] * (len(r) - db)
    twists = {}
    for k in range(len(r) - 1 - db, -1, -1):
        lead = r[k + db]
        if lead == 0:
            continue
        tb = twists.get(k % n)
        if tb is None:
            tb = twists[k % n] = _twisted(tower, b.coeffs, k)
        c = K.div(lead, tb[-1])
        q[k] = c
        for j, bj in enumerate(tb):
            if bj:
                r[k + j] = K.sub(r[k + j], K.mul(c, bj))
    return SkewPoly(tower, q), SkewPoly(tower, r[:db])


def s_right_rem(a, b):
    return s_right_divmod(a, b)[1]


def s_left_divmod(a, b):
    """(q, r) with a = b*q + r and deg r < deg b."""
    tower = a.tower
    tower.check(b.tower)
    if b.is_zero():
        raise DivisionByZero("left division by zero")
    K = tower.K
    db = b.degree
    r = list(a.coeffs)
    if len(r) - 1 < db:
        return SkewPoly(tower), SkewPoly(tower, r)
    q = [0] * (len(r) - db)
    inv_lc = K.inv(b.lc)
    for k in range(len(r) - 1 - db, -1, -1):
        lead = r[k + db]
        if lead == 0:
            continue
        # b * (c t^k) has leading coefficient lc(b) sigma^db(c)
        c = tower.frob(K.mul(inv_lc, lead), -db)
        q[k] = c
        for j, bj in enumerate(b.coeffs):
            if bj:
                r[j + k] = K.sub(r[j + k], K.mul(bj, tower.frob(c, j)))
    return SkewPoly(tower, q), SkewPoly(tower, r[:db])


def s_gcrd(a, b):
    """Monic greatest common right divisor (Euclid on right division)."""
    if a.is_zero() and b.is_zero():
        raise BothZero("gcrd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, s_right_rem(a, b)
    return a.monic()


def s_xgcrd(a, b):
    """(d, u, v) with u*a + v*b = d = gcrd(a, b), d monic."""
    tower = a.tower
    r0, r1 = a, b
    u0, u1 = SkewPoly.constant(tower, 1), SkewPoly(tower)
    v0, v1 = SkewPoly(tower), SkewPoly.constant(tower, 1)
    while not r1.is_zero():
        q, r = s_right_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    c = SkewPoly.constant(tower, tower.K.inv(r0.lc))
    return c * r0, c * u0, c * v0


def s_lclm(a, b):
    """Monic least common left multiple, read off the extended Euclidean algorithm."""
    if a.is_zero() or b.is_zero():
        raise ZeroInput("lclm needs nonzero inputs")
    tower = a.tower
    r0, r1 = a, b
    u0, u1 = SkewPoly.constant(tower, 1), SkewPoly(tower)
    while not r1.is_zero():
        q, r = s_right_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
    # u1*a + v1*b = 0 with u1 of least degree
    return (u1 * a).monic()


def is_right_invariant(f):
    """R f is two-sided: every nonzero lower coefficient lies in F at a degree congruent to m mod n."""
    f = f.monic()
    tower, m = f.tower, f.degree
    return all(c == 0 or (tower.in_F(c) and (m - i) % tower.n == 0) for i, c in enumerate(f.coeffs[:m]))


def right_invariant_by_factoring(f):
    """Same test via the normal form f = a * g(t) * t^v with g central."""
    f = f.monic()
    if f.degree < 1:
        return True
    g = f.shift_down(f.valuation())
    return all(c == 0 or (i % f.tower.n == 0 and f.tower.in_F(c)) for i, c in enumerate(g.coeffs))


def is_central(h):
    tower = h.tower
    return all(c == 0 or (i % tower.n == 0 and tower.in_F(c)) for i, c in enumerate(h.coeffs))


@dataclass(frozen=True)
class MclmResult:
    h: SkewPoly
    hhat: CenterPoly
    cofactor: SkewPoly
    t_valuation: int


def companion_matrix(f):
    """Matrix C over K with t*u = C sigma(u) on coordinate vectors of R/Rf."""
    m = f.degree
    K = f.tower.K
    C = [[0] * m for _ in range(m)]
    for i in range(m - 1):
        C[i + 1][i] = 1
    for j in range(m):
        C[j][m - 1] = K.neg(f.coeffs[j])
    return C


def t_power_matrix(f):
    """Matrix A over K of u -> t^n u on R/Rf; A = C sigma(C) ... sigma^(n-1)(C)."""
    tower = f.tower
    K, n = tower.K, tower.n
    C = companion_matrix(f)
    A = C
    for j in range(1, n):
        Cj = [[tower.frob(x, j) for x in row] for row in C]
        A = linalg.matmul(K, A, Cj)
    return A


def flatten(tower, A):
    """Regular representation: a K-matrix as an F-matrix in the power basis."""
    n = tower.n
    size = len(A) * n
    out = [[0] * size for _ in range(size)]
    for i, row in enumerate(A):
        for j, a in enumerate(row):
            if a == 0:
                continue
            block = tower.mult_matrix(a)
            for r in range(n):
                out[i * n + r][j * n : j * n + n] = block[r]
    return out


def mclm(f, check_minimal=True):
    """Minimal central left multiple h = hhat(t^n) of f, with h = cofactor * f.

    A zero constant term is handled by writing f = f~ t^v: the answer is
    x^ceil(v/n) * hhat~(x) because the two annihilators are coprime.
    """
    if f.is_zero() or f.degree < 1:
        raise DegenerateInput("mclm needs a nonconstant polynomial")
    f = f.monic()
    tower = f.tower
    F, n = tower.F, tower.n
    v = f.valuation()
    ft = f.shift_down(v)
    if ft.degree == 0:
        hhat = CenterPoly.one(F)
    else:
        A = flatten(tower, t_power_matrix(ft))
        hhat = min_poly_of_matrix(FMatrix(F, tuple(map(tuple, A))))
    if v:
        hhat = hhat * CenterPoly.x(F) ** math.ceil(v / n)
    h = SkewPoly.from_center(hhat, tower)
    cofactor, r = s_right_divmod(h, f)
    if not r.is_zero():
        raise AssertionError(f"mclm {h} is not a left multiple of {f}")
    if check_minimal and hhat.degree <= 3:
        for p in cp_divisors(hhat):
            if p != hhat and s_right_rem(SkewPoly.from_center(p, tower), f).is_zero():
                raise AssertionError(f"{p} is a smaller central multiple of {f}")
    return MclmResult(h, hhat, cofactor, v)
