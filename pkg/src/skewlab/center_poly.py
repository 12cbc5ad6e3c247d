"""Commutative polynomials over F, identified with the centre F[t^n] of K[t; sigma].

Besides division and gcd this provides Rabin's irreducibility test, a
Cantor-Zassenhaus factoriser and minimal polynomials of F-matrices.
"""

import random
from dataclasses import dataclass

from . import linalg, upoly
from .errors import BothZero, ConstantInput, DivisionByZero

DEFAULT_SEED = 0


@dataclass(frozen=True)
class CenterPoly:
    """Polynomial in x over the field ``field``; coefficients lowest first."""

    field: object
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(upoly.trim(self.coeffs)))

    def __eq__(self, other):
        if not isinstance(other, CenterPoly):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def one(cls, field):
        return cls(field, (1,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self):
        return CenterPoly(self.field, upoly.monic(self.field, list(self.coeffs)))

    def __add__(self, other):
        return CenterPoly(self.field, upoly.add(self.field, list(self.coeffs), list(other.coeffs)))

    def __sub__(self, other):
        return CenterPoly(self.field, upoly.sub(self.field, list(self.coeffs), list(other.coeffs)))

    def __mul__(self, other):
        return CenterPoly(self.field, upoly.mul(self.field, list(self.coeffs), list(other.coeffs)))

    def __pow__(self, k):
        out = CenterPoly.one(self.field)
        for _ in range(k):
            out = out * self
        return out

    def __str__(self):
        from .text import format_center_poly

        return format_center_poly(self)

    def __repr__(self):
        return f"CenterPoly({self})"


@dataclass(frozen=True)
class FMatrix:
    field: object
    rows: tuple

    @property
    def dim(self):
        return len(self.rows)


def cp_divmod(a, b):
    if b.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    q, r = upoly.divmod_(a.field, list(a.coeffs), list(b.coeffs))
    return CenterPoly(a.field, q), CenterPoly(a.field, r)


def cp_gcd(a, b):
    """Monic gcd."""
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    return CenterPoly(a.field, upoly.gcd(a.field, list(a.coeffs), list(b.coeffs)))


def cp_is_irreducible(a):
    if a.degree < 1:
        raise ConstantInput("irreducibility is only defined for degree >= 1")
    return upoly.is_irreducible(a.field, list(a.coeffs))


# --- factorisation -------------------------------------------------------------


def _pth_root(k, f):
    p = k.char
    e = k.order // p  # a -> a^(q/p) inverts a -> a^p on GF(q)
    return [k.pow(f[i], e) if k.order > p else f[i] for i in range(0, len(f), p)]


def _squarefree(k, f):
    """Yun-style squarefree decomposition of a monic ``f``: [(g, mult)]."""
    out = []
    c = upoly.gcd(k, f, upoly.derivative(k, f))
    w = upoly.divmod_(k, f, c)[0]
    i = 1
    while upoly.deg(w) > 0:
        y = upoly.gcd(k, w, c)
        fac = upoly.divmod_(k, w, y)[0]
        if upoly.deg(fac) > 0:
            out.append((fac, i))
        w = y
        c = upoly.divmod_(k, c, y)[0]
        i += 1
    if upoly.deg(c) > 0:
        for g, j in _squarefree(k, _pth_root(k, c)):
            out.append((g, j * k.char))
    return out


def _distinct_degree(k, f):
    out = []
    x = [0, 1]
    h = x
    i = 1
    while upoly.deg(f) >= 2 * i:
        h = upoly.powmod(k, h, k.order, f)
        g = upoly.gcd(k, f, upoly.sub(k, h, x))
        if upoly.deg(g) > 0:
            out.append((g, i))
            f = upoly.divmod_(k, f, g)[0]
            h = upoly.rem(k, h, f)
        i += 1
    if upoly.deg(f) > 0:
        out.append((f, upoly.deg(f)))
    return out


def _equal_degree(k, f, d, rng):
    n = upoly.deg(f)
    if n == d:
        return [f]
    q = k.order
    while True:
        a = upoly.trim([rng.randrange(q) for _ in range(n)])
        if upoly.deg(a) < 1:
            continue
        if k.char == 2:
            # absolute trace a + a^2 + ... + a^(2^(ed-1)) splits in characteristic 2
            bits = (q.bit_length() - 1) * d
            b, term = a, a
            for _ in range(bits - 1):
                term = upoly.mulmod(k, term, term, f)
                b = upoly.add(k, b, term)
        else:
            b = upoly.sub(k, upoly.powmod(k, a, (q**d - 1) // 2, f), [1])
        g = upoly.gcd(k, f, b)
        if 0 < upoly.deg(g) < n:
            return _equal_degree(k, g, d, rng) + _equal_degree(k, upoly.divmod_(k, f, g)[0], d, rng)


def cp_factor(a, seed=DEFAULT_SEED):
    """Irreducible factorisation of a monic ``a`` as a sorted list of (factor, multiplicity)."""
    if a.degree < 1:
        raise ConstantInput("cannot factor a constant")
    k = a.field
    rng = random.Random(seed)
    counts = {}
    for sq, mult in _squarefree(k, upoly.monic(k, list(a.coeffs))):
        for block, d in _distinct_degree(k, sq):
            for g in _equal_degree(k, block, d, rng):
                key = tuple(g)
                counts[key] = counts.get(key, 0) + mult
    return [(CenterPoly(k, g), m) for g, m in sorted(counts.items(), key=lambda kv: _lex_key(kv[0]))]


def _lex_key(coeffs):
    return (len(coeffs), tuple(reversed(coeffs)))


def cp_divisors(a, seed=DEFAULT_SEED):
    """All monic divisors of a monic ``a``, including 1 and ``a``."""
    divs = [CenterPoly.one(a.field)]
    for p, m in cp_factor(a, seed):
        divs = [d * p**j for d in divs for j in range(m + 1)]
    return sorted(divs, key=lambda d: _lex_key(d.coeffs))


# --- matrices ------------------------------------------------------------------


def min_poly_of_matrix(M):
    """Minimal polynomial of a square matrix over F.

    Computed as the lcm of the Krylov annihilators of the standard basis
    vectors, skipping vectors already inside the invariant subspace seen so far.
    """
    k = M.field
    rows = [list(r) for r in M.rows]
    dim = len(rows)
    result = [1]
    seen = []  # rref basis of the M-invariant subspace covered so far
    for i in range(dim):
        e = [0] * dim
        e[i] = 1
        if seen and linalg.solve_in_span(k, seen, e) is not None:
            continue
        krylov = [e]
        while True:
            nxt = linalg.matvec(k, rows, krylov[-1])
            c = linalg.solve_in_span(k, krylov, nxt)
            if c is not None:
                break
            krylov.append(nxt)
        local = [k.neg(x) for x in c] + [1]
        result = upoly.lcm(k, result, local)
        seen = linalg.span_basis(k, seen + krylov, dim)
    return CenterPoly(k, result)


def eval_on_matrix(p, M):
    """p(M) by Horner's rule."""
    k = M.field
    dim = M.dim
    rows = [list(r) for r in M.rows]
    acc = [[0] * dim for _ in range(dim)]
    for c in reversed(p.coeffs):
        acc = linalg.matmul(k, acc, rows)
        for i in range(dim):
            acc[i][i] = k.add(acc[i][i], c)
    return acc
