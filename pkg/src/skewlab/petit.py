"""Petit algebras S_f = K[t; sigma] / K[t; sigma] f and their right nucleus.

S_f is the set of polynomials of degree < m with product g o h = g h mod_r f.
Its right nucleus is the eigenring E(f) = {g : deg g < m, f g in R f}, which
is computed here as the kernel of an F-linear map on F^(mn).
"""

import itertools
import math
from dataclasses import dataclass, field, replace

from . import linalg
from .center_poly import CenterPoly, cp_divmod, cp_factor, cp_is_irreducible
from .errors import DegenerateInput, DegreeTooHigh, RightInvariantInput, TooLarge, TValuationNonzero
from .field_tower import Subfield, fixed_field
from .skew_poly import SkewPoly, is_right_invariant, mclm, s_mul, s_right_rem

# exhaustive scans over the eigenring stop at this many elements
SCAN_LIMIT = 1 << 16


class PetitAlgebra:
    def __init__(self, f):
        if not f.coeffs or f.degree < 2:
            raise DegenerateInput("S_f needs deg f >= 2")
        self.f = f.monic()
        self.tower = f.tower
        self.m = f.degree
        self.lambda_set = tuple(i for i, c in enumerate(self.f.coeffs[: self.m]) if c)

    @property
    def dim(self):
        return self.m * self.tower.n

    def __repr__(self):
        return f"PetitAlgebra({self.f})"

    def right_invariant(self):
        return is_right_invariant(self.f)

    # --- coordinates over F ---------------------------------------------------
    def to_vector(self, g):
        if g.degree >= self.m:
            raise DegreeTooHigh(f"{g} has degree >= {self.m}")
        out = []
        for i in range(self.m):
            out.extend(self.tower.coords(g.coeff(i)))
        return out

    def from_vector(self, v):
        n = self.tower.n
        return SkewPoly(self.tower, [self.tower.from_coords(v[i * n : i * n + n]) for i in range(self.m)])

    def monomial_basis(self):
        """F-basis g^j t^i (i < m, j < n) in coordinate order."""
        q = self.tower.q
        return [SkewPoly(self.tower, (0,) * i + (q**j,)) for i in range(self.m) for j in range(self.tower.n)]

    def elements(self):
        tw = self.tower
        for cs in itertools.product(range(tw.order), repeat=self.m):
            yield SkewPoly(tw, cs)


def petit_mul(A, g, h):
    """g o h = g h mod_r f."""
    if g.degree >= A.m or h.degree >= A.m:
        raise DegreeTooHigh("factors must have degree < m")
    return s_right_rem(s_mul(g, h), A.f)


def associator(A, x, y, z):
    """[x, y, z] = (x y) z - x (y z) in S_f."""
    return petit_mul(A, petit_mul(A, x, y), z) - petit_mul(A, x, petit_mul(A, y, z))


# --- nucleus -------------------------------------------------------------------


@dataclass(frozen=True)
class NucleusReport:
    d: int
    subfield: Subfield
    degree_over_F: int


def nucleus(A):
    """Nuc(S_f) = Fix(sigma^d) with d = gcd(m - lambda_1, ..., m - lambda_r, n)."""
    if A.right_invariant():
        raise RightInvariantInput(f"{A.f} is right invariant; S_f is associative")
    n = A.tower.n
    d = math.gcd(n, *(A.m - lam for lam in A.lambda_set))
    sub = fixed_field(A.tower, d)
    return NucleusReport(d, sub, sub.degree_over_F)


def nucleus_bruteforce(A):
    """K ∩ Nuc_r(S_f) by testing f c in R f for every c in K."""
    tw = A.tower
    if tw.order > SCAN_LIMIT:
        raise TooLarge(f"|K| = {tw.order} exceeds the brute-force bound")
    members = [c for c in range(tw.order) if s_right_rem(s_mul(A.f, SkewPoly.constant(tw, c)), A.f).is_zero()]
    basis = linalg.span_basis(tw.F, [tw.coords(c) for c in members], tw.n)
    deg = len(basis)
    # recover d from the degree; any d with gcd(n, d) = deg names the same field
    return Subfield(tw, deg, deg, tuple(tw.from_coords(v) for v in basis))


# --- eigenring -----------------------------------------------------------------


@dataclass(frozen=True)
class EigenringReport:
    algebra: PetitAlgebra = field(repr=False)
    basis: tuple
    dim_over_F: int
    structure_constants: tuple = field(repr=False)
    hhat: CenterPoly = None
    hhat_irreducible: bool = None
    deg_h: int = None
    s: int = None
    k: int = None
    l: int = None
    is_division: bool = None
    checks: tuple = ()

    def to_dict(self):
        return {
            "f": str(self.algebra.f),
            "dim": self.dim_over_F,
            "basis": [str(b) for b in self.basis],
            "hhat": None if self.hhat is None else str(self.hhat),
            "hhat_irreducible": self.hhat_irreducible,
            "deg_h": self.deg_h,
            "s": self.s,
            "k": self.k,
            "l": self.l,
            "is_division": self.is_division,
            "checks": {name: ok for name, ok in self.checks},
        }


def nucr_matrix(A):
    """F-matrix of g -> (f g mod_r f) on the monomial basis of S_f."""
    cols = [A.to_vector(s_right_rem(s_mul(A.f, b), A.f)) for b in A.monomial_basis()]
    return linalg.transpose(cols)


def _structure_constants(A, basis):
    F = A.tower.F
    vecs = [A.to_vector(b) for b in basis]
    table = []
    for bi in basis:
        row = []
        for bj in basis:
            c = linalg.solve_in_span(F, vecs, A.to_vector(petit_mul(A, bi, bj)))
            if c is None:
                raise AssertionError("eigenring basis is not closed under multiplication")
            row.append(tuple(c))
        table.append(tuple(row))
    return tuple(table)


def eigenring(A):
    """F-basis and structure constants of Nuc_r(S_f) = E(f), plus the mclm data."""
    tw = A.tower
    F = tw.F
    kernel = linalg.nullspace(F, nucr_matrix(A), A.dim)
    basis = tuple(A.from_vector(v) for v in linalg.span_basis(F, kernel, A.dim))
    sc = _structure_constants(A, basis)
    res = mclm(A.f)
    hhat = res.hhat
    irred = hhat.degree >= 1 and cp_is_irreducible(hhat)
    s = A.m // hhat.degree if hhat.degree and A.m % hhat.degree == 0 else None
    return EigenringReport(
        algebra=A,
        basis=basis,
        dim_over_F=len(basis),
        structure_constants=sc,
        hhat=hhat,
        hhat_irreducible=irred,
        deg_h=res.h.degree,
        s=s,
    )


def in_eigenring(report, g):
    A = report.algebra
    vecs = [A.to_vector(b) for b in report.basis]
    return linalg.solve_in_span(A.tower.F, vecs, A.to_vector(g)) is not None


def eigenring_elements(report):
    """All F-linear combinations of the basis (|F|^dim of them)."""
    A = report.algebra
    F = A.tower.F
    if F.order ** report.dim_over_F > SCAN_LIMIT:
        raise TooLarge("eigenring too large to enumerate")
    K = A.tower.K
    for cs in itertools.product(range(F.order), repeat=report.dim_over_F):
        acc = [0] * A.m
        for c, b in zip(cs, report.basis):
            if c:
                for i, x in enumerate(b.coeffs):
                    acc[i] = K.add(acc[i], K.mul(c, x))
        yield SkewPoly(A.tower, acc)


def min_poly_of_element(A, b):
    """Minimal polynomial over F of b in the associative algebra Nuc_r(S_f)."""
    F = A.tower.F
    powers = [SkewPoly.constant(A.tower, 1)]
    vecs = [A.to_vector(powers[0])]
    while True:
        nxt = petit_mul(A, powers[-1], b)
        v = A.to_vector(nxt)
        c = linalg.solve_in_span(F, vecs, v)
        if c is not None:
            return CenterPoly(F, [F.neg(x) for x in c] + [1])
        powers.append(nxt)
        vecs.append(v)


def eval_in_algebra(A, p, b):
    """p(b) computed with the S_f product (b must lie in the right nucleus)."""
    acc = SkewPoly(A.tower)
    for c in reversed(p.coeffs):
        acc = petit_mul(A, acc, b) + SkewPoly.constant(A.tower, c)
    return acc


def zero_divisor_from_element(A, b):
    """(p1(b), p2(b)) with product 0 when b's minimal polynomial p = p1 p2 splits, else None."""
    p = min_poly_of_element(A, b)
    if p.degree <= 1:
        return None
    factors = cp_factor(p)
    if len(factors) == 1 and factors[0][1] == 1:
        return None
    p1 = factors[0][0]
    p2, r = cp_divmod(p, p1)
    assert r.is_zero()
    return eval_in_algebra(A, p1, b), eval_in_algebra(A, p2, b)


def scan_zero_divisor(report):
    """First zero-divisor pair in the documented order: basis elements, then all elements."""
    A = report.algebra
    for b in report.basis:
        zd = zero_divisor_from_element(A, b)
        if zd:
            return zd
    for b in eigenring_elements(report):
        if b.is_zero():
            continue
        zd = zero_divisor_from_element(A, b)
        if zd:
            return zd
    return None


# --- powers of t and subalgebra bounds -------------------------------------------


def t_power_sufficient(A, k):
    """All coefficients of f lie in Fix(sigma^k)."""
    tw = A.tower
    return all(tw.frob(c, k) == c for c in A.f.coeffs)


def t_power_in_nucr(A, k, report=None):
    """Exact membership of t^k in Nuc_r(S_f), tested against the eigenring span."""
    if not 1 <= k < A.m:
        raise DegreeTooHigh("k must lie in 1..m-1")
    report = report or eigenring(A)
    member = in_eigenring(report, SkewPoly.t(A.tower, k))
    if k == 1 and member != t_power_sufficient(A, 1):
        raise AssertionError("t in Nuc_r must be equivalent to all a_i in F")
    return member


def least_fixing_exponent(A):
    """Least c in 1..m-1 with every coefficient in Fix(sigma^c), or None."""
    return next((c for c in range(1, A.m) if t_power_sufficient(A, c)), None)


def in_base_field(f):
    return all(f.tower.in_F(c) for c in f.coeffs)


def subalgebra_lower_bound(A, report=None):
    """(c, bound): a lower bound on dim_F Nuc_r(S_f) from L = Nuc(S_f) and powers of t."""
    L = nucleus(A).degree_over_F
    c = least_fixing_exponent(A)
    if in_base_field(A.f):
        bound = A.m * L
    elif c is None:
        bound = L
    else:
        q, r = divmod(A.m, c)
        bound = q * L if r == 0 else (q + 1) * L
    report = report or eigenring(A)
    if bound > report.dim_over_F:
        raise AssertionError(f"bound {bound} exceeds dim Nuc_r = {report.dim_over_F}")
    return c, bound


def lower_bound_span(A):
    """Span of {b t^j : b in a basis of L, 0 <= j < m}, for f in F[t]."""
    L = nucleus(A).subfield
    return [SkewPoly(A.tower, (0,) * j + (b,)) for b in L.basis for j in range(A.m)]


# --- diagnostics ------------------------------------------------------------------


def is_division_algebra(report):
    """Certificate first, otherwise an exhaustive zero-divisor scan."""
    if report.hhat_irreducible and report.deg_h == report.algebra.dim:
        return True
    return scan_zero_divisor(report) is None


def diagnostics(A, l=None, report=None):
    """Eigenring report enriched with deg hhat, s, k and the dimension-law checks.

    ``l`` is the number of irreducible factors of f; it is only known after a
    factorisation, and k = n / s' with s' = s / l is reported only then.
    """
    if A.f.coeffs[0] == 0:
        raise TValuationNonzero("diagnostics assume (f, t)_r = 1")
    report = report or eigenring(A)
    m, n = A.m, A.tower.n
    g = math.gcd(m, n)
    s = report.s
    checks = []
    k = None
    if report.hhat_irreducible and s is not None:
        checks.append(("dim_equals_m_s", report.dim_over_F == m * s))
        checks.append(("s_divides_gcd_m_n", g % s == 0))
        if l is not None:
            checks.append(("l_divides_gcd_m_n", g % l == 0))
            if s % l == 0 and n % (s // l) == 0:
                k = n // (s // l)
                checks.append(("deg_h_equals_mn_over_s", report.deg_h * s == m * n))
    elif report.hhat_irreducible:
        checks.append(("deg_hhat_divides_m", False))
    is_div = is_division_algebra(report)
    return replace(report, k=k, l=l, is_division=is_div, checks=tuple(checks))
