"""Brute-force oracles used to check the structured algorithms.

Every function here works by enumeration and shares no logic with the
closed forms it checks beyond ring arithmetic.  Keep inputs tiny.
"""

import itertools

from .center_poly import CenterPoly
from .errors import TooLarge
from .skew_poly import SkewPoly, s_mul, s_right_divmod

ENUM_LIMIT = 1 << 20


def _rem_zero(a, f):
    return s_right_divmod(a, f)[1].is_zero()


def _check(size):
    if size > ENUM_LIMIT:
        raise TooLarge(f"{size} candidates exceed the oracle limit")


def all_monic(tower, m):
    """Every monic polynomial of degree m, lower coefficients enumerated c_0 first."""
    for cs in itertools.product(range(tower.order), repeat=m):
        yield SkewPoly(tower, cs + (1,))


def eigenring_elements(f):
    """All g with deg g < m and f g in R f."""
    tw = f.tower
    m = f.degree
    _check(tw.order**m)
    out = []
    for cs in itertools.product(range(tw.order), repeat=m):
        g = SkewPoly(tw, cs)
        if _rem_zero(s_mul(f, g), f):
            out.append(g)
    return out


def in_eigenring(f, g):
    return g.degree < f.degree and _rem_zero(s_mul(f, g), f)


def mclm_hhat(f):
    """Least-degree monic p in F[x] with p(t^n) in R f, by increasing degree."""
    tw = f.tower
    F = tw.F
    deg = 0
    while True:
        _check(F.order**deg)
        for cs in itertools.product(range(F.order), repeat=deg):
            p = CenterPoly(F, cs + (1,))
            if _rem_zero(SkewPoly.from_center(p, tw), f):
                return p
        deg += 1


def right_factors(f, k):
    """All monic right factors of degree k."""
    tw = f.tower
    _check(tw.order**k)
    return [h for h in all_monic(tw, k) if _rem_zero(f, h)]


def is_irreducible(f):
    """No monic right factor of degree 1..m-1."""
    tw = f.tower
    m = f.degree
    if m <= 1:
        return True
    _check(sum(tw.order**k for k in range(1, m)))
    return not any(_rem_zero(f, h) for k in range(1, m) for h in all_monic(tw, k))


def _petit(f, a, b):
    return s_right_divmod(s_mul(a, b), f)[1]


def nucleus_elements(f):
    """c in K with every associator involving c vanishing on the K-basis t^i.

    Associators are left K-linear in each slot up to a twist, so the basis
    t^0..t^(m-1) suffices.
    """
    tw = f.tower
    m = f.degree
    basis = [SkewPoly.t(tw, i) for i in range(m)]
    out = []
    for c in range(tw.order):
        cp = SkewPoly.constant(tw, c)
        ok = True
        for x, y in itertools.product(basis, repeat=2):
            for a, b, d in ((x, y, cp), (x, cp, y), (cp, x, y)):
                if _petit(f, _petit(f, a, b), d) != _petit(f, a, _petit(f, b, d)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(c)
    return out


def is_commutative(f, elems):
    return all(_petit(f, a, b) == _petit(f, b, a) for a, b in itertools.combinations(elems, 2))


def has_zero_divisors(f, elems):
    nz = [a for a in elems if not a.is_zero()]
    return any(_petit(f, a, b).is_zero() for a in nz for b in nz)
