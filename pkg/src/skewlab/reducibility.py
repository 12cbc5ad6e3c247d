"""Reducibility of f in K[t; sigma]: the four-step TRUE/STOP test, the mclm
irreducibility certificate, factor extraction from eigenring zero divisors and
a complete factoriser.

Route order in ``proper_factor`` is fixed: strip t, split hhat, eigenring zero
divisor, exhaustive right-factor scan.  Ties are broken by the lexicographic
order of the irreducible factors of hhat, so every witness is reproducible.
"""

import itertools
import math
from dataclasses import dataclass, field

from .center_poly import CenterPoly, cp_factor, cp_is_irreducible
from .errors import (
    DegenerateInput,
    HypothesisViolated,
    Inconclusive,
    TooLarge,
    TValuationNonzero,
)
from .field_tower import fixed_field, is_prime
from .petit import PetitAlgebra, eigenring, nucleus, scan_zero_divisor
from .skew_poly import SkewPoly, is_right_invariant, mclm, s_gcrd, s_right_divmod

REDUCIBLE_TRUE = "REDUCIBLE_TRUE"
STOP_UNDECIDED = "STOP_UNDECIDED"
IRREDUCIBLE_CERTIFIED = "IRREDUCIBLE_CERTIFIED"
RIGHT_INVARIANT = "RIGHT_INVARIANT"
TRIVIAL_T_FACTOR = "TRIVIAL_T_FACTOR"

# candidate budget for exhaustive right-factor scans
SCAN_BUDGET = 1 << 24


@dataclass(frozen=True)
class Verdict:
    kind: str
    reason: str
    witness: SkewPoly = None

    def to_dict(self):
        return {
            "kind": self.kind,
            "reason": self.reason,
            "witness": None if self.witness is None else str(self.witness),
        }

    def __str__(self):
        short = {REDUCIBLE_TRUE: "TRUE", STOP_UNDECIDED: "STOP", IRREDUCIBLE_CERTIFIED: "IRREDUCIBLE"}
        parts = [short.get(self.kind, self.kind)]
        if self.reason.startswith("step"):
            parts.append(f"step={self.reason[4]}")
        else:
            parts.append(f"reason={self.reason}")
        if self.witness is not None:
            parts.append(f"witness={self.witness}")
        return " ".join(parts)


@dataclass(frozen=True)
class Certificate:
    """Why a polynomial is irreducible: degree-1, hhat-irreducible,
    eigenring-division or exhaustive-scan."""

    kind: str
    detail: str = ""


@dataclass
class Factorization:
    factors: list
    unit: int = 1
    t_valuation: int = 0
    certificates: list = field(default_factory=list)

    @property
    def l(self):
        return len(self.factors) + self.t_valuation

    def product(self, tower):
        acc = SkewPoly.constant(tower, self.unit)
        for g in self.factors:
            acc = acc * g
        return acc * SkewPoly.t(tower, self.t_valuation)

    def to_dict(self):
        return {
            "factors": [str(g) for g in self.factors],
            "t_valuation": self.t_valuation,
            "l": self.l,
            "certificates": [c.kind for c in self.certificates],
        }


def _require_monic(f, min_degree):
    if f.is_zero() or f.degree < min_degree:
        raise DegenerateInput(f"need a polynomial of degree >= {min_degree}")
    return f.monic()


def _in_F_t(f):
    return all(f.tower.in_F(c) for c in f.coeffs)


def _to_center_var(f):
    """f in F[t] read as a polynomial in x (no t^n substitution)."""
    return CenterPoly(f.tower.F, f.coeffs)


def _from_center_var(p, tower):
    return SkewPoly(tower, p.coeffs)


def check_hypothesis(m, n):
    """n prime or gcd(m, n) = 1."""
    if not (is_prime(n) or math.gcd(m, n) == 1):
        raise HypothesisViolated(f"n = {n} is composite and gcd(m, n) = {math.gcd(m, n)} > 1")


def decide(f, literal_step3=False, certify=False, witness=True):
    """Four-step test with output TRUE (reducible) or STOP (undecided).

    The branch "Fix(sigma^c) = L gives TRUE" of step 3 is unsound (t^2+t+1
    over F_4 is irreducible yet triggers it), so it only runs with
    ``literal_step3``.  With ``certify`` a STOP is upgraded to
    IRREDUCIBLE_CERTIFIED when the mclm certificate applies.
    """
    f = _require_monic(f, 2)
    tw = f.tower
    m, n = f.degree, tw.n
    if f.coeffs[0] == 0:
        return Verdict(TRIVIAL_T_FACTOR, "t-valuation", SkewPoly.t(tw))
    if is_right_invariant(f):
        return Verdict(RIGHT_INVARIANT, "right-invariant")
    check_hypothesis(m, n)

    def true(reason, w=None):
        if w is None and witness:
            split = proper_factor(f)
            w = split[1] if split else None
        return Verdict(REDUCIBLE_TRUE, reason, w)

    # (1)
    if _in_F_t(f):
        facs = cp_factor(_to_center_var(f))
        if len(facs) > 1 or facs[0][1] > 1:
            return true("step1-commutative-factor", _from_center_var(facs[0][0], tw))
    # (2)
    A = PetitAlgebra(f)
    nuc = nucleus(A)
    L = nuc.degree_over_F
    if L > m:
        return true("step2-L-exceeds-m")
    # (3) least c with every a_i in the proper subfield Fix(sigma^c)
    c = next((c for c in range(1, n) if all(tw.frob(a, c) == a for a in f.coeffs)), None)
    if c is not None:
        if literal_step3 and fixed_field(tw, c).same_as(nuc.subfield):
            return true("step3-fix-equals-L")
        q, r = divmod(m, c)
        if r == 0 and L > c:
            return true("step3-m-eq-qc")
        if 0 < r < c and L >= c:
            return true("step3-m-eq-qc-plus-r")
    # (4)
    if certify and certify_irreducible(f):
        return Verdict(IRREDUCIBLE_CERTIFIED, "hhat-irreducible")
    return Verdict(STOP_UNDECIDED, "step4-undecided")


def certify_irreducible(f):
    """Certificate when deg h = mn and hhat is irreducible, else None.

    None is not a reducibility proof.
    """
    f = _require_monic(f, 1)
    if f.coeffs[0] == 0:
        if f.degree == 1:
            return Certificate("degree-1")
        raise TValuationNonzero("certificate needs a nonzero constant term")
    if f.degree == 1:
        return Certificate("degree-1")
    res = mclm(f)
    if res.h.degree == f.degree * f.tower.n and cp_is_irreducible(res.hhat):
        return Certificate("hhat-irreducible", f"hhat = {res.hhat}")
    return None


def find_zero_divisor(report):
    """(q1, q2) with q1 o q2 = 0 and both nonzero, or None for a division algebra."""
    A = report.algebra
    if report.hhat_irreducible and report.deg_h == A.dim:
        return None
    return scan_zero_divisor(report)


def _split_by(f, h):
    """(g, h) with f = g h when h is a proper monic right factor, else None."""
    if h.degree < 1 or h.degree >= f.degree:
        return None
    g, r = s_right_divmod(f, h)
    assert r.is_zero()
    return g, h


def right_factor_scan(f, budget=None):
    """Least monic right factor of degree 1..m-1 in enumeration order, or None."""
    budget = SCAN_BUDGET if budget is None else budget
    tw = f.tower
    m = f.degree
    total = sum(tw.order**k for k in range(1, m))
    if total > budget:
        raise Inconclusive(f"exhaustive scan of {total} candidates exceeds the budget")
    for k in range(1, m):
        for cs in itertools.product(range(tw.order), repeat=k):
            h = SkewPoly(tw, cs + (1,))
            if s_right_divmod(f, h)[1].is_zero():
                return h
    return None


def _eigenring_split(f):
    A = PetitAlgebra(f)
    report = eigenring(A)
    try:
        zd = find_zero_divisor(report)
    except TooLarge:
        return None, False
    if zd is None:
        # no zero divisors proves irreducibility only when R/Rf is semisimple
        return None, report.hhat_irreducible
    for q in zd:
        split = _split_by(f, s_gcrd(q, f))
        if split:
            return split, False
    return None, False


def proper_factor(f, route=None):
    """(g, h) with f = g h and both of degree >= 1, or None when f is irreducible.

    ``route`` may be a list; the name of the route that settled the question
    is appended to it.
    """
    f = _require_monic(f, 1)
    tw = f.tower
    note = route.append if route is not None else (lambda _: None)
    if f.degree == 1:
        note("degree-1")
        return None
    if f.coeffs[0] == 0:
        note("t-strip")
        v = f.valuation()
        if v == f.degree:
            return SkewPoly.t(tw, v - 1), SkewPoly.t(tw)
        return f.shift_down(v), SkewPoly.t(tw, v)
    res = mclm(f)
    if res.h.degree == f.degree * tw.n and cp_is_irreducible(res.hhat):
        note("hhat-irreducible")
        return None
    facs = cp_factor(res.hhat)
    if len(facs) > 1 or facs[0][1] > 1:
        for p, _ in facs:
            split = _split_by(f, s_gcrd(SkewPoly.from_center(p, tw), f))
            if split:
                note("hhat-split")
                return split
    split, division = _eigenring_split(f)
    if split:
        note("zero-divisor")
        return split
    if division:
        note("eigenring-division")
        return None
    h = right_factor_scan(f)
    note("exhaustive-scan")
    return _split_by(f, h) if h is not None else None


_CERT_ROUTES = {"degree-1", "hhat-irreducible", "eigenring-division", "exhaustive-scan"}


def factorize(f):
    """Monic irreducible factors f = f_1 ... f_k t^v, left to right."""
    f = _require_monic(f, 1)
    tw = f.tower
    v = f.valuation()
    out = Factorization([], 1, v, [])
    rest = f.shift_down(v)
    if rest.degree >= 1:
        _factor_into(rest, out)
    assert out.product(tw) == f, "factorization does not recombine"
    return out


def _factor_into(f, out):
    route = []
    split = proper_factor(f, route)
    if split is None:
        kind = route[-1]
        assert kind in _CERT_ROUTES
        out.factors.append(f)
        out.certificates.append(Certificate(kind))
        return
    g, h = split
    _factor_into(g, out)
    _factor_into(h, out)
