"""Acceptance checks shared by the test suite and ``skewlab selftest``.

Each check returns a CheckResult; ``scale`` shrinks the random sample sizes
for the fast self-test.
"""

import itertools
import random
import time
from dataclasses import dataclass

from . import oracles
from .center_poly import CenterPoly, cp_divisors, cp_is_irreducible
from .petit import (
    PetitAlgebra,
    eigenring,
    in_eigenring,
    lower_bound_span,
    nucleus,
    nucleus_bruteforce,
    t_power_in_nucr,
    t_power_sufficient,
)
from .reducibility import (
    IRREDUCIBLE_CERTIFIED,
    REDUCIBLE_TRUE,
    TRIVIAL_T_FACTOR,
    certify_irreducible,
    decide,
    factorize,
)
from .skew_poly import SkewPoly, is_central, is_right_invariant, mclm, s_mul, s_right_divmod
from .text import parse_skew, parse_tower

F4 = "GF(2)^2/y^2+y+1"
F8 = "GF(2)^3/y^3+y+1"
F9 = "GF(3)^2/y^2+1"
F16 = "GF(2)^4/y^4+y^3+1"


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    limit: float = None

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        lim = f" (limit {self.limit:g}s)" if self.limit else ""
        return f"[{status}] criterion {self.number}: {self.name}: {self.detail} [{self.seconds:.2f}s{lim}]"


def _random_monic(rng, tower, m, nonzero_a0=False):
    while True:
        cs = [rng.randrange(tower.order) for _ in range(m)]
        if not nonzero_a0 or cs[0]:
            return SkewPoly(tower, cs + [1])


def _run(number, name, limit, body):
    t0 = time.perf_counter()
    ok, detail = body()
    dt = time.perf_counter() - t0
    if limit is not None and dt > limit:
        ok = False
        detail += f"; too slow ({dt:.1f}s)"
    return CheckResult(number, name, ok, detail, dt, limit)


def _irreducible_non_invariant(tower, m):
    return [f for f in oracles.all_monic(tower, m) if not is_right_invariant(f) and oracles.is_irreducible(f)]


def check_eigenring_count(seed=0, scale=1.0):
    def body():
        T = parse_tower(F4)
        cands = list(oracles.all_monic(T, 2))
        irr = _irreducible_non_invariant(T, 2)
        bad = []
        for f in irr:
            size = len(oracles.eigenring_elements(f))
            dim = eigenring(PetitAlgebra(f)).dim_over_F
            if size != 4 or T.F.order**dim != 4:
                bad.append(str(f))
        ok = bool(irr) and not bad
        return ok, f"{len(cands)} candidates, {len(irr)} irreducible non-invariant, size 4 for all" if ok else f"mismatch {bad}"

    return _run(1, "eigenring count", 5, body)


def check_dimension_law(seed=0, scale=1.0):
    def body():
        rng = random.Random(seed)
        T4, T8 = parse_tower(F4), parse_tower(F8)
        family = _irreducible_non_invariant(T4, 2)
        want = max(1, int(100 * scale))
        sample = []
        while len(sample) < want:
            f = _random_monic(rng, T8, rng.choice((2, 3)))
            if not is_right_invariant(f) and oracles.is_irreducible(f):
                sample.append(f)
        bad = []
        for f in family + sample:
            rep = eigenring(PetitAlgebra(f))
            elems = oracles.eigenring_elements(f)
            if rep.dim_over_F != f.degree or len(elems) != f.tower.F.order**f.degree:
                bad.append(f"{f}: dim {rep.dim_over_F}")
            elif not oracles.is_commutative(f, elems) or oracles.has_zero_divisors(f, elems):
                bad.append(f"{f}: not a field")
        ok = not bad
        return ok, f"{len(family)} over F_4 and {len(sample)} over F_8 are fields of dimension m" if ok else f"failures {bad[:5]}"

    return _run(2, "dimension law for irreducible f", 30, body)


def check_nucleus(seed=0, scale=1.0):
    def body():
        rng = random.Random(seed)
        T4, T16 = parse_tower(F4), parse_tower(F16)
        polys = [f for m in (2, 3) for f in oracles.all_monic(T4, m)]
        polys += [_random_monic(rng, T16, rng.randint(2, 4)) for _ in range(int(200 * scale))]
        bad = []
        tested = 0
        for f in polys:
            if is_right_invariant(f):
                continue
            tested += 1
            A = PetitAlgebra(f)
            closed = nucleus(A).subfield
            brute = nucleus_bruteforce(A)
            assoc = set(oracles.nucleus_elements(f))
            if not closed.same_as(brute) or set(closed.elements()) != assoc:
                bad.append(str(f))
        ok = not bad
        return ok, f"{tested} polynomials agree with both brute-force nuclei" if ok else f"mismatch {bad[:5]}"

    return _run(3, "nucleus closed form", 60, body)


def check_t_membership(seed=0, scale=1.0):
    def body():
        bad = []
        count = 0
        for spec in (F4, F8):
            T = parse_tower(spec)
            for f in oracles.all_monic(T, 2):
                count += 1
                A = PetitAlgebra(f)
                brute = oracles.in_eigenring(f, SkewPoly.t(T))
                if brute != t_power_sufficient(A, 1) or brute != t_power_in_nucr(A, 1):
                    bad.append(str(f))
        ok = not bad
        return ok, f"{count} polynomials: t in Nuc_r iff all a_i in F" if ok else f"mismatch {bad}"

    return _run(4, "t in the right nucleus", None, body)


def check_mclm(seed=0, scale=1.0):
    def body():
        rng = random.Random(seed)
        towers = [parse_tower(s) for s in (F4, F8, F9)]
        bad = []
        total = int(500 * scale)
        for _ in range(total):
            T = rng.choice(towers)
            f = _random_monic(rng, T, rng.randint(1, 4), nonzero_a0=True)
            res = mclm(f, check_minimal=False)
            if not is_central(res.h) or s_mul(res.cofactor, f) != res.h:
                bad.append(f"{f}: not a central left multiple")
                continue
            if res.hhat.degree <= 3:
                for p in cp_divisors(res.hhat):
                    if p != res.hhat and s_right_divmod(SkewPoly.from_center(p, T), f)[1].is_zero():
                        bad.append(f"{f}: {p} is smaller")
            if oracles.mclm_hhat(f) != res.hhat:
                bad.append(f"{f}: oracle disagrees")
        ok = not bad
        return ok, f"{total} random polynomials: central, exact, minimal" if ok else f"failures {bad[:5]}"

    return _run(5, "mclm correctness", 60, body)


def check_decide_soundness(seed=0, scale=1.0):
    def body():
        bad = []
        tally = {}
        for spec in (F4, F8):
            T = parse_tower(spec)
            for f in oracles.all_monic(T, 2):
                if is_right_invariant(f):
                    continue
                v = decide(f, certify=True)
                tally[v.kind] = tally.get(v.kind, 0) + 1
                irr = oracles.is_irreducible(f)
                if v.kind in (REDUCIBLE_TRUE, TRIVIAL_T_FACTOR):
                    fa = factorize(f)
                    if irr or (fa.l < 2 and fa.t_valuation < 1):
                        bad.append(f"{f}: {v}")
                    if v.witness is not None and not s_right_divmod(f, v.witness)[1].is_zero():
                        bad.append(f"{f}: witness {v.witness} does not divide")
                elif v.kind == IRREDUCIBLE_CERTIFIED and not irr:
                    bad.append(f"{f}: false certificate")
        ok = not bad
        summary = ", ".join(f"{k}={v}" for k, v in sorted(tally.items()))
        return ok, summary if ok else f"contradictions {bad[:5]}"

    return _run(6, "four-step test soundness", None, body)


def _factor_confirmed(g, cert):
    if cert.kind == "degree-1":
        return g.degree == 1
    if cert.kind == "hhat-irreducible":
        c = certify_irreducible(g)
        return c is not None and c.kind == "hhat-irreducible"
    return oracles.is_irreducible(g)


def check_factorizer(seed=0, scale=1.0):
    def body():
        rng = random.Random(seed)
        towers = [parse_tower(s) for s in (F4, F8, F9)]
        bad = []
        total = int(500 * scale)
        for _ in range(total):
            T = rng.choice(towers)
            f = _random_monic(rng, T, rng.randint(2, 4))
            fa = factorize(f)
            if fa.product(T) != f:
                bad.append(f"{f}: does not recombine")
            for g, cert in zip(fa.factors, fa.certificates):
                if not _factor_confirmed(g, cert):
                    bad.append(f"{f}: factor {g} not irreducible")
        ok = not bad
        return ok, f"{total} random polynomials recombine into confirmed irreducibles" if ok else f"failures {bad[:5]}"

    return _run(7, "factorizer recombination", 120, body)


def check_worked_example(seed=0, scale=1.0):
    def body():
        T = parse_tower(F4)
        F = T.F
        problems = []
        f = parse_skew(T, "t^2+g")
        res = mclm(f)
        x1 = CenterPoly(F, (1, 1))
        if res.hhat != oracles.mclm_hhat(f) or str(res.hhat) != "x^2+x+1":
            problems.append(f"hhat {res.hhat}")
        if str(res.h) != "t^4+t^2+1":
            problems.append(f"h {res.h}")
        if decide(f, certify=True).kind != IRREDUCIBLE_CERTIFIED or not cp_is_irreducible(res.hhat):
            problems.append("no certificate")
        elems = oracles.eigenring_elements(f)
        if len(elems) != 4 or not oracles.is_commutative(f, elems) or oracles.has_zero_divisors(f, elems):
            problems.append("Nuc_r is not F_4")
        f2 = parse_skew(T, "t^2+(g+1)*t+g")
        res2 = mclm(f2)
        if res2.hhat != x1 * x1 or res2.hhat != oracles.mclm_hhat(f2):
            problems.append(f"hhat2 {res2.hhat}")
        fa = factorize(f2)
        if [str(g) for g in fa.factors] != ["t+g", "t+1"] or fa.product(T) != f2:
            problems.append(f"factors {fa.factors}")
        ok = not problems
        return ok, "hhat, h, certificate, Nuc_r and [t+g, t+1] all match" if ok else "; ".join(problems)

    return _run(8, "worked example chain", None, body)


def check_subalgebra(seed=0, scale=1.0):
    def body():
        bad = []
        count = 0
        for spec in (F4, F8):
            T = parse_tower(spec)
            for m in (2, 3):
                for cs in _F_coeff_tuples(T, m):
                    f = SkewPoly(T, cs + (1,))
                    if is_right_invariant(f):
                        continue
                    count += 1
                    A = PetitAlgebra(f)
                    rep = eigenring(A)
                    for b in lower_bound_span(A):
                        if not oracles.in_eigenring(f, b) or not in_eigenring(rep, b):
                            bad.append(f"{f}: {b}")
        ok = count > 0 and not bad
        return ok, f"{count} polynomials in F[t]: L t^j lies in Nuc_r" if ok else f"failures {bad[:5]}"

    return _run(9, "subalgebra bound", None, body)


def _F_coeff_tuples(T, m):
    return itertools.product(range(T.q), repeat=m)


CHECKS = [
    check_eigenring_count,
    check_dimension_law,
    check_nucleus,
    check_t_membership,
    check_mclm,
    check_decide_soundness,
    check_factorizer,
    check_worked_example,
    check_subalgebra,
]


def run_all(seed=0, scale=1.0):
    return [chk(seed=seed, scale=scale) for chk in CHECKS]
