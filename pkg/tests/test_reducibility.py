import random

import pytest
from hypothesis import given

from skewlab import oracles
from skewlab.errors import DegenerateInput, HypothesisViolated, Inconclusive, TValuationNonzero
from skewlab.petit import PetitAlgebra, eigenring, petit_mul
from skewlab.reducibility import (
    IRREDUCIBLE_CERTIFIED,
    REDUCIBLE_TRUE,
    RIGHT_INVARIANT,
    STOP_UNDECIDED,
    TRIVIAL_T_FACTOR,
    certify_irreducible,
    decide,
    factorize,
    find_zero_divisor,
    proper_factor,
    right_factor_scan,
)
from skewlab.skew_poly import SkewPoly, s_gcrd, s_right_divmod
from skewlab.text import parse_skew

from .strategies import skew_polys


def test_decide_examples(P, towers):
    T8 = towers["F8"]
    v = decide(parse_skew(T8, "t^2+1"))
    assert (v.kind, v.reason, str(v.witness)) == (REDUCIBLE_TRUE, "step1-commutative-factor", "t+1")
    assert str(v) == "TRUE step=1 witness=t+1"
    v = decide(P("t^2+g"))
    assert (v.kind, v.reason) == (STOP_UNDECIDED, "step4-undecided")
    v = decide(P("t^2+g*t"))
    assert (v.kind, str(v.witness)) == (TRIVIAL_T_FACTOR, "t")
    assert decide(P("t^2+1")).kind == RIGHT_INVARIANT
    assert decide(P("t^2+g"), certify=True).kind == IRREDUCIBLE_CERTIFIED


def test_literal_step3_is_unsound(P):
    """t^2+t+1 is irreducible over F_4, yet the literal third step calls it reducible."""
    f = P("t^2+t+1")
    assert oracles.is_irreducible(f)
    literal = decide(f, literal_step3=True)
    assert (literal.kind, literal.reason, literal.witness) == (REDUCIBLE_TRUE, "step3-fix-equals-L", None)
    assert decide(f).kind == STOP_UNDECIDED


def test_decide_hypothesis(towers):
    T = towers["F16"]
    with pytest.raises(HypothesisViolated):
        decide(parse_skew(T, "t^2+g"))
    # gcd(m, n) = 1 is allowed even for composite n
    assert decide(parse_skew(T, "t^3+g")).kind in (REDUCIBLE_TRUE, STOP_UNDECIDED)
    with pytest.raises(DegenerateInput):
        decide(parse_skew(T, "t+g"))


@pytest.mark.parametrize("name,m", [("F4", 2), ("F8", 2), ("F4", 3), ("F16", 3)])
def test_decide_sound_exhaustive(towers, name, m):
    T = towers[name]
    polys = list(oracles.all_monic(T, m))
    if len(polys) > 300:
        polys = random.Random(0).sample(polys, 300)
    for f in polys:
        v = decide(f, certify=True)
        irr = oracles.is_irreducible(f)
        if v.kind in (REDUCIBLE_TRUE, TRIVIAL_T_FACTOR):
            assert not irr
            assert v.witness is not None and s_right_divmod(f, v.witness)[1].is_zero()
            assert 1 <= v.witness.degree < m
        if v.kind == IRREDUCIBLE_CERTIFIED:
            assert irr


def test_certify_examples(P):
    assert certify_irreducible(P("t^2+g")).kind == "hhat-irreducible"
    assert certify_irreducible(P("t^2+(g+1)*t+g")) is None
    assert certify_irreducible(P("t+g")).kind == "degree-1"
    with pytest.raises(TValuationNonzero):
        certify_irreducible(P("t^2+g*t"))


@pytest.mark.parametrize("name,m", [("F4", 2), ("F4", 3), ("F8", 2), ("F8", 3)])
def test_certificate_never_lies(towers, name, m):
    T = towers[name]
    for f in oracles.all_monic(T, m):
        if f.coeffs[0] and certify_irreducible(f):
            assert oracles.is_irreducible(f)


def test_zero_divisor_examples(P):
    f = P("t^2+(g+1)*t+g")
    A = PetitAlgebra(f)
    q1, q2 = find_zero_divisor(eigenring(A))
    assert not q1.is_zero() and not q2.is_zero() and petit_mul(A, q1, q2).is_zero()
    assert str(s_gcrd(q1, f)) in ("t+1", "t+g") or str(s_gcrd(q2, f)) in ("t+1", "t+g")
    assert find_zero_divisor(eigenring(PetitAlgebra(P("t^2+g")))) is None
    assert find_zero_divisor(eigenring(PetitAlgebra(P("t^2+t+1")))) is None


def test_proper_factor_examples(P):
    route = []
    assert proper_factor(P("t^2+(g+1)*t+g"), route) == (P("t+g"), P("t+1"))
    assert route == ["hhat-split"]
    g, h = proper_factor(P("t^4+1"))
    assert g * h == P("t^4+1") and (g, h) == (P("t^2+1"), P("t^2+1"))
    route = []
    assert proper_factor(P("t^2+g"), route) is None and route == ["hhat-irreducible"]


def test_factorize_examples(P):
    fa = factorize(P("t^2+(g+1)*t+g"))
    assert [str(x) for x in fa.factors] == ["t+g", "t+1"] and fa.l == 2
    fa = factorize(P("t^4+1"))
    assert [str(x) for x in fa.factors] == ["t+1"] * 4 and fa.l == 4
    fa = factorize(P("t^2+g"))
    assert fa.factors == [P("t^2+g")] and fa.l == 1 and fa.certificates[0].kind == "hhat-irreducible"
    fa = factorize(P("t^3+g*t^2"))
    assert fa.t_valuation == 2 and fa.l == 3
    assert fa.to_dict()["factors"] == ["t+g"]


def test_eigenring_route_is_used(towers):
    """Irreducible hhat with a reducible f forces the zero-divisor route."""
    T = towers["F4"]
    seen = set()
    for f in oracles.all_monic(T, 2):
        route = []
        split = proper_factor(f, route)
        seen.update(route)
        if split:
            assert split[0] * split[1] == f
    assert "zero-divisor" in seen and "exhaustive-scan" not in seen


def test_right_factor_scan(P):
    assert right_factor_scan(P("t^2+(g+1)*t+g")) == P("t+1")
    assert right_factor_scan(P("t^2+g")) is None
    with pytest.raises(Inconclusive):
        right_factor_scan(P("t^4+g"), budget=10)


@pytest.mark.parametrize("name", ["F4", "F8", "F9", "F64"])
def test_factorize_recombines(towers, name):
    T = towers[name]

    @given(skew_polys(T, max_degree=4, min_degree=1, monic=True))
    def prop(f):
        fa = factorize(f)
        assert fa.product(T) == f
        for g, cert in zip(fa.factors, fa.certificates):
            assert g.is_monic()
            if g.degree <= 3 and T.order <= 16:
                assert oracles.is_irreducible(g), (str(g), cert)

    prop()
