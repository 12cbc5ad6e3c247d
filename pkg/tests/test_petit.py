import itertools

import pytest
from hypothesis import given

from skewlab import oracles
from skewlab.errors import DegenerateInput, DegreeTooHigh, RightInvariantInput, TValuationNonzero
from skewlab.petit import (
    PetitAlgebra,
    associator,
    diagnostics,
    eigenring,
    eigenring_elements,
    in_eigenring,
    is_division_algebra,
    lower_bound_span,
    nucleus,
    nucleus_bruteforce,
    petit_mul,
    subalgebra_lower_bound,
    t_power_in_nucr,
)
from skewlab.skew_poly import SkewPoly, is_right_invariant
from skewlab.text import parse_skew

from .strategies import skew_polys


def A_(P, s):
    return PetitAlgebra(P(s))


def test_construction(P):
    with pytest.raises(DegenerateInput):
        PetitAlgebra(P("t+g"))
    A = A_(P, "g*t^3+t+g")
    assert A.f == P("t^3+(g+1)*t+1")
    assert A.lambda_set == (0, 1)
    assert A.dim == 6


def test_product_examples(P):
    A = A_(P, "t^2+g")
    assert petit_mul(A, P("t"), P("t")) == P("g")
    assert petit_mul(A, P("1"), P("g*t+1")) == P("g*t+1")
    B = A_(P, "t^2+(g+1)*t+g")
    assert petit_mul(B, P("t+1"), P("t+g")) == P("(t+1)*(t+g)") - B.f
    with pytest.raises(DegreeTooHigh):
        petit_mul(A, P("t^2"), P("1"))


def test_associator_examples(P):
    A = A_(P, "t^2+g")
    for y, z in itertools.product(A.monomial_basis(), repeat=2):
        assert associator(A, P("1"), y, z).is_zero()
    assert associator(A, P("t"), P("t"), P("g")).is_zero()
    # a_1 outside F makes the algebra visibly nonassociative
    B = A_(P, "t^2+g*t+1")
    assert any(not associator(B, x, y, z).is_zero() for x, y, z in itertools.product(B.monomial_basis(), repeat=3))


def test_nucleus_examples(P, towers):
    r = nucleus(A_(P, "t^2+g"))
    assert (r.d, r.degree_over_F) == (2, 2)
    assert nucleus(A_(P, "t^2+(g+1)*t+g")).degree_over_F == 1
    with pytest.raises(RightInvariantInput):
        nucleus(A_(P, "t^2+1"))
    assert nucleus_bruteforce(A_(P, "t^2+1")).degree_over_F == 2
    T = towers["F16"]
    f = parse_skew(T, "t^4+g^5*t^2+g")
    assert nucleus(PetitAlgebra(f)).d == 2
    g = parse_skew(T, "t^4+g*t^3+g^7")
    assert nucleus(PetitAlgebra(g)).degree_over_F == 1


@pytest.mark.parametrize("name,m", [("F4", 2), ("F4", 3), ("F8", 2)])
def test_nucleus_matches_oracles_exhaustive(towers, name, m):
    T = towers[name]
    for f in oracles.all_monic(T, m):
        if is_right_invariant(f):
            continue
        A = PetitAlgebra(f)
        sub = nucleus(A).subfield
        assert sub.same_as(nucleus_bruteforce(A))
        assert set(sub.elements()) == set(oracles.nucleus_elements(f))


def test_eigenring_examples(P):
    r = eigenring(A_(P, "t^2+g"))
    assert r.dim_over_F == 2 and {str(b) for b in r.basis} == {"1", "g"}
    r = eigenring(A_(P, "t^2+t+1"))
    assert r.dim_over_F == 2 and [str(b) for b in r.basis] == ["1", "t"]
    assert eigenring(A_(P, "t^2+1")).dim_over_F == 4


@pytest.mark.parametrize("name,m", [("F4", 2), ("F4", 3), ("F8", 2)])
def test_eigenring_exact_exhaustive(towers, name, m):
    T = towers[name]
    for f in itertools.islice(oracles.all_monic(T, m), 0, None, 3):
        r = eigenring(PetitAlgebra(f))
        brute = set(oracles.eigenring_elements(f))
        assert set(eigenring_elements(r)) == brute
        assert len(brute) == T.q**r.dim_over_F


@pytest.mark.parametrize("name", ["F9", "F16"])
def test_eigenring_closure(towers, name):
    T = towers[name]

    @given(skew_polys(T, max_degree=3, min_degree=2, monic=True))
    def prop(f):
        A = PetitAlgebra(f)
        r = eigenring(A)
        for b in r.basis:
            assert oracles.in_eigenring(f, b)
        for x, y in itertools.product(r.basis, repeat=2):
            assert in_eigenring(r, petit_mul(A, x, y))
        for x, y, z in itertools.product(r.basis[:3], repeat=3):
            assert associator(A, x, y, z).is_zero()

    prop()


def test_t_power_examples(P, towers):
    assert not t_power_in_nucr(A_(P, "t^2+g"), 1)
    assert t_power_in_nucr(A_(P, "t^2+t+1"), 1)
    T = towers["F16"]
    a = [x for x in range(T.order) if T.frob(x, 2) == x and not T.in_F(x)][0]
    f = SkewPoly(T, [a, 0, a, 0, 1])
    assert t_power_in_nucr(PetitAlgebra(f), 2)
    with pytest.raises(DegreeTooHigh):
        t_power_in_nucr(A_(P, "t^2+g"), 2)


def test_subalgebra_bound_examples(P, towers):
    assert subalgebra_lower_bound(A_(P, "t^2+t+1")) == (1, 2)
    assert subalgebra_lower_bound(A_(P, "t^2+g")) == (None, 2)
    T = towers["F16"]
    A = PetitAlgebra(parse_skew(T, "t^4+t^2+1"))
    c, bound = subalgebra_lower_bound(A)
    assert (c, bound) == (1, 8) and eigenring(A).dim_over_F >= 8
    with pytest.raises(RightInvariantInput):
        subalgebra_lower_bound(A_(P, "t^2+1"))


@pytest.mark.parametrize("name", ["F4", "F8"])
def test_subalgebra_span_inside_eigenring(towers, name):
    T = towers[name]
    for m in (2, 3):
        for cs in itertools.product(range(T.q), repeat=m):
            f = SkewPoly(T, cs + (1,))
            if is_right_invariant(f):
                continue
            A = PetitAlgebra(f)
            r = eigenring(A)
            assert all(in_eigenring(r, b) for b in lower_bound_span(A))


def test_diagnostics_examples(P):
    d = diagnostics(A_(P, "t^2+g"))
    assert (str(d.hhat), d.hhat_irreducible, d.s, d.dim_over_F, d.is_division) == ("x^2+x+1", True, 1, 2, True)
    assert dict(d.checks) == {"dim_equals_m_s": True, "s_divides_gcd_m_n": True}
    d = diagnostics(A_(P, "t^2+(g+1)*t+g"), l=2)
    assert not d.hhat_irreducible and d.dim_over_F == 2 and not d.is_division
    d = diagnostics(A_(P, "t^2+1"), l=2)
    assert d.s == 2 and d.k == 2 and all(ok for _, ok in d.checks)
    with pytest.raises(TValuationNonzero):
        diagnostics(A_(P, "t^2+g*t"))
    assert d.to_dict()["dim"] == 4


def test_division_flag_matches_brute_force(towers):
    for name in ("F4", "F8"):
        T = towers[name]
        for f in oracles.all_monic(T, 2):
            if f.coeffs[0] == 0:
                continue
            r = eigenring(PetitAlgebra(f))
            elems = oracles.eigenring_elements(f)
            assert is_division_algebra(r) == (not oracles.has_zero_divisors(f, elems))


@pytest.mark.parametrize("name,m", [("F4", 2), ("F4", 3), ("F9", 2), ("F8", 3)])
def test_dimension_consistency_with_l(towers, name, m):
    """With hhat irreducible: dim = m s, and s, l divide gcd(m, n)."""
    from skewlab.reducibility import factorize

    T = towers[name]
    reducible_seen = 0
    for f in itertools.islice(oracles.all_monic(T, m), 0, None, 2):
        if f.coeffs[0] == 0:
            continue
        A = PetitAlgebra(f)
        r = eigenring(A)
        if not r.hhat_irreducible:
            continue
        l = factorize(f).l
        reducible_seen += l > 1
        d = diagnostics(A, l=l, report=r)
        assert all(ok for _, ok in d.checks), (str(f), d.checks)
        assert r.dim_over_F == m * r.s
    if name == "F4" and m == 2:
        assert reducible_seen > 0


@pytest.mark.parametrize("name", ["F16", "F64"])
def test_recompression_in_t_power_c(towers, name):
    """With c = [L:F], every exponent of f is congruent to m mod c, so f = g(t^c) t^r."""
    T = towers[name]

    @given(skew_polys(T, max_degree=5, min_degree=2, monic=True))
    def prop(f):
        if is_right_invariant(f):
            return
        c = nucleus(PetitAlgebra(f)).degree_over_F
        q, r = divmod(f.degree, c)
        assert all(i % c == r for i, a in enumerate(f.coeffs) if a)

    prop()
