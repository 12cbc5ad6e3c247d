import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewlab.errors import DegreeMismatch, EmptyList, NonPrimeP, ReducibleModulus, TooLarge
from skewlab.field_tower import GF, build_tower, fixed_field, frobenius, intersect_fixed_fields


def test_f4_generator_relation(F4):
    K = F4.K
    g = F4.q  # int code of the generator
    assert K.mul(g, g) == K.add(g, 1)


def test_default_moduli():
    # candidates are ordered constant term first, so y^3+y^2+1 precedes y^3+y+1
    assert build_tower(2, 1, 3).ext_modulus == (1, 0, 1, 1)
    # y^2+1 is irreducible over F_3 and is the least candidate
    assert build_tower(3, 1, 2).ext_modulus == (1, 0, 1)
    assert build_tower(2, 1, 4).ext_modulus == (1, 0, 0, 1, 1)


def test_construction_errors():
    with pytest.raises(NonPrimeP):
        build_tower(4, 1, 2)
    with pytest.raises(ReducibleModulus):
        build_tower(2, 1, 2, ext_modulus=(1, 0, 1))
    with pytest.raises(DegreeMismatch):
        build_tower(2, 1, 2, ext_modulus=(1, 1, 1, 1))
    with pytest.raises(TooLarge):
        build_tower(2, 1, 21)


@pytest.mark.parametrize("name", ["F4", "F8", "F9", "F16", "F64"])
def test_field_axioms_sampled(towers, name):
    K = towers[name].K
    elems = list(K.elements())[:20]
    for a, b in itertools.product(elems, repeat=2):
        assert K.sub(K.add(a, b), b) == a
        if b:
            assert K.mul(K.div(a, b), b) == a
    for a in elems[1:]:
        assert K.mul(a, K.inv(a)) == 1


def test_slow_path_matches_tables():
    # the same field without log tables
    Fp = GF(2)
    fast = GF(2, Fp, (1, 1, 0, 1))
    slow = GF(2, Fp, (1, 1, 0, 1))
    slow._log = slow._exp = None
    for a, b in itertools.product(range(8), repeat=2):
        assert fast.mul(a, b) == slow.mul(a, b)


@pytest.mark.parametrize("name", ["F4", "F8"])
def test_frobenius_is_automorphism_exhaustive(towers, name):
    T = towers[name]
    K = T.K
    for a, b in itertools.product(range(T.order), repeat=2):
        assert frobenius(T, K.add(a, b)) == K.add(frobenius(T, a), frobenius(T, b))
        assert frobenius(T, K.mul(a, b)) == K.mul(frobenius(T, a), frobenius(T, b))


@pytest.mark.parametrize("name", ["F9", "F16", "F64"])
def test_frobenius_is_automorphism_random(towers, name):
    T = towers[name]
    K = T.K

    @given(st.integers(0, T.order - 1), st.integers(0, T.order - 1))
    def prop(a, b):
        assert T.frob(K.add(a, b)) == K.add(T.frob(a), T.frob(b))
        assert T.frob(K.mul(a, b)) == K.mul(T.frob(a), T.frob(b))

    prop()


@pytest.mark.parametrize("name", ["F4", "F8", "F9", "F16", "F64"])
def test_sigma_order_and_fixed_field(towers, name):
    T = towers[name]
    for a in range(T.order):
        assert T.frob(a, T.n) == a
        assert T.frob(a, 0) == a
        assert (T.frob(a) == a) == T.in_F(a)
        assert T.frob(a) == T.K.pow(a, T.q)
    assert any(T.frob(a, j) != a for j in range(1, T.n) for a in range(T.order))


@pytest.mark.parametrize("name", ["F4", "F8", "F9", "F16", "F64"])
def test_fixed_field_degrees(towers, name):
    T = towers[name]
    for d in range(1, 2 * T.n + 1):
        sub = fixed_field(T, d)
        assert sub.degree_over_F == math.gcd(T.n, d)
        assert sub.same_as(fixed_field(T, math.gcd(d, T.n)))
        brute = sorted(a for a in range(T.order) if T.frob(a, d) == a)
        assert sub.elements() == brute


def test_fixed_field_f16_f4(towers):
    T = towers["F16"]
    sub = fixed_field(T, 2)
    assert sub.degree_over_F == 2
    assert len([a for a in range(16) if T.K.pow(a, 4) == a]) == 4


@pytest.mark.parametrize("name", ["F4", "F8", "F9", "F16"])
def test_intersections_exhaustive(towers, name):
    T = towers[name]
    for k in (1, 2):
        for exps in itertools.combinations(range(1, T.n + 1), k):
            sub = intersect_fixed_fields(T, exps)
            brute = set(range(T.order))
            for u in exps:
                brute &= {a for a in range(T.order) if T.frob(a, u) == a}
            assert set(sub.elements()) == brute


def test_intersection_examples(towers):
    T = towers["F16"]
    assert intersect_fixed_fields(T, [4, 2]).same_as(fixed_field(T, 2))
    assert intersect_fixed_fields(T, [2, 3]).degree_over_F == 1
    assert intersect_fixed_fields(T, [1]).degree_over_F == 1
    with pytest.raises(EmptyList):
        intersect_fixed_fields(T, [])
