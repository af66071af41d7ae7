from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from asmgen.errors import DegeneratePoint
from asmgen.exactmath import I, OMEGA, SQRT_I, SQRT_OMEGA
from asmgen.points import PointSampler
from asmgen.sixvertex import (
    SpectralPoint, abc, crossing_value, double_staircase, ik_determinant,
    partition_function, partition_function_brute, random_point, schur_eval, special_points,
    weights, zcomb_formula, zff_formula,
)

nonzero = st.fractions(min_value=-6, max_value=6, max_denominator=6).filter(lambda f: f != 0)


def distinct(k):
    return st.lists(nonzero, min_size=k, max_size=k, unique_by=lambda f: f * f)


def test_weights_at_equal_parameters():
    U, Q = Fraction(2), Fraction(3)
    a, b, _ = abc(U, U, Q)
    assert a == b == U * U * (Q - 1 / Q)


@given(nonzero, nonzero, nonzero)
def test_weight_swap_symmetry(U, V, Q):
    a, b, _ = abc(U, V, Q)
    a2, b2, _ = abc(V, U, Q)
    assert (a, b) == (b2, a2)


@given(nonzero, nonzero, nonzero)
def test_crossing_value_is_constant(U, V, Q):
    a, b, _ = abc(U, V, Q)
    assume(a != 0 and b != 0)
    q = Q * Q
    assert crossing_value(U, V, Q) == -(q + 1 / q)


def test_crossing_value_at_cube_root():
    assert crossing_value(Fraction(2), Fraction(3), SQRT_OMEGA) == 1
    assert SQRT_OMEGA ** 2 == OMEGA


def test_size_one_is_the_c_weight():
    p = SpectralPoint((Fraction(2),), (Fraction(3),), Fraction(5))
    assert partition_function_brute(p) == weights(p, 0, 0)[2]


@given(distinct(3), distinct(3), nonzero)
def test_ik_equals_brute(us, vs, q):
    assume(q * q != 1)
    p = SpectralPoint(tuple(us), tuple(vs), q)
    try:
        ik = ik_determinant(p)
    except DegeneratePoint:
        return
    assert ik == partition_function_brute(p)


@pytest.mark.parametrize("n", range(2, 6))
def test_ik_equals_brute_at_seeded_points(n):
    rng = PointSampler(100 + n)
    for _ in range(5):
        p = random_point(rng, n)
        assert partition_function(p, "ik") == partition_function(p, "brute")


def test_degenerate_points():
    with pytest.raises(DegeneratePoint):
        SpectralPoint((Fraction(0),), (Fraction(1),), Fraction(2))
    p = SpectralPoint((Fraction(2), Fraction(2)), (Fraction(1), Fraction(3)), Fraction(5))
    with pytest.raises(DegeneratePoint):
        ik_determinant(p)
    assert partition_function(p) == partition_function_brute(p)


def test_schur_examples():
    assert double_staircase(3).partition == (2, 2, 1, 1)
    assert schur_eval(double_staircase(2), [1] * 4) == 6
    assert schur_eval(double_staircase(3), [1] * 6) == 189
    with pytest.raises(ValueError):
        schur_eval(double_staircase(2), [1, 2])


@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=6, max_size=6),
       st.permutations(range(6)))
def test_schur_is_symmetric(vals, perm):
    shape = double_staircase(3)
    assert schur_eval(shape, vals) == schur_eval(shape, [vals[i] for i in perm])


@pytest.mark.parametrize("n", range(1, 4))
def test_free_fermion_product(n):
    rng = PointSampler(7 + n)
    p0 = random_point(rng, n)
    for sign, q in ((1, SQRT_I), (-1, SQRT_I.conjugate())):
        p = SpectralPoint(p0.root_u, p0.root_v, q)
        assert partition_function_brute(p) == zff_formula(p, sign)
    assert SQRT_I ** 2 == I


@pytest.mark.parametrize("n", range(1, 4))
def test_combinatorial_point(n):
    rng = PointSampler(11 + n)
    p0 = random_point(rng, n)
    for sign, q in ((1, SQRT_OMEGA), (-1, SQRT_OMEGA.conjugate())):
        p = SpectralPoint(p0.root_u, p0.root_v, q)
        assert partition_function_brute(p) == zcomb_formula(p, sign)


@pytest.mark.parametrize("which", ["freefermion", "combinatorial"])
def test_special_point_residuals(which):
    assert all(r == 0 for r in special_points(3, which, seed=5, points=2))
    with pytest.raises(ValueError):
        special_points(2, "elsewhere")


def test_point_sampler_is_reproducible():
    a, b = PointSampler(42), PointSampler(42)
    assert a.distinct(6) == b.distinct(6)
    assert a.log == b.log
    assert len(set(a.distinct(5))) == 5
