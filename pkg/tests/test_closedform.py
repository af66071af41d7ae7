from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from asmgen import genfun
from asmgen.closedform import (
    Laurent, XFactorial, asm_number, dpp_qformula, ff_multirow, freefermion_case,
    hyp_polynomial, kmatrix, kmatrix_formulas, lambda_det, lambda_det_condensation,
    lambda_det_expansion, perm_case, product_formulas, refined_number,
    refined_numbers_brute, xfact, xnumber,
)
from asmgen.errors import DivisionByZero, SingularCondensation
from asmgen.exactmath import det_exact, var

X, Y, Z = var("x"), var("y"), var("z")
Z1, Z2 = var("z1"), var("z2")
SYMS = [[var(f"m{i}{j}") for j in range(1, 5)] for i in range(1, 5)]


def test_x_factorials():
    assert xnumber(3) == 1 + X + X ** 2
    assert xfact(3) == 1 + 2 * X + 2 * X ** 2 + X ** 3
    assert XFactorial.of(0).value == 1
    with pytest.raises(ValueError):
        XFactorial.of(-1)


def test_permutation_case_small():
    assert genfun.zunref(3).subs({"y": 0}) == xfact(3)
    assert perm_case(4)["single"] == xnumber(4, X * Z) * xfact(3)
    assert genfun.zsingle(4).subs({"y": 0}) == perm_case(4)["single"]


@pytest.mark.parametrize("n", range(4, 7))
def test_permutation_case_quad(n):
    assert perm_case(n)["quad"] == genfun.zqua(n).subs({"y": 0})


@pytest.mark.parametrize("n", range(2, 7))
def test_free_fermion_formulas(n):
    ff = freefermion_case(n)
    at = {"y": X + 1}
    for kind, fn in (("quad", genfun.zqua), ("tri", genfun.ztri), ("adj", genfun.zadj)):
        factor, rhs = ff[kind]
        assert factor * fn(n).subs(at) == rhs
    assert ff["opp"] == genfun.zopp(n).subs(at)
    assert ff["single"] == genfun.zsingle(n).subs(at)
    assert ff["unrefined"] == (X + 1) ** (n * (n - 1) // 2)


def test_free_fermion_examples():
    assert genfun.zunref(3).subs({"y": X + 1}) == (X + 1) ** 3
    assert genfun.zsingle(4).subs({"y": X + 1}) == (X * Z + 1) ** 3 * (X + 1) ** 3
    assert ff_multirow(4, 2) == (X * Z1 * Z2 + 1) * (X * Z1 + 1) ** 2 * (X * Z2 + 1) ** 2 * (X + 1)
    with pytest.raises(ValueError):
        freefermion_case(1)


def test_lambda_determinant_two_by_two():
    m = [row[:2] for row in SYMS[:2]]
    expect = SYMS[0][0] * SYMS[1][1] + X * SYMS[0][1] * SYMS[1][0]
    assert lambda_det(m, route="expansion") == expect
    assert lambda_det(m, route="condensation") == expect


@pytest.mark.parametrize("size", [3, 4])
def test_lambda_routes_symbolic(size):
    m = [row[:size] for row in SYMS[:size]]
    a = lambda_det_expansion(m)
    b = lambda_det_condensation(m)
    assert Laurent.lift(a) == Laurent.lift(b)


def test_lambda_at_minus_one_is_the_determinant():
    m = [row[:3] for row in SYMS[:3]]
    assert lambda_det_expansion(m, -1) == det_exact(m)


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=3, max_size=3),
       st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_lambda_routes_numeric(m, x):
    try:
        expect = lambda_det_expansion(m, x)
    except DivisionByZero:
        # a zero entry sits where some ASM has -1: a genuine pole
        assert any(m[i][j] == 0 for i in range(3) for j in range(3)) and x != -1
        return
    try:
        got = lambda_det_condensation(m, x)
    except SingularCondensation:
        got = lambda_det(m, x)
    assert got == expect


def test_condensation_singularity_is_detected():
    with pytest.raises(SingularCondensation):
        lambda_det_condensation([[1, 2, 3], [4, 0, 6], [7, 8, 9]], 2)
    with pytest.raises(DivisionByZero):
        lambda_det([[1, 2, 3], [4, 0, 6], [7, 8, 9]], 2)
    assert lambda_det([[1, 2, 3], [4, 0, 6], [7, 8, 9]], -1) == det_exact(
        [[1, 2, 3], [4, 0, 6], [7, 8, 9]])


def test_condensation_fallback_when_minor_vanishes():
    m = [[1, 2, 3, 4], [5, 1, 1, 6], [7, 1, -3, 8], [9, 10, 11, 1]]
    with pytest.raises(SingularCondensation):
        lambda_det_condensation(m, 3)
    assert lambda_det(m, 3) == lambda_det_expansion(m, 3)


def test_refined_numbers():
    r = product_formulas(4)
    assert r.total == 42 and r.single == (7, 14, 14, 7)
    assert asm_number(7) == 218348
    assert [refined_number(4, k) for k in range(4)] == [7, 14, 14, 7]
    assert det_exact([list(row) for row in r.opp]) == -7


@pytest.mark.parametrize("n", range(1, 7))
def test_product_formulas_match_enumeration(n):
    assert product_formulas(n) == refined_numbers_brute(n)


@pytest.mark.parametrize("n", range(2, 7))
def test_refined_row_sums(n):
    r = product_formulas(n)
    assert sum(r.single) == r.total
    for k in range(n):
        assert sum(r.opp[k]) == sum(r.adj[k]) == r.single[k]
        assert r.d(k, 0) == (asm_number(n - 1) if k == 0 else 0)
    assert r.a(-1) == r.o(n, 0) == r.d(0, n) == 0


def test_hypergeometric_example():
    assert hyp_polynomial(3) == 2 + 3 * Z + 2 * Z ** 2


def test_kmatrix_examples():
    assert kmatrix_formulas(3, "unrefined") == 1 + 2 * X + 2 * X ** 2 + X ** 3 + X * Y
    assert kmatrix_formulas(3, "single") == genfun.zsingle(3)
    ones = [[e.subs({"x": 1, "y": 1}) for e in row] for row in kmatrix(4, "unrefined")]
    assert det_exact(ones) == 42


@pytest.mark.parametrize("n", range(1, 6))
def test_kmatrix_determinants(n):
    assert kmatrix_formulas(n, "unrefined") == genfun.zunref(n)
    assert kmatrix_formulas(n, "single") == genfun.zsingle(n)
    assert kmatrix_formulas(n, "opp") == genfun.zopp(n)


def test_dpp_products():
    q = var("q")
    assert dpp_qformula(2) == 1 + q ** 2
    assert dpp_qformula(4, q=1) == 42
    assert dpp_qformula(4, 1, q=1) == 14
    assert [dpp_qformula(5, k, q=1) for k in range(5)] == [refined_number(5, k) for k in range(5)]
    assert dpp_qformula(3, q=Fraction(1, 2)) == dpp_qformula(3).evaluate({"q": Fraction(1, 2)})
    with pytest.raises(ValueError):
        dpp_qformula(3, 3)
