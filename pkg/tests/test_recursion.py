import pytest

from asmgen import genfun
from asmgen.closedform import xfact
from asmgen.errors import InexactDivision
from asmgen.exactmath import var
from asmgen.recursion import (
    RecursionState, recur_adj, recur_opp, recur_quad, recur_single, recur_tri,
    recur_unrefined, verify_identity,
)

X, Y = var("x"), var("y")
Z1, Z2, Z3, Z4 = (var(f"z{i}") for i in range(1, 5))


@pytest.fixture(scope="module")
def built():
    return RecursionState.build(6)


def test_small_quad_functions(built):
    assert built.quad[2] == 1 + X * Z1 * Z2 * Z3 * Z4
    assert built.quad[3] == genfun.zqua(3)
    assert built.adj[2] == 1 + X * Z1 * Z2


@pytest.mark.parametrize("n", range(2, 7))
def test_recursive_build_matches_enumeration(built, n):
    assert built.quad[n] == genfun.zqua(n)
    assert built.adj[n] == genfun.zadj(n)
    assert built.adj_alt[n] == genfun.zadj_alt(n)
    assert built.single[n] == genfun.zsingle(n)
    assert built.unrefined[n] == genfun.zunref(n)


@pytest.mark.parametrize("n", range(2, 6))
def test_recursions_from_enumerated_lower_sizes(n):
    st = RecursionState.from_brute(n - 1)
    assert recur_quad(n, st) == genfun.zqua(n)
    assert recur_adj(n, st) == (genfun.zadj(n), genfun.zadj_alt(n))
    assert recur_adj(n, st, route="sum") == (genfun.zadj(n), genfun.zadj_alt(n))
    assert recur_unrefined(n, st) == genfun.zunref(n)
    assert sum(c * var("z") ** k for k, c in enumerate(recur_single(n, st))) == genfun.zsingle(n)


@pytest.mark.parametrize("n", range(2, 6))
def test_triple_and_opposite(n):
    st = RecursionState.from_brute(n)
    assert recur_tri(n, st, "triprel") == genfun.ztri(n)
    assert recur_tri(n, st, "triprelalt") == genfun.ztri(n)
    assert recur_opp(n, st) == genfun.zopp(n)


def test_singly_refined_coefficients_at_unity(built):
    coeffs = [c.subs({"x": 1, "y": 1}).constant_value() for c in recur_single(4, built)]
    assert coeffs == [7, 14, 14, 7]
    assert built.unrefined[4].subs({"x": 1, "y": 1}) == 42


@pytest.mark.parametrize("n", range(1, 7))
def test_permutation_chain(built, n):
    assert built.unrefined[n].subs({"y": 0}) == xfact(n)


def test_opposite_at_size_two():
    assert genfun.zopp(2).subs({"x": 1, "y": 1}) == 1 + Z1 * Z2


def test_missing_lower_size_is_reported():
    with pytest.raises(ValueError):
        recur_quad(5, RecursionState.initial())


def test_corrupted_input_gives_inexact_division():
    st = RecursionState.from_brute(3)
    st.unrefined[2] = st.unrefined[2] + X
    with pytest.raises(InexactDivision):
        recur_quad(4, st)


@pytest.mark.parametrize("cid,n", [("opposite-plucker", 3), ("corner-quad", 3),
                                   ("quad-relation-alt", 4)])
def test_verify_identity_examples(cid, n):
    report = verify_identity(cid, n)
    assert report.ok and report.residual == 0
