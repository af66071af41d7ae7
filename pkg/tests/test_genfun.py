import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from asmgen import genfun
from asmgen.errors import DistinctnessViolated, IndexOutOfRange
from asmgen.exactmath import var
from asmgen.genfun import GenFunTable, brute_multirow, brute_specialized, coeff_extract

X, Y = var("x"), var("y")
Z, Z1, Z2, Z3, Z4 = (var(v) for v in ("z", "z1", "z2", "z3", "z4"))
KINDS = ["quadAlt", "tri", "adj", "adjAlt", "opp", "single", "unrefined"]


def test_quad_small_sizes():
    assert brute_specialized("quad", 1) == 1
    assert brute_specialized("quad", 2) == 1 + X * Z1 * Z2 * Z3 * Z4
    assert brute_specialized("quad", 3) == (
        1 + X * Z1 * Z4 + X * Z2 * Z3 + X ** 2 * Z1 * Z2 * Z3 ** 2 * Z4 ** 2
        + X ** 2 * Z1 ** 2 * Z2 ** 2 * Z3 * Z4 + X ** 3 * (Z1 * Z2 * Z3 * Z4) ** 2
        + X * Y * Z1 * Z2 * Z3 * Z4)


def test_unrefined_three():
    assert genfun.zunref(3) == 1 + 2 * X + 2 * X ** 2 + X ** 3 + X * Y


def test_general_three_has_seven_terms():
    g = brute_specialized("general", 3)
    assert len(g) == 7
    ones = {v: 1 for v in g.vars if v.startswith("z")}
    assert g.subs(ones) == genfun.zunref(3)


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("n", range(1, 6))
def test_direct_fold_equals_specialisation(kind, n):
    assert brute_specialized(kind, n) == brute_specialized(kind, n, route="subs")


def test_refined_coefficients_at_unity():
    assert [coeff_extract("single", 4, (k,), at_unity=True) for k in range(4)] == [7, 14, 14, 7]
    with pytest.raises(IndexOutOfRange):
        coeff_extract("single", 4, (4,))


@pytest.mark.parametrize("n", range(2, 6))
def test_first_coefficients_reduce_size(n):
    assert coeff_extract("single", n, (0,)) == genfun.zunref(n - 1)
    for k in range(n):
        expect = genfun.zunref(n - 1) if k == 0 else 0
        assert coeff_extract("adj", n, (k, 0)) == expect


@pytest.mark.parametrize("n", range(1, 7))
def test_free_fermion_values(n):
    assert genfun.zunref(n).subs({"x": 1, "y": 2}) == 2 ** (n * (n - 1) // 2)


def test_multirow_reductions():
    for n in range(1, 5):
        assert brute_multirow(n, ()) == genfun.zunref(n)
        one = brute_multirow(n, (1,)).subs({"w1": Y}).rename({"z1": "z"})
        assert one == genfun.zsingle(n)
    for n in range(2, 5):
        both = brute_multirow(n, (1, n)).subs({"w1": Y, "w2": Y})
        assert both == genfun.zopp(n)
    with pytest.raises(IndexOutOfRange):
        brute_multirow(3, (2, 1))


def test_x_function_examples():
    for n in range(1, 5):
        assert genfun.xfun(n, 0) == genfun.zunref(n)
        assert genfun.xfun(n, 1).rename({"z1": "z"}) == genfun.zsingle(n)
    assert genfun.xfun(3, 2).subs({"x": 1, "y": 1}) == genfun.zopp(3).subs({"x": 1, "y": 1})
    ff = genfun.xfun(4, 2).subs({"y": X + 1})
    assert ff == (X * Z1 * Z2 + 1) * (X * Z1 + 1) ** 2 * (X * Z2 + 1) ** 2 * (X + 1)
    with pytest.raises(IndexOutOfRange):
        genfun.xfun(2, 3)


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7),
                min_size=2, max_size=2, unique=True),
       st.fractions(min_value=-3, max_value=3, max_denominator=5),
       st.fractions(min_value=-3, max_value=3, max_denominator=5))
def test_x_function_pointwise_matches_symbolic(zs, x, y):
    point = {"x": x, "y": y, "z1": zs[0], "z2": zs[1]}
    assert genfun.xfun_at(3, x, y, zs) == genfun.xfun(3, 2).evaluate(point)


def test_x_function_needs_distinct_points():
    with pytest.raises(DistinctnessViolated):
        genfun.xfun_at(3, 1, 1, [Fraction(1, 2), Fraction(1, 2)])


def test_corner_function():
    assert genfun.yfun_brute(1) == Y ** 4
    for n in range(1, 5):
        yf = genfun.yfun(n)
        assert yf.subs({"z2": 1, "z3": 1, "z4": 1}).rename({"z1": "z"}) == Y ** 4 * genfun.zsingle(n)
        assert yf.subs({"z2": 1, "z4": 1}).rename({"z3": "z2"}) == Y ** 4 * genfun.zopp(n)


def test_reflection_symmetry_of_quad():
    for n in range(1, 6):
        q = genfun.zqua(n)
        assert q == q.rename({"z1": "z4", "z4": "z1", "z2": "z3", "z3": "z2"})


def test_unknown_kind():
    with pytest.raises(ValueError):
        brute_specialized("nonsense", 3)


def test_table_round_trip(tmp_path):
    path = tmp_path / "cache.json"
    table = GenFunTable(path)
    table.get("quad", 4)
    table.get("multiRow", 3, (1, 3))
    table.save()
    again = GenFunTable(path)
    assert ("quad", 4) in again and len(again) == 2
    assert again.get("quad", 4) == genfun.zqua(4)
    assert again.discarded == []


def test_table_discards_corrupt_entries(tmp_path):
    path = tmp_path / "cache.json"
    table = GenFunTable(path)
    table.get("unrefined", 4)
    table.get("single", 3)
    table.save()
    data = json.loads(path.read_text())
    key = next(k for k in data if k.startswith("unrefined"))
    data[key] = json.loads(json.dumps(data[next(k for k in data if k.startswith("single"))]))
    path.write_text(json.dumps(data))
    again = GenFunTable(path)
    assert key in again.discarded
    assert again.get("unrefined", 4) == genfun.zunref(4)


def test_table_unreadable_file(tmp_path):
    path = tmp_path / "cache.json"
    path.write_text("{not json")
    assert GenFunTable(path).discarded == ["<file>"]
