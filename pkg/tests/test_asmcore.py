import pytest
from hypothesis import given
from hypothesis import strategies as st

from asmgen import kernels
from asmgen._kernel_py import count_asms as py_count
from asmgen.asmcore import (
    Asm, asm_product_formula, asm_stats, asm_symmetry, asm_to_sixvertex, corner_reduce,
    count_asms, enumerate_asms, format_asm, near_corner_reduce, nu_double_sum,
    nu_row_col_sums, parse_asms, quarter_turn, sixvertex_stats, sixvertex_to_asm,
    transpose, validate_asm,
)
from asmgen.errors import InvalidConfig, NotAlternating

COUNTS = [1, 2, 7, 42, 429, 7436, 218348]
ALL = {n: list(enumerate_asms(n)) for n in range(1, 6)}
CENTRAL = validate_asm([[0, 1, 0], [1, -1, 1], [0, 1, 0]])
ANTI = validate_asm([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
IDENT3 = validate_asm([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


@st.composite
def asms(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    return ALL[n][draw(st.integers(0, len(ALL[n]) - 1))]


@pytest.mark.parametrize("n", range(1, 7))
def test_counts_match_product_formula(n):
    assert count_asms(n) == COUNTS[n - 1] == asm_product_formula(n)


def test_enumeration_size_seven():
    assert sum(1 for _ in enumerate_asms(7)) == 218348


@pytest.mark.parametrize("n", range(1, 6))
def test_enumeration_is_duplicate_free_and_valid(n):
    seen = {a.entries for a in ALL[n]}
    assert len(seen) == COUNTS[n - 1]
    for a in ALL[n]:
        assert validate_asm(a.entries) == a


def test_kernels_agree():
    for n in range(1, 7):
        assert kernels.count_asms(n) == py_count(n)


def test_validation():
    assert CENTRAL in ALL[3]
    with pytest.raises(NotAlternating):
        validate_asm([[1, -1], [0, 1]])
    with pytest.raises(NotAlternating):
        validate_asm([[1, 0], [0, 2]])
    with pytest.raises(NotAlternating):
        validate_asm([[1, 0, 0], [0, 1, 0]])


def test_statistics_examples():
    s = asm_stats(IDENT3)
    assert (s.nu, s.mu, s.rhoT, s.rhoR, s.rhoB, s.rhoL) == (0, 0, 0, 0, 0, 0)
    s = asm_stats(CENTRAL)
    assert (s.nu, s.mu, s.rhoT, s.rhoR, s.rhoB, s.rhoL) == (1, 1, 1, 1, 1, 1)
    s = asm_stats(ANTI)
    assert (s.nu, s.mu, s.rhoT, s.rhoR, s.rhoB, s.rhoL) == (3, 0, 2, 2, 2, 2)


def test_identity_is_the_only_inversion_free_matrix():
    for n, group in ALL.items():
        assert [a for a in group if asm_stats(a).nu == 0] == [
            Asm(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))]


@given(asms())
def test_nu_definitions_agree(a):
    s = asm_stats(a, check=True)
    assert s.nu == nu_double_sum(a.entries)
    assert (s.nuRow, s.nuCol) == nu_row_col_sums(a.entries)


@given(asms())
def test_symmetry_relations(a):
    n = a.n
    s, t, q = asm_stats(a), asm_stats(transpose(a)), asm_stats(quarter_turn(a))
    assert t.nu == s.nu and t.mu == s.mu
    assert t.nu == n * (n - 1) // 2 - q.nu - q.mu
    assert (t.rhoT, t.rhoR, t.rhoB, t.rhoL) == (s.rhoL, s.rhoB, s.rhoR, s.rhoT)


@given(asms())
def test_symmetries_have_the_right_order(a):
    assert asm_symmetry(asm_symmetry(a, "transpose"), "transpose") == a
    b = a
    for _ in range(4):
        b = asm_symmetry(b, "quarter_turn")
    assert b == a


def test_quarter_turn_of_antidiagonal():
    q = quarter_turn(ANTI)
    assert asm_stats(q).nu == 3 - asm_stats(ANTI).nu - asm_stats(ANTI).mu == 0


def test_rho_bottom_equals_rho_right_of_transpose():
    assert all(asm_stats(a).rhoB == asm_stats(transpose(a)).rhoR for a in ALL[4])


@pytest.mark.parametrize("n", range(1, 6))
def test_sixvertex_round_trip(n):
    for a in ALL[n]:
        cfg = asm_to_sixvertex(a)
        assert sixvertex_to_asm(cfg) == a
        st_ = sixvertex_stats(cfg)
        s = asm_stats(a)
        assert st_ == {"nu": s.nu, "mu": s.mu, "rhoT": s.rhoT, "rhoR": s.rhoR,
                       "rhoB": s.rhoB, "rhoL": s.rhoL}
        assert cfg.count(1) == cfg.count(2)
        assert cfg.count(5) == cfg.count(6) + n


def test_invalid_configurations():
    with pytest.raises(InvalidConfig):
        sixvertex_to_asm([[1, 2], [3]])
    with pytest.raises(InvalidConfig):
        sixvertex_to_asm([[7]])
    with pytest.raises(InvalidConfig):
        sixvertex_to_asm([[5, 1], [1, 5]])


def test_format_parse_round_trip():
    text = "\n\n".join(format_asm(a) for a in ALL[3])
    assert parse_asms(text) == ALL[3]


def test_corner_reductions():
    for a in ALL[4]:
        if a[0, 0] == 1:
            assert corner_reduce(a) in ALL[3]
        if a[1, 0] == 1:
            assert near_corner_reduce(a) in ALL[3]
    with pytest.raises(ValueError):
        corner_reduce(ANTI)
