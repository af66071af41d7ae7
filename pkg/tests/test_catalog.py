import pytest

from asmgen.catalog import REGISTRY, load_all, run_check, sizes, suites

load_all()

SLOW = {("corner-plucker", 4), ("adjacent-sum", 6)}
CASES = [pytest.param(cid, n, id=f"{cid}-{n}",
                      marks=[pytest.mark.slow] if (cid, n) in SLOW else [])
         for cid, ident in REGISTRY.items() for n in sizes(ident, ident.max_n)]


def test_catalog_shape():
    assert suites() == ["closedform", "genfun", "recursion", "sixvertex"]
    assert len(REGISTRY) == 65
    for ident in REGISTRY.values():
        assert 1 <= ident.min_n <= ident.max_n
        assert ident.description


@pytest.mark.parametrize("cid,n", CASES)
def test_identity(cid, n):
    result = run_check(cid, n)
    assert result.status == "pass", result.error or [str(r) for r in result.residuals if r != 0]
    assert result.residual_terms == 0


def test_below_minimum_size_is_skipped():
    ident = REGISTRY["corner-function-zero"]
    assert run_check("corner-function-zero", ident.min_n - 1).status == "skipped"


def test_unknown_identity():
    with pytest.raises(KeyError):
        run_check("no-such-identity", 3)
