"""One test per acceptance criterion.  Each records a PASS/FAIL line that
the terminal summary prints, then asserts exact equality."""

import json
import os
import subprocess
import sys
import time

import pytest

from asmgen import genfun
from asmgen.asmcore import asm_product_formula, enumerate_asms
from asmgen.catalog import REGISTRY, load_all, run_check
from asmgen.recursion import (
    RecursionState, recur_adj, recur_opp, recur_quad, recur_single, recur_tri,
    recur_unrefined,
)
from asmgen.sixvertex import IK_POINTS
from conftest import ACCEPTANCE_LINES

load_all()
UNITY = {"x": 1, "y": 1}


def record(number: int, title: str, failures: list, detail: str = ""):
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {number:2d} {status}: {title}"
    if detail:
        line += f" ({detail})"
    if failures:
        line += " :: " + "; ".join(map(str, failures[:5]))
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert not failures, line


def checks(ids_and_sizes):
    """Run registered checks; return the failing (id, n) pairs and the count run."""
    bad, count = [], 0
    for cid, sizes in ids_and_sizes:
        for n in sizes:
            count += 1
            if run_check(cid, n).status != "pass":
                bad.append((cid, n))
    return bad, count


def upto(cid, top):
    return range(REGISTRY[cid].min_n, top + 1)


def test_criterion_01_enumeration_counts():
    expected = [1, 2, 7, 42, 429, 7436, 218348]
    bad = []
    start = time.perf_counter()
    for n in range(1, 8):
        count = sum(1 for _ in enumerate_asms(n))
        if not count == asm_product_formula(n) == expected[n - 1]:
            bad.append((n, count))
    elapsed = time.perf_counter() - start
    if elapsed >= 120:
        bad.append(f"took {elapsed:.1f}s")
    record(1, "enumeration matches the product formula for n=1..7", bad, f"{elapsed:.2f}s")


def test_criterion_02_quad_round_trip():
    # every division inside the build is exact or raises
    st = RecursionState.build(6)
    bad = [n for n in range(2, 7) if recur_quad(n, st) != genfun.zqua(n) or st.quad[n] != genfun.zqua(n)]
    record(2, "recursive quad function equals enumeration for n=2..6", bad)


def test_criterion_03_recursion_cascade():
    bad = []
    for n in range(2, 7):
        lower = RecursionState.from_brute(n - 1)
        same = RecursionState.from_brute(n)
        got = {
            "adj": recur_adj(n, lower)[0], "adjAlt": recur_adj(n, lower)[1],
            "single": sum(c * genfun.var("z") ** k for k, c in enumerate(recur_single(n, lower))),
            "unrefined": recur_unrefined(n, lower),
            "opp": recur_opp(n, same), "tri": recur_tri(n, same),
        }
        for kind, poly in got.items():
            want = genfun.brute_specialized(kind, n)
            if n <= 5 and poly != want:
                bad.append((kind, n))
            if poly.subs(UNITY) != want.subs(UNITY):
                bad.append((kind, n, "x=y=1"))
    more, count = checks([("adjacent-pair", range(1, 6)), ("adjacent-symmetry", range(1, 6)),
                          ("triple-relation", range(2, 6))])
    record(3, "cascade of recursions equals enumeration; adjacent relations vanish",
           bad + more, f"{count} catalog checks")


def test_criterion_04_closed_forms():
    ids = [("permutation-case", upto("permutation-case", 6)),
           ("free-fermion-case", upto("free-fermion-case", 6)),
           ("free-fermion-quadratic", upto("free-fermion-quadratic", 6)),
           ("free-fermion-adjacent-sum", upto("free-fermion-adjacent-sum", 6))]
    for cid in ("opposite-unity", "unity-quad", "unity-triple", "opposite-determinant",
                "refined-recursions", "singly-refined-linear", "refined-identities",
                "product-formulas", "hypergeometric", "corner-free-quad", "opposite-product"):
        ids.append((cid, upto(cid, 6)))
    for cid in ("opposite-schur", "tableau-count"):
        ids.append((cid, upto(cid, 5)))
    bad, count = checks(ids)
    record(4, "permutation, free-fermion and x=y=1 closed forms", bad, f"{count} checks")


def test_criterion_05_kmatrix_determinants():
    bad, count = checks([("kmatrix-determinants", range(1, 6))])
    record(5, "K-matrix determinants give opposite, single and unrefined functions", bad,
           f"{count} checks")


def test_criterion_06_sixvertex_dictionary():
    assert IK_POINTS == 30
    bad, count = checks([("ik-determinant", range(2, 6)),
                         ("desnanot-jacobi-pf", range(2, 5)),
                         ("asm-dictionary", range(2, 5)),
                         ("multirow-bazin-pf", range(1, 5))])
    record(6, "IK determinant, quadratic and multirow partition-function identities", bad,
           f"{count} checks, {IK_POINTS} points per size for IK")


def test_criterion_07_special_points():
    bad, count = checks([("free-fermion-point", range(1, 5)),
                         ("combinatorial-point", range(1, 5))])
    record(7, "free-fermion and combinatorial point formulas with swap symmetry", bad,
           f"{count} checks")


def test_criterion_08_multirow_determinant():
    bad, count = checks([("multirow-determinant", range(1, 6)),
                         ("multirow-minors", range(1, 6))])
    record(8, "multirow determinant identity symbolically, minor identity at seeded points", bad,
           f"{count} checks")


def test_criterion_09_lambda_determinant():
    bad, count = checks([("lambda-routes", [3, 4]), ("lambda-zpower", [4])])
    record(9, "lambda-determinant routes agree; z-power matrix gives the quadratic relation",
           bad, f"{count} checks")


def _timed_verify(max_n: int):
    env = dict(os.environ)
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "asmgen", "verify", "--suite", "all",
                           "--max-n", str(max_n)], capture_output=True, text=True, env=env)
    elapsed = time.perf_counter() - start
    summary = json.loads(proc.stdout)["summary"] if proc.returncode in (0, 1) else {}
    return proc.returncode, elapsed, summary


@pytest.mark.slow
def test_criterion_10_full_suite_timing():
    bad = []
    code4, t4, s4 = _timed_verify(4)
    if code4 != 0 or t4 >= 60:
        bad.append(f"max-n 4: exit {code4}, {t4:.1f}s, {s4}")
    code5, t5, s5 = _timed_verify(5)
    if code5 != 0 or t5 >= 600:
        bad.append(f"max-n 5: exit {code5}, {t5:.1f}s, {s5}")
    record(10, "full verify suite within time limits", bad,
           f"max-n 4: {t4:.1f}s {s4.get('pass')} passed; max-n 5: {t5:.1f}s {s5.get('pass')} passed")
