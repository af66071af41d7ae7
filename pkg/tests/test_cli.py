import json

import pytest

from asmgen.cli import main
from asmgen.exactmath import from_json_obj, var


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate_text(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2")
    assert code == 0
    assert out.strip().split("\n\n") == ["1 0\n0 1", "0 1\n1 0"]


def test_stats_csv(capsys):
    code, out, _ = run(capsys, "stats", "--n", "3", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("index,nu,mu")
    assert len(lines) == 8


def test_genfun_json(capsys):
    code, out, _ = run(capsys, "genfun", "--kind", "quad", "--n", "2")
    data = json.loads(out)
    X = var("x")
    assert code == 0
    assert from_json_obj(data["poly"]) == 1 + X * var("z1") * var("z2") * var("z3") * var("z4")


def test_genfun_multirow_params(capsys):
    code, out, _ = run(capsys, "genfun", "--kind", "multiRow", "--n", "3", "--params", "1,3")
    assert code == 0 and json.loads(out)["params"] == [1, 3]


@pytest.mark.parametrize("kind", ["quad", "adj", "adjAlt", "single", "unrefined"])
def test_recur_matches(capsys, kind):
    code, out, _ = run(capsys, "recur", "--kind", kind, "--n", "4")
    assert code == 0 and json.loads(out)["matches_enumeration"] is True


def test_tables_refined(capsys):
    code, out, _ = run(capsys, "tables", "--refined", "--n", "5")
    assert code == 0
    assert "5,0,42" in out.splitlines()


@pytest.mark.parametrize("which", ["perm", "ff", "unity", "kdet", "dpp"])
def test_closedform_groups(capsys, which):
    code, out, _ = run(capsys, "closedform", "--which", which, "--n", "4")
    data = json.loads(out)
    assert code == 0 and data["summary"]["fail"] == 0


def test_sixvertex_report(capsys):
    code, out, _ = run(capsys, "sixvertex", "--check", "ik", "--n", "3", "--seed", "9")
    data = json.loads(out)
    assert code == 0
    assert data["failures"] == [] and data["seed"] == 9


def test_verify_is_deterministic(capsys):
    args = ("verify", "--suite", "closedform", "--max-n", "3", "--seed", "4")
    first = run(capsys, *args)
    second = run(capsys, *args)
    parallel = run(capsys, *args, "--jobs", "2")
    assert first == second
    assert first[1] == parallel[1]
    assert json.loads(first[1])["summary"]["fail"] == 0


def test_verify_timing_and_csv(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "adjacent-pair", "--n", "3",
                       "--format", "csv", "--timing")
    assert code == 0
    assert out.splitlines()[0].split(",")[:3] == ["check", "n", "status"]


@pytest.mark.parametrize("argv", [
    ("verify", "--identity", "nope", "--n", "3"),
    ("enumerate", "--n", "0"),
    ("verify", "--suite", "nope"),
    ("genfun", "--kind", "bogus", "--n", "3"),
    ("verify", "--seed", "-1"),
    ("frobnicate",),
])
def test_config_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_cache_round_trip_and_poison(capsys, tmp_path):
    cache = tmp_path / "cache.json"
    args = ("verify", "--suite", "genfun", "--max-n", "3", "--cache", str(cache))
    clean = run(capsys, *args)
    assert cache.exists()
    data = json.loads(cache.read_text())
    key = sorted(data)[0]
    data[key]["terms"][0]["coeff"] = "12345"
    cache.write_text(json.dumps(data))
    poisoned = run(capsys, *args)
    assert poisoned[0] == 0 and poisoned[1] == clean[1]
    assert "CacheCorrupt" in poisoned[2]
