"""Command-line harness: tables, generating functions and the identity catalog.

Exit status is 0 when everything requested passed, 1 when a check failed
and 2 for configuration errors.  Output is deterministic for a given
command line; wall times appear only with ``--timing``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import asmcore, catalog, closedform, genfun
from .errors import CacheCorrupt, ConfigError
from .exactmath import to_json_obj
from .recursion import RecursionState

FORMATS = ("json", "csv", "text")
GENFUN_KINDS = ("quad", "quadAlt", "tri", "adj", "adjAlt", "opp", "single", "unrefined",
                "general", "Y", "X", "multiRow")
CLOSEDFORM_GROUPS = {
    "perm": ["permutation-case"],
    "ff": ["free-fermion-case", "free-fermion-quadratic", "free-fermion-adjacent-sum",
           "free-fermion-multirow", "lambda-zpower"],
    "unity": ["product-formulas", "refined-identities", "refined-recursions",
              "singly-refined-linear", "hypergeometric", "opposite-unity",
              "opposite-determinant", "unity-quad", "unity-triple", "corner-free-quad",
              "opposite-schur", "tableau-count"],
    "kdet": ["kmatrix-determinants", "opposite-product"],
    "dpp": ["dpp-products"],
}
SIXVERTEX_CHECKS = {
    "ik": "ik-determinant",
    "djik": "desnanot-jacobi-pf",
    "dictionary": "asm-dictionary",
    "bazin": "multirow-bazin-pf",
    "freefermion": "free-fermion-point",
    "combinatorial": "combinatorial-point",
}
MAX_SEED = 2 ** 64


@dataclass
class RunConfig:
    command: str
    max_n: int
    seed: int = 0
    suite: str = "all"
    fmt: str = "json"
    cache: Path | None = None

    def validate(self):
        if self.max_n < 1:
            raise ConfigError("--n/--max-n must be at least 1")
        if not 0 <= self.seed < MAX_SEED:
            raise ConfigError("--seed must be an unsigned 64-bit integer")
        if self.fmt not in FORMATS:
            raise ConfigError(f"--format must be one of {', '.join(FORMATS)}")


# cache

def open_cache(path: Path | None) -> genfun.GenFunTable | None:
    """Load a cache file; any entry failing its spot check discards the
    whole file."""
    if path is None:
        return None
    table = genfun.GenFunTable(path)
    if table.discarded:
        print(f"warning: {CacheCorrupt.__name__}: discarding cache {path} "
              f"(bad entries: {', '.join(table.discarded)})", file=sys.stderr)
        table = genfun.GenFunTable(None)
        table.path = Path(path)
    for key, poly in table._store.items():
        kind, n, params = genfun._parse_key(key)
        if not params and kind in genfun._DIRECT:
            genfun._FOLD_CACHE.setdefault((kind, n), poly)
    return table


def save_cache(table: genfun.GenFunTable | None):
    if table is None:
        return
    for (kind, n), poly in sorted(genfun._FOLD_CACHE.items()):
        if (kind, n) not in table:
            table.put(kind, n, poly)
    table.save()


# output helpers

def _emit(fmt: str, payload: dict, rows: list[dict], columns: list[str], text_lines: list[str]):
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=1))
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
        w.writeheader()
        for r in rows:
            w.writerow(r)
        sys.stdout.write(buf.getvalue())
    else:
        print("\n".join(text_lines))


def _poly_out(fmt: str, poly, meta: dict):
    if fmt == "json":
        print(json.dumps({**meta, "poly": to_json_obj(poly)}, sort_keys=True, indent=1))
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(list(poly.vars) + ["coeff"])
        for exps, c in poly.terms():
            w.writerow(list(exps) + [c])
        sys.stdout.write(buf.getvalue())
    else:
        print(poly)


# catalog runs

def _run_one(args: tuple) -> dict:
    ident, n, seed, dump, timing = args
    return catalog.run_check(ident, n, seed).as_dict(dump, timing)


def run_checks(ids: list[str], max_n: int, seed: int, dump: bool = False, timing: bool = False,
               jobs: int = 1, only_n: int | None = None) -> list[dict]:
    reg = catalog.load_all()
    tasks = []
    for ident in ids:
        entry = reg[ident]
        sizes = [only_n] if only_n is not None else list(catalog.sizes(entry, max_n))
        tasks += [(ident, n, seed, dump, timing) for n in sizes]
    runnable = [t for t in tasks if t[1] >= reg[t[0]].min_n]
    if jobs > 1 and runnable:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            done = iter(list(pool.map(_run_one, runnable)))
    else:
        done = (_run_one(t) for t in runnable)
    out = []
    for t in tasks:
        if t[1] < reg[t[0]].min_n:
            out.append({"check": t[0], "n": t[1], "status": "skipped", "residual_terms": 0})
        else:
            out.append(next(done))
    return out


def _report(command: str, results: list[dict], meta: dict, fmt: str) -> int:
    summary = {s: sum(1 for r in results if r["status"] == s) for s in ("pass", "fail", "skipped")}
    payload = {"command": command, **meta, "results": results, "summary": summary}
    lines = []
    for r in results:
        extra = f" residual_terms={r['residual_terms']}" if r["status"] == "fail" else ""
        if "error" in r:
            extra += f" error={r['error']}"
        if "seconds" in r:
            extra += f" {r['seconds']:.3f}s"
        lines.append(f"{r['status'].upper():7s} {r['check']} n={r['n']}{extra}")
        for res in r.get("residual", []):
            lines.append(f"        residual: {res}")
    lines.append(f"{summary['pass']} passed, {summary['fail']} failed, {summary['skipped']} skipped")
    _emit(fmt, payload, results, ["check", "n", "status", "residual_terms"], lines)
    return 1 if summary["fail"] else 0


# commands

def cmd_enumerate(a, cfg: RunConfig) -> int:
    asms = list(asmcore.enumerate_asms(cfg.max_n))
    rows = [{"index": i, "matrix": " / ".join(" ".join(map(str, r)) for r in m.entries)}
            for i, m in enumerate(asms)]
    _emit(cfg.fmt, {"n": cfg.max_n, "count": len(asms), "asms": [[list(r) for r in m.entries] for m in asms]},
          rows, ["index", "matrix"], ["\n\n".join(asmcore.format_asm(m) for m in asms)])
    return 0


def cmd_stats(a, cfg: RunConfig) -> int:
    cols = ["index", "nu", "mu", "rhoT", "rhoR", "rhoB", "rhoL"]
    rows = []
    for i, m in enumerate(asmcore.enumerate_asms(cfg.max_n)):
        s = asmcore.asm_stats(m)
        rows.append({"index": i, "nu": s.nu, "mu": s.mu, "rhoT": s.rhoT, "rhoR": s.rhoR,
                     "rhoB": s.rhoB, "rhoL": s.rhoL})
    lines = [" ".join(str(r[c]) for c in cols) for r in rows]
    _emit(cfg.fmt, {"n": cfg.max_n, "stats": rows}, rows, cols, [" ".join(cols)] + lines)
    return 0


def _parse_params(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError as exc:
        raise ConfigError(f"bad --params {text!r}") from exc


def cmd_genfun(a, cfg: RunConfig) -> int:
    if a.kind not in GENFUN_KINDS:
        raise ConfigError(f"unknown --kind {a.kind!r}")
    params = _parse_params(a.params)
    table = open_cache(cfg.cache) or genfun.GenFunTable()
    try:
        if a.kind == "Y":
            poly = genfun.yfun(cfg.max_n)
        else:
            poly = table.get(a.kind, cfg.max_n, params)
    except (ValueError, IndexError) as exc:
        raise ConfigError(str(exc)) from exc
    if cfg.cache:
        save_cache(table)
    _poly_out(cfg.fmt, poly, {"kind": a.kind, "n": cfg.max_n, "params": list(params)})
    return 0


def cmd_recur(a, cfg: RunConfig) -> int:
    kinds = {"quad": "quad", "adj": "adj", "adjAlt": "adj_alt", "single": "single",
             "unrefined": "unrefined"}
    if a.kind not in kinds:
        raise ConfigError(f"--kind for recur must be one of {', '.join(kinds)}")
    st = RecursionState.build(cfg.max_n)
    poly = getattr(st, kinds[a.kind])[cfg.max_n]
    brute = genfun.brute_specialized(a.kind, cfg.max_n)
    ok = (poly - brute).is_zero()
    _poly_out(cfg.fmt, poly, {"kind": a.kind, "n": cfg.max_n, "matches_enumeration": ok})
    return 0 if ok else 1


def cmd_closedform(a, cfg: RunConfig) -> int:
    if a.which not in CLOSEDFORM_GROUPS:
        raise ConfigError(f"--which must be one of {', '.join(CLOSEDFORM_GROUPS)}")
    ids = CLOSEDFORM_GROUPS[a.which]
    results = run_checks(ids, cfg.max_n, cfg.seed, a.dump_residual, a.timing, only_n=cfg.max_n)
    return _report("closedform", results, {"which": a.which, "n": cfg.max_n, "seed": cfg.seed}, cfg.fmt)


def cmd_sixvertex(a, cfg: RunConfig) -> int:
    if a.check not in SIXVERTEX_CHECKS:
        raise ConfigError(f"--check must be one of {', '.join(SIXVERTEX_CHECKS)}")
    ident = catalog.load_all()[SIXVERTEX_CHECKS[a.check]]
    n = cfg.max_n
    if n < ident.min_n:
        raise ConfigError(f"{a.check} needs n >= {ident.min_n}")
    residuals = ident.residuals(n, cfg.seed)
    failures = [{"index": i, "residual": str(r)} for i, r in enumerate(residuals) if not catalog.is_zero(r)]
    payload = {"check": a.check, "n": n, "seed": cfg.seed, "points": len(residuals), "failures": failures}
    rows = [{"check": a.check, "n": n, "points": len(residuals), "failures": len(failures)}]
    text = [f"{'PASS' if not failures else 'FAIL'} {a.check} n={n} points={len(residuals)} "
            f"failures={len(failures)}"]
    _emit(cfg.fmt, payload, rows, ["check", "n", "points", "failures"], text)
    return 1 if failures else 0


def cmd_tables(a, cfg: RunConfig) -> int:
    sizes = [cfg.max_n] if a.n is not None else list(range(1, cfg.max_n + 1))
    rows = []
    for n in sizes:
        if a.refined:
            nums = closedform.product_formulas(n)
            rows += [{"n": n, "k": k, "value": v} for k, v in enumerate(nums.single)]
        else:
            rows.append({"n": n, "k": "", "value": closedform.asm_number(n)})
    lines = [f"{r['n']},{r['k']},{r['value']}" for r in rows]
    _emit(cfg.fmt, {"refined": a.refined, "rows": rows}, rows, ["n", "k", "value"], lines)
    return 0


def cmd_verify(a, cfg: RunConfig) -> int:
    try:
        if a.identity:
            reg = catalog.load_all()
            missing = [i for i in a.identity if i not in reg]
            if missing:
                raise ConfigError(f"unknown identity {', '.join(missing)}")
            ids = list(a.identity)
        else:
            ids = catalog.ids_for_suite(cfg.suite)
    except KeyError as exc:
        raise ConfigError(f"unknown suite {cfg.suite!r}; choose from all, "
                          f"{', '.join(catalog.suites())}") from exc
    table = open_cache(cfg.cache)
    results = run_checks(ids, cfg.max_n, cfg.seed, a.dump_residual, a.timing, jobs=a.jobs)
    save_cache(table)
    return _report("verify", results, {"suite": cfg.suite, "max_n": cfg.max_n, "seed": cfg.seed}, cfg.fmt)


COMMANDS = {
    "enumerate": cmd_enumerate,
    "stats": cmd_stats,
    "genfun": cmd_genfun,
    "recur": cmd_recur,
    "closedform": cmd_closedform,
    "sixvertex": cmd_sixvertex,
    "tables": cmd_tables,
    "verify": cmd_verify,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--n", type=int, help="size")
    common.add_argument("--max-n", type=int, help="largest size")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=FORMATS, default=None)
    common.add_argument("--cache", type=Path, help="generating-function cache file (JSON)")
    common.add_argument("--timing", action="store_true", help="include wall times")
    common.add_argument("--dump-residual", action="store_true",
                        help="print nonzero residuals of failing checks")

    p = _Parser(prog="asmgen", description="ASM generating functions and identity checks")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("enumerate", parents=[common])
    sub.add_parser("stats", parents=[common])
    g = sub.add_parser("genfun", parents=[common])
    g.add_argument("--kind", default="quad")
    g.add_argument("--params", help="comma-separated rows for multiRow, m for X")
    r = sub.add_parser("recur", parents=[common])
    r.add_argument("--kind", default="quad")
    c = sub.add_parser("closedform", parents=[common])
    c.add_argument("--which", required=True)
    s = sub.add_parser("sixvertex", parents=[common])
    s.add_argument("--check", required=True)
    t = sub.add_parser("tables", parents=[common])
    t.add_argument("--refined", action="store_true")
    v = sub.add_parser("verify", parents=[common])
    v.add_argument("--suite", default="all")
    v.add_argument("--identity", action="append", help="run only this identity (repeatable)")
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    return p


DEFAULT_FORMAT = {"enumerate": "text", "stats": "text", "tables": "csv"}


def main(argv: list[str] | None = None) -> int:
    try:
        a = build_parser().parse_args(argv)
        size = a.n if a.n is not None else a.max_n
        if size is None:
            size = 4
        cfg = RunConfig(a.command, size, a.seed, getattr(a, "suite", "all"),
                        a.format or DEFAULT_FORMAT.get(a.command, "json"), a.cache)
        cfg.validate()
        if getattr(a, "jobs", 1) < 1:
            raise ConfigError("--jobs must be positive")
        return COMMANDS[a.command](a, cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
