"""Registry of verifiable identities.

Each entry computes a list of residuals at a size n (and, for checks at
seeded points, a seed).  An entry passes when every residual is zero.
"""

from __future__ import annotations

import inspect
import time
from dataclasses import dataclass
from typing import Callable, Iterable

from .exactmath import SparsePoly


@dataclass(frozen=True)
class Identity:
    id: str
    suite: str
    min_n: int
    max_n: int
    fn: Callable
    description: str

    def residuals(self, n: int, seed: int = 0) -> list:
        if "seed" in inspect.signature(self.fn).parameters:
            out = self.fn(n, seed=seed)
        else:
            out = self.fn(n)
        if isinstance(out, (list, tuple)):
            return list(out)
        return [out]


REGISTRY: dict[str, Identity] = {}


def identity(id: str, suite: str, min_n: int = 1, max_n: int = 5, description: str = ""):
    """Decorator registering a residual function."""

    def wrap(fn):
        if id in REGISTRY:
            raise ValueError(f"duplicate identity id {id!r}")
        doc = description or " ".join((fn.__doc__ or "").strip().split("\n\n")[0].split())
        REGISTRY[id] = Identity(id, suite, min_n, max_n, fn, doc)
        return fn

    return wrap


def is_zero(value) -> bool:
    if isinstance(value, SparsePoly):
        return value.is_zero()
    if isinstance(value, bool):
        return value
    return value == 0


def residual_size(value) -> int:
    """Term count of a residual (1 for a nonzero scalar, 0 for zero)."""
    if isinstance(value, SparsePoly):
        return len(value)
    return 0 if is_zero(value) else 1


@dataclass
class CheckResult:
    check: str
    n: int
    status: str  # pass, fail or skipped
    residual_terms: int
    seconds: float
    residuals: list | None = None
    error: str | None = None

    def as_dict(self, dump_residual: bool = False, timing: bool = False) -> dict:
        d = {"check": self.check, "n": self.n, "status": self.status,
             "residual_terms": self.residual_terms}
        if self.error:
            d["error"] = self.error
        if dump_residual and self.residuals and self.status == "fail":
            d["residual"] = [str(r) for r in self.residuals if not is_zero(r)]
        if timing:
            d["seconds"] = round(self.seconds, 3)
        return d


def load_all() -> dict[str, Identity]:
    """Import every module that registers identities."""
    from . import closedform, genfun_identities, recursion, sixvertex  # noqa: F401

    return REGISTRY


def run_check(identity_id: str, n: int, seed: int = 0) -> CheckResult:
    load_all()
    if identity_id not in REGISTRY:
        raise KeyError(identity_id)
    ident = REGISTRY[identity_id]
    start = time.perf_counter()
    if n < ident.min_n:
        return CheckResult(identity_id, n, "skipped", 0, 0.0)
    try:
        res = ident.residuals(n, seed)
    except ArithmeticError as exc:  # inexact division is a failure, not a crash
        return CheckResult(identity_id, n, "fail", 0, time.perf_counter() - start,
                           error=f"{type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - start
    size = sum(residual_size(r) for r in res)
    status = "pass" if all(is_zero(r) for r in res) else "fail"
    return CheckResult(identity_id, n, status, size, elapsed, residuals=res)


def ids_for_suite(suite: str) -> list[str]:
    load_all()
    if suite == "all":
        return list(REGISTRY)
    found = [k for k, v in REGISTRY.items() if v.suite == suite]
    if not found:
        raise KeyError(suite)
    return found


def suites() -> list[str]:
    load_all()
    return sorted({v.suite for v in REGISTRY.values()})


def sizes(ident: Identity, max_n: int) -> Iterable[int]:
    return range(ident.min_n, min(max_n, ident.max_n) + 1)
