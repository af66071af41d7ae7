"""Brute-force generating functions, folded from the enumeration kernel.

Variable conventions: x marks nu, y marks mu, z1..z4 mark the top, right,
bottom and left boundary statistics, z41, z12, z23, z34 mark empty corners,
z is the single boundary variable, and w1.. mark per-row -1 counts.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Mapping, Sequence

from . import kernels
from .errors import CacheCorrupt, DistinctnessViolated, IndexOutOfRange
from .exactmath import SparsePoly, det_exact, divexact, from_json_obj, to_json_obj, var

X, Y = var("x"), var("y")
Z1, Z2, Z3, Z4 = (var(f"z{i}") for i in range(1, 5))

KINDS = ("general", "quad", "quadAlt", "tri", "adj", "adjAlt", "opp", "single",
         "unrefined", "multiRow", "X", "Y")

QUAD_VARS = ("x", "y", "z1", "z2", "z3", "z4")
GENERAL_VARS = QUAD_VARS + ("z41", "z12", "z23", "z34")


@lru_cache(maxsize=None)
def boundary_histogram(n: int) -> dict[tuple, int]:
    return kernels.fold_boundary(n)


@lru_cache(maxsize=None)
def full_histogram(n: int) -> dict[tuple, int]:
    return kernels.fold_full(n)


def _fold(n: int, vars: Sequence[str], exps_of) -> SparsePoly:
    terms: dict[tuple, int] = {}
    for key, count in boundary_histogram(n).items():
        e = exps_of(*key)
        terms[e] = terms.get(e, 0) + count
    return SparsePoly(terms, vars)


def brute_general(n: int, corners: Mapping[str, object] | None = None) -> SparsePoly:
    """Sum of x^nu y^mu z1^rhoT z2^rhoR z3^rhoB z4^rhoL times
    z41^(1-A11) z12^(1-A1n) z23^(1-Ann) z34^(1-An1) over ASM(n).

    ``corners`` optionally substitutes values for the corner variables.
    """
    p = _fold(n, GENERAL_VARS, lambda nu, mu, t, r, b, l, c11, c1n, cnn, cn1:
              (nu, mu, t, r, b, l, 1 - c11, 1 - c1n, 1 - cnn, 1 - cn1))
    return p.subs(corners) if corners else p


_DIRECT = {
    "quad": (QUAD_VARS, lambda n: lambda nu, mu, t, r, b, l, *c: (nu, mu, t, r, b, l)),
    "quadAlt": (QUAD_VARS, lambda n: lambda nu, mu, t, r, b, l, *c:
                (nu, mu, t, n - 1 - r, b, n - 1 - l)),
    "tri": (("x", "y", "z1", "z2", "z3"), lambda n: lambda nu, mu, t, r, b, l, *c: (nu, mu, t, b, l)),
    "adj": (("x", "y", "z1", "z2"), lambda n: lambda nu, mu, t, r, b, l, *c: (nu, mu, t, l)),
    "adjAlt": (("x", "y", "z1", "z2"), lambda n: lambda nu, mu, t, r, b, l, *c: (nu, mu, t, r)),
    "opp": (("x", "y", "z1", "z2"), lambda n: lambda nu, mu, t, r, b, l, *c: (nu, mu, t, b)),
    "single": (("x", "y", "z"), lambda n: lambda nu, mu, t, *rest: (nu, mu, t)),
    "unrefined": (("x", "y"), lambda n: lambda nu, mu, *rest: (nu, mu)),
}


def quad_specialize(kind: str, quad: SparsePoly, n: int) -> SparsePoly:
    """Obtain a lower-refinement function from the quadruply refined one."""
    if kind == "quad":
        return quad
    if kind == "quadAlt":
        return quad.monomial_map({"z2": {"z2": -1}, "z4": {"z4": -1}},
                                 {"z2": n - 1, "z4": n - 1})
    if kind == "tri":
        return quad.subs({"z2": 1}).rename({"z3": "z2", "z4": "z3"})
    if kind == "adj":
        return quad.subs({"z2": 1, "z3": 1}).rename({"z4": "z2"})
    if kind == "adjAlt":
        return quad.subs({"z3": 1, "z4": 1})
    if kind == "opp":
        return quad.subs({"z2": 1, "z4": 1}).rename({"z3": "z2"})
    if kind == "single":
        return quad.subs({"z2": 1, "z3": 1, "z4": 1}).rename({"z1": "z"})
    if kind == "unrefined":
        return quad.subs({"z1": 1, "z2": 1, "z3": 1, "z4": 1})
    raise ValueError(f"no quad specialisation for kind {kind!r}")


def brute_specialized(kind: str, n: int, route: str = "fold") -> SparsePoly:
    """Brute-force generating function of the given kind.

    ``route="fold"`` folds the statistics directly; ``route="subs"``
    specialises the brute quadruply refined function instead.
    """
    if kind not in _DIRECT:
        if kind == "general":
            return brute_general(n)
        if kind == "Y":
            return yfun_brute(n)
        raise ValueError(f"unknown or parametrised kind {kind!r}")
    if n == 0:
        return SparsePoly.constant(1, _DIRECT[kind][0])
    if route == "subs":
        return quad_specialize(kind, brute_specialized("quad", n), n)
    vars, make = _DIRECT[kind]
    return _cached_fold(kind, n, vars, make)


_FOLD_CACHE: dict[tuple[str, int], SparsePoly] = {}


def _cached_fold(kind, n, vars, make) -> SparsePoly:
    key = (kind, n)
    if key not in _FOLD_CACHE:
        _FOLD_CACHE[key] = _fold(n, vars, make(n))
    return _FOLD_CACHE[key]


def zqua(n): return brute_specialized("quad", n)
def zqua_alt(n): return brute_specialized("quadAlt", n)
def ztri(n): return brute_specialized("tri", n)
def zadj(n): return brute_specialized("adj", n)
def zadj_alt(n): return brute_specialized("adjAlt", n)
def zopp(n): return brute_specialized("opp", n)
def zsingle(n): return brute_specialized("single", n)


def zunref(n: int) -> SparsePoly:
    """Unrefined function; Z_0 is taken to be 1."""
    return brute_specialized("unrefined", n) if n >= 1 else SparsePoly.constant(1, ("x", "y"))


# multi-row functions

def brute_multirow(n: int, rows: Sequence[int], columns: bool = False) -> SparsePoly:
    """Sum of x^nu y^(mu - sum mu^row k_i) prod z_i^(nu^row k_i) w_i^(mu^row k_i).

    ``rows`` are 1-based and strictly increasing.  With ``columns=True`` the
    column statistics are used instead.
    """
    rows = list(rows)
    if any(not 1 <= k <= n for k in rows) or rows != sorted(set(rows)):
        raise IndexOutOfRange("row indices must satisfy 1 <= k1 < ... < km <= n")
    m = len(rows)
    vars = ("x", "y") + tuple(f"z{i + 1}" for i in range(m)) + tuple(f"w{i + 1}" for i in range(m))
    off = 10 + (2 * n if columns else 0)
    terms: dict[tuple, int] = {}
    for key, count in full_histogram(n).items():
        nus = [key[off + k - 1] for k in rows]
        mus = [key[off + n + k - 1] for k in rows]
        e = (key[0], key[1] - sum(mus), *nus, *mus)
        terms[e] = terms.get(e, 0) + count
    return SparsePoly(terms, vars)


def single_in(n: int, name: str) -> SparsePoly:
    """Z_n(x,y; name); Z_0 is 1."""
    if n == 0:
        return SparsePoly.constant(1, ("x", "y"))
    return zsingle(n).rename({"z": name})


def _vandermonde(zs: Sequence) -> object:
    out = 1
    for i in range(len(zs)):
        for j in range(i + 1, len(zs)):
            out = out * (zs[i] - zs[j])
    return out


def xfun_matrix(n: int, zs: Sequence, single=single_in, unref=zunref):
    """Entries z_i^(j-1) (z_i - 1)^(m-j) Z_{n-j+1}(x,y;z_i) (1-based i, j)."""
    m = len(zs)
    return [[zs[i] ** j * (zs[i] - 1) ** (m - 1 - j) * single(n - j, i)
             for j in range(m)] for i in range(m)]


def xfun(n: int, m: int) -> SparsePoly:
    """X_n(x,y; z1..zm) as a polynomial, by exact division."""
    if not 0 <= m <= n:
        raise IndexOutOfRange("need 0 <= m <= n")
    return _xfun_cached(n, m)


@lru_cache(maxsize=None)
def _xfun_cached(n: int, m: int) -> SparsePoly:
    if m == 0:
        return zunref(n)
    zs = [var(f"z{i + 1}") for i in range(m)]
    mat = xfun_matrix(n, zs, single=lambda k, i: single_in(k, f"z{i + 1}"))
    d = det_exact(mat)
    d = divexact(d, _vandermonde(zs))
    for i in range(1, m):
        d = divexact(d, zunref(n - i))
    return d


def xfun_at(n: int, x, y, zs: Sequence) -> object:
    """Evaluate X_n at a point with pairwise distinct z values."""
    m = len(zs)
    if len(set(zs)) != m:
        raise DistinctnessViolated("z values must be pairwise distinct")
    pt = {"x": x, "y": y}
    if m == 0:
        return zunref(n).evaluate(pt)
    denoms = [zunref(n - i).evaluate(pt) for i in range(1, m)]
    if any(d == 0 for d in denoms):
        # the pointwise quotient is 0/0 here; use the polynomial instead
        return xfun(n, m).evaluate({**pt, **{f"z{i + 1}": z for i, z in enumerate(zs)}})
    mat =[[zs[i] ** j * (zs[i] - 1) ** (m - 1 - j) * single_in(n - j, "z").evaluate({**pt, "z": zs[i]})
            if n - j >= 1 else zs[i] ** j * (zs[i] - 1) ** (m - 1 - j)
            for j in range(m)] for i in range(m)]
    val = det_exact(mat)
    if isinstance(val, int):
        val = Fraction(val)
    val = val / _vandermonde(list(zs))
    for d in denoms:
        val = val / d
    if isinstance(val, Fraction) and val.denominator == 1:
        return val.numerator
    return val


# Y functions

CORNER_NUMERATORS = {
    "z41": Y * Z4 * Z1 - (Z4 - 1) * (Z1 - 1),
    "z12": Y - X * (Z1 - 1) * (Z2 - 1),
    "z23": Y * Z2 * Z3 - (Z2 - 1) * (Z3 - 1),
    "z34": Y - X * (Z3 - 1) * (Z4 - 1),
}


def yfun_brute(n: int) -> SparsePoly:
    """Direct corner-weighted sum defining Y_n(x,y; z1..z4)."""
    brackets = [CORNER_NUMERATORS[k] for k in ("z41", "z12", "z23", "z34")]
    groups: dict[tuple, dict[tuple, int]] = {}
    for (nu, mu, t, r, b, l, c11, c1n, cnn, cn1), count in boundary_histogram(n).items():
        e = (nu, mu + c11 + c1n + cnn + cn1, t + c11 - 1, r + cnn - 1, b + cnn - 1, l + c11 - 1)
        g = groups.setdefault((c11, c1n, cnn, cn1), {})
        g[e] = g.get(e, 0) + count
    total = SparsePoly.constant(0, QUAD_VARS)
    for corners, terms in groups.items():
        part = SparsePoly(terms, QUAD_VARS)
        for c, br in zip(corners, brackets):
            if c == 0:
                part = part * br
        total = total + part
    return total


def yfun_from_general(n: int) -> SparsePoly:
    """y^4 Z^gen_n with the corner variables set to the corner brackets
    divided by their monomial denominators."""
    g = brute_general(n).monomial_map(
        {"z41": {"z41": 1, "y": -1, "z4": -1, "z1": -1},
         "z12": {"z12": 1, "y": -1},
         "z23": {"z23": 1, "y": -1, "z2": -1, "z3": -1},
         "z34": {"z34": 1, "y": -1}},
        {"y": 4})
    return g.subs(CORNER_NUMERATORS)


def yfun(n: int) -> SparsePoly:
    return _yfun_cached(n)


@lru_cache(maxsize=None)
def _yfun_cached(n: int) -> SparsePoly:
    return yfun_brute(n)


def y_two(n: int, a: str, b: str) -> SparsePoly:
    """Y_n(a, b) := Y_n(a, b, 1, 1) written in the variables a, b."""
    return yfun(n).subs({"z3": 1, "z4": 1}).rename({"z1": a, "z2": b})


# coefficients

def coeff_extract(kind: str, n: int, selector: Sequence[int], at_unity: bool = False):
    """Coefficient of z^k (single) or z1^k1 z2^k2 (doubly refined kinds)
    as a polynomial in x, y, or as a number at x = y = 1."""
    if kind == "single":
        (k,) = selector
        if not 0 <= k <= n - 1:
            raise IndexOutOfRange(f"k={k} outside 0..{n - 1}")
        c = zsingle(n).coeff("z", k)
    elif kind in ("adj", "adjAlt", "opp"):
        k1, k2 = selector
        if not (0 <= k1 <= n - 1 and 0 <= k2 <= n - 1):
            raise IndexOutOfRange(f"({k1},{k2}) outside 0..{n - 1}")
        c = brute_specialized(kind, n).coeff("z1", k1).coeff("z2", k2)
    else:
        raise ValueError(f"coefficient extraction not defined for {kind!r}")
    c = c.with_vars(("x", "y"))
    if at_unity:
        return c.subs({"x": 1, "y": 1}).constant_value()
    return c


# memo table with optional JSON persistence

def _table_key(kind: str, n: int, params: Sequence[int] = ()) -> str:
    return f"{kind}{list(params) if params else ''}:{n}"


class GenFunTable:
    """Memoised generating functions keyed by (kind, n), optionally backed
    by a JSON cache file whose entries are spot-checked when loaded."""

    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path else None
        self._store: dict[str, SparsePoly] = {}
        self.discarded: list[str] = []
        if self.path and self.path.exists():
            self._load()

    def compute(self, kind: str, n: int, params: Sequence[int] = ()) -> SparsePoly:
        if kind == "multiRow":
            return brute_multirow(n, params)
        if kind == "X":
            (m,) = params
            return xfun(n, m)
        return brute_specialized(kind, n)

    def get(self, kind: str, n: int, params: Sequence[int] = ()) -> SparsePoly:
        key = _table_key(kind, n, params)
        if key not in self._store:
            self._store[key] = self.compute(kind, n, params)
        return self._store[key]

    def put(self, kind: str, n: int, poly: SparsePoly, params: Sequence[int] = ()):
        self._store[_table_key(kind, n, params)] = poly

    def __contains__(self, item) -> bool:
        kind, n, *rest = item
        return _table_key(kind, n, rest[0] if rest else ()) in self._store

    def __len__(self) -> int:
        return len(self._store)

    def save(self):
        if not self.path:
            return
        data = {k: to_json_obj(p) for k, p in sorted(self._store.items())}
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self.path.write_text(json.dumps(data, sort_keys=True, indent=1))

    def _load(self):
        try:
            data = json.loads(self.path.read_text())
        except (OSError, json.JSONDecodeError):
            self.discarded.append("<file>")
            return
        for key, obj in data.items():
            try:
                poly = from_json_obj(obj)
                kind, n, params = _parse_key(key)
                spot_check(kind, n, poly, params)
            except (CacheCorrupt, KeyError, ValueError, TypeError):
                self.discarded.append(key)
                continue
            self._store[key] = poly


def _parse_key(key: str):
    head, n = key.rsplit(":", 1)
    if "[" in head:
        kind, rest = head.split("[", 1)
        params = tuple(int(v) for v in rest.rstrip("]").split(",") if v.strip())
    else:
        kind, params = head, ()
    return kind, int(n), params


SPOT_POINT = {"x": Fraction(2, 3), "y": Fraction(5, 7), "z": Fraction(3, 11),
              "z1": Fraction(-4, 5), "z2": Fraction(7, 9), "z3": Fraction(11, 13),
              "z4": Fraction(-2, 7), "z41": Fraction(3, 4), "z12": Fraction(-5, 6),
              "z23": Fraction(9, 10), "z34": Fraction(1, 12),
              "w1": Fraction(6, 7), "w2": Fraction(-3, 8), "w3": Fraction(2, 9)}


def spot_check(kind: str, n: int, poly: SparsePoly, params: Sequence[int] = ()):
    """Compare a cached polynomial with a brute-force sum at a fixed point."""
    point = {v: SPOT_POINT[v] for v in poly.vars if v in SPOT_POINT}
    try:
        expected_poly = GenFunTable().compute(kind, n, params)
    except (ValueError, IndexOutOfRange) as exc:
        raise CacheCorrupt(str(exc)) from exc
    point.update({v: SPOT_POINT[v] for v in expected_poly.vars})
    if poly.evaluate(point) != expected_poly.evaluate(point):
        raise CacheCorrupt(f"cached {kind} n={n} fails spot check")
