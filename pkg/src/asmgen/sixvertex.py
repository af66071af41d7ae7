"""Six-vertex model with domain-wall boundary over exact fields.

Spectral parameters are always supplied through square roots: a point
carries U_i, V_j and Q with u_i = U_i^2, v_j = V_j^2 and q = Q^2, so every
half-integer power in the weights is exact.  Values are Fractions for
rational points and CycNum elements at the roots of unity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import prod
from typing import Sequence

from . import asmcore, genfun
from .catalog import identity
from .errors import DegeneratePoint
from .exactmath import I, SQRT3, SQRT_I, SQRT_OMEGA, CycNum, det_exact, binom
from .points import PointSampler

IK_POINTS = 30
POINTS = 4


def _is_zero(v) -> bool:
    return v == 0


@dataclass(frozen=True)
class SpectralPoint:
    """Square roots of the row parameters u, column parameters v and q."""

    root_u: tuple
    root_v: tuple
    root_q: object

    def __post_init__(self):
        if len(self.root_u) != len(self.root_v):
            raise ValueError("need as many row as column parameters")
        if any(_is_zero(w) for w in (*self.root_u, *self.root_v, self.root_q)):
            raise DegeneratePoint("spectral parameters must be nonzero")

    @property
    def n(self) -> int:
        return len(self.root_u)

    @property
    def field(self) -> str:
        vals = (*self.root_u, *self.root_v, self.root_q)
        return "cyclotomic" if any(isinstance(v, CycNum) for v in vals) else "rational"

    @property
    def u(self) -> tuple:
        return tuple(w * w for w in self.root_u)

    @property
    def v(self) -> tuple:
        return tuple(w * w for w in self.root_v)

    def sub(self, rows: Sequence[int], cols: Sequence[int]) -> "SpectralPoint":
        return SpectralPoint(tuple(self.root_u[i] for i in rows),
                             tuple(self.root_v[j] for j in cols), self.root_q)


def abc(U, V, Q) -> tuple:
    """(a, b, c) at u = U^2, v = V^2, q = Q^2."""
    u, v = U * U, V * V
    a = u * Q - v / Q
    b = v * Q - u / Q
    c = (Q * Q - 1 / (Q * Q)) * U * V
    return a, b, c


def weights(p: SpectralPoint, i: int, j: int) -> tuple:
    return abc(p.root_u[i], p.root_v[j], p.root_q)


def crossing_value(U, V, Q):
    """(a^2 + b^2 - c^2) / (ab), which should equal -(q + 1/q)."""
    a, b, c = abc(U, V, Q)
    return (a * a + b * b - c * c) / (a * b)


@lru_cache(maxsize=None)
def _configurations(n: int) -> tuple:
    """Per configuration, the (i, j) cells carrying a, b and c weights."""
    out = []
    for a in asmcore.enumerate_asms(n):
        t = asmcore.asm_to_sixvertex(a).types
        out.append(tuple(tuple((t[i][j] + 1) // 2 - 1 for j in range(n)) for i in range(n)))
    return tuple(out)


def partition_function_brute(p: SpectralPoint):
    """Sum over DWBC configurations of the product of vertex weights."""
    n = p.n
    if n == 0:
        return 1
    w = [[weights(p, i, j) for j in range(n)] for i in range(n)]
    total = 0
    for cfg in _configurations(n):
        term = 1
        for i in range(n):
            row, wr = cfg[i], w[i]
            for j in range(n):
                term = term * wr[j][row[j]]
        total = total + term
    return total


def ik_determinant(p: SpectralPoint):
    """Izergin-Korepin determinant; needs distinct u's, distinct v's and
    nonvanishing a, b."""
    n = p.n
    if n == 0:
        return 1
    u, v = p.u, p.v
    if len(set(u)) != n or len(set(v)) != n:
        raise DegeneratePoint("spectral parameters must be pairwise distinct")
    w = [[weights(p, i, j) for j in range(n)] for i in range(n)]
    if any(_is_zero(a) or _is_zero(b) for row in w for a, b, _ in row):
        raise DegeneratePoint("a weight a or b vanishes")
    num = prod((a * b for row in w for a, b, _ in row), start=1)
    den = prod(((u[i] - u[j]) * (v[j] - v[i]) for i in range(n) for j in range(i + 1, n)), start=1)
    d = det_exact([[c / (a * b) for a, b, c in row] for row in w])
    return num / den * d


def partition_function(p: SpectralPoint, route: str = "auto"):
    if route == "brute":
        return partition_function_brute(p)
    if route == "ik":
        return ik_determinant(p)
    try:
        return ik_determinant(p)
    except DegeneratePoint:
        return partition_function_brute(p)


# seeded points

def _nonzero_weights(us, vs, q) -> bool:
    return all(not _is_zero(x) for U in us for V in vs for x in abc(U, V, q))


def random_point(rng: PointSampler, n: int, root_q=None) -> SpectralPoint:
    """Distinct rational roots; q is drawn too unless supplied."""
    while True:
        q = root_q if root_q is not None else rng.rational()
        if root_q is None and q * q == 1:
            continue
        us = rng.distinct(n)
        vs = rng.distinct(n)
        if len({U * U for U in us}) == n and len({V * V for V in vs}) == n and _nonzero_weights(us, vs, q):
            return SpectralPoint(tuple(us), tuple(vs), q)
        rng.log.append(("rejected", Fraction(0)))


def _random_roots(rng: PointSampler, n: int) -> SpectralPoint:
    """Rational roots only; q is left at a placeholder for the caller to replace."""
    while True:
        us, vs = rng.distinct(n), rng.distinct(n)
        if len({U * U for U in us}) == n and len({V * V for V in vs}) == n:
            return SpectralPoint(tuple(us), tuple(vs), SQRT_I)


@dataclass(frozen=True)
class DictionaryPoint:
    """Roots of r, s, t_1..t_k and q for the specialised assignments."""

    r: object
    s: object
    t: tuple
    q: object

    def ab(self, U, V):
        a, b, _ = abc(U, V, self.q)
        return a, b

    def w(self, U, V):
        return abc(U, V, self.q)


def random_dictionary_point(rng: PointSampler, k: int, root_q=None) -> DictionaryPoint:
    while True:
        q = root_q if root_q is not None else rng.rational()
        if root_q is None and q * q == 1:
            continue
        vals = rng.distinct(k + 2)
        r, s, t = vals[0], vals[1], tuple(vals[2:])
        sq = [x * x for x in vals]
        pool = [r, s, *t]
        if len(set(sq)) == len(sq) and _nonzero_weights(pool, pool, q):
            return DictionaryPoint(r, s, t, q)
        rng.log.append(("rejected", Fraction(0)))


def _params(d: DictionaryPoint) -> dict:
    """x, y and the four boundary z's from the r, s, t_1..t_4 assignment."""
    a, b, c = d.w(d.r, d.s)
    t1, t2, t3, t4 = d.t[:4]
    out = {"x": (a / b) ** 2, "y": (c / b) ** 2}
    for name, (U, V) in {"z1": (t1, d.s), "z2": (d.r, t2), "z3": (t3, d.s), "z4": (d.r, t4)}.items():
        aa, bb, _ = d.w(U, V)
        out[name] = aa * b / (a * bb)
    return out


# identity checks at points

def check_djik(p: SpectralPoint, route: str = "brute") -> list:
    """Residual of the Desnanot-Jacobi quadratic for the partition function."""
    n = p.n
    if n < 2:
        raise ValueError("n >= 2 required")
    Z = lambda rows, cols: partition_function(p.sub(rows, cols), route)  # noqa: E731
    u, v = p.u, p.v
    a1n, b1n, _ = weights(p, 0, n - 1)
    an1, bn1, _ = weights(p, n - 1, 0)
    a11, b11, _ = weights(p, 0, 0)
    ann, bnn, _ = weights(p, n - 1, n - 1)
    full, mid = range(n), range(1, n - 1)
    head, tail = range(n - 1), range(1, n)
    lhs = (u[0] - u[n - 1]) * (v[n - 1] - v[0]) * Z(full, full) * Z(mid, mid)
    rhs = (a1n * b1n * an1 * bn1 * Z(head, head) * Z(tail, tail)
           - a11 * b11 * ann * bnn * Z(head, tail) * Z(tail, head))
    return [lhs - rhs]


def _rows_point(d: DictionaryPoint, n: int, rows: Sequence[int], ts: Sequence) -> SpectralPoint:
    us = [d.r] * n
    for k, t in zip(rows, ts):
        us[k - 1] = t
    return SpectralPoint(tuple(us), (d.s,) * n, d.q)


def check_bazin_pf(d: DictionaryPoint, n: int, rows: Sequence[int], alt_rows: Sequence[int] | None = None) -> list:
    """Multi-row determinant identity for the partition function with rows
    ``rows`` (1-based) carrying t_1..t_m; ``alt_rows`` is a second placement
    that must give the same partition function."""
    m = len(rows)
    ts = d.t[:m]
    a, b, _ = d.w(d.r, d.s)

    def z_rows(size, rws, tt):
        return partition_function_brute(_rows_point(d, size, rws, tt))

    def z_plain(size):
        return partition_function_brute(SpectralPoint((d.r,) * size, (d.s,) * size, d.q))

    lhs = (a * b) ** (m * (m - 1) // 2) * z_rows(n, rows, ts)
    for i in range(m):
        for j in range(i + 1, m):
            lhs = lhs * (ts[i] ** 2 - ts[j] ** 2)
    for i in range(1, m):
        lhs = lhs * z_plain(n - i)
    mat = []
    for i in range(m):
        ai, bi, _ = d.w(ts[i], d.s)
        mat.append([(ai * bi) ** j * (ts[i] ** 2 - d.r ** 2) ** (m - 1 - j) * z_rows(n - j, [1], [ts[i]])
                    for j in range(m)])
    out = [lhs - det_exact(mat)]
    if alt_rows is not None:
        out.append(z_rows(n, rows, ts) - z_rows(n, alt_rows, ts))
        # the single distinguished row may also sit last
        out += [z_rows(n - j, [1], [ts[i]]) - z_rows(n - j, [n - j], [ts[i]])
                for i in range(m) for j in range(m)]
    return out


def check_dictionary(n: int, d: DictionaryPoint, rows: Sequence[Sequence[int]] = ()) -> list:
    """Partition function at the specialised assignment against the ASM
    generating functions (general, corner and multi-row versions)."""
    t1, t2, t3, t4 = d.t[:4]
    r, s = d.r, d.s
    a, b, c = d.w(r, s)
    w = d.w
    pf = partition_function_brute(SpectralPoint((t1,) + (r,) * (n - 2) + (t3,),
                                                (t4,) + (s,) * (n - 2) + (t2,), d.q))
    pt = _params(d)
    bt = w(t1, s)[1] * w(r, t2)[1] * w(t3, s)[1] * w(r, t4)[1]
    corners = {
        "z41": a * w(t1, t4)[0] * w(t1, s)[2] * w(r, t4)[2] / (w(t1, s)[0] * w(r, t4)[0] * c * w(t1, t4)[2]),
        "z12": b * w(t1, t2)[1] * w(t1, s)[2] * w(r, t2)[2] / (w(t1, s)[1] * w(r, t2)[1] * c * w(t1, t2)[2]),
        "z23": a * w(t3, t2)[0] * w(t3, s)[2] * w(r, t2)[2] / (w(t3, s)[0] * w(r, t2)[0] * c * w(t3, t2)[2]),
        "z34": b * w(t3, t4)[1] * w(t3, s)[2] * w(r, t4)[2] / (w(t3, s)[1] * w(r, t4)[1] * c * w(t3, t4)[2]),
    }
    general = genfun.brute_general(n).evaluate({**pt, **corners})
    rhs = (b ** (n * (n - 1)) * c ** n * (bt / b ** 4) ** (n - 1)
           * w(t1, t4)[2] * w(t1, t2)[2] * w(t3, t2)[2] * w(t3, t4)[2]
           / (w(t1, s)[2] * w(r, t2)[2] * w(t3, s)[2] * w(r, t4)[2]) * general)
    out = [pf - rhs]
    yval = genfun.yfun(n).evaluate(pt)
    yside = (b ** ((n - 1) * (n - 4) + 8) * c ** (n - 8) * bt ** (n - 1)
             * t1 * t2 * t3 * t4 / (r * r * s * s) * yval)
    out.append(pf - yside)
    for rws in rows:
        out.append(_multirow_residual(n, d, rws))
    return out


def _multirow_residual(n: int, d: DictionaryPoint, rows: Sequence[int]):
    m = len(rows)
    ts = d.t[:m]
    a, b, c = d.w(d.r, d.s)
    pf = partition_function_brute(_rows_point(d, n, rows, ts))
    pt = {"x": (a / b) ** 2, "y": (c / b) ** 2}
    pref = b ** ((n - 1) * (n - m)) * c ** (n - m)
    for i, t in enumerate(ts):
        at, bt, ct = d.w(t, d.s)
        pt[f"z{i + 1}"] = at * b / (a * bt)
        pt[f"w{i + 1}"] = (ct / bt) ** 2
        pref = pref * bt ** (n - 1) * ct
    if m == 0:
        return pf - pref * genfun.zunref(n).evaluate(pt)
    return pf - pref * genfun.brute_multirow(n, rows).evaluate(pt)


# Schur functions

@dataclass(frozen=True)
class SchurShape:
    partition: tuple
    num_vars: int


def double_staircase(n: int) -> SchurShape:
    """(n-1, n-1, ..., 2, 2, 1, 1) in 2n variables."""
    parts = tuple(k for k in range(n - 1, 0, -1) for _ in range(2))
    return SchurShape(parts, 2 * n)


def _complete_homogeneous(values: Sequence, top: int) -> list:
    """h_0..h_top of the values, with all-ones values handled by a binomial
    series so repeated ones cost nothing."""
    ones = sum(1 for v in values if v == 1)
    rest = [v for v in values if v != 1]
    series = [binom(ones + k - 1, k) if ones else (1 if k == 0 else 0) for k in range(top + 1)]
    for w in rest:
        # multiply by 1 / (1 - w t)
        nxt = []
        acc = 0
        for k in range(top + 1):
            acc = acc * w + series[k]
            nxt.append(acc)
        series = nxt
    return series


def schur_eval(shape: SchurShape, values: Sequence):
    """Jacobi-Trudi evaluation of s_shape at the given values."""
    if len(values) != shape.num_vars:
        raise ValueError(f"expected {shape.num_vars} values, got {len(values)}")
    lam = shape.partition
    ell = len(lam)
    if ell == 0:
        return 1
    h = _complete_homogeneous(values, lam[0] + ell)

    def hk(k):
        return h[k] if k >= 0 else 0

    return det_exact([[hk(lam[i] - i + j) for j in range(ell)] for i in range(ell)])


# special points

def zff_formula(p: SpectralPoint, sign: int):
    """Partition function at q = sign * i as a product."""
    n = p.n
    u, v = p.u, p.v
    out = (2 * sign) ** n * I ** (n * n)
    out = out * prod(p.root_u, start=1) * prod(p.root_v, start=1)
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (u[i] + u[j]) * (v[i] + v[j])
    return out


def cauchy_residual(alpha: Sequence, beta: Sequence):
    n = len(alpha)
    lhs = det_exact([[Fraction(1) / (alpha[i] + beta[j]) for j in range(n)] for i in range(n)])
    num = prod(((alpha[i] - alpha[j]) * (beta[i] - beta[j])
                for i in range(n) for j in range(i + 1, n)), start=Fraction(1))
    den = prod((alpha[i] + beta[j] for i in range(n) for j in range(n)), start=Fraction(1))
    return lhs - num / den


def zcomb_formula(p: SpectralPoint, sign: int):
    """Partition function at q = exp(+-2 pi i / 3) through a Schur function."""
    n = p.n
    pre = sign ** n * I ** (n * n) * SQRT3 ** n
    pre = pre * prod(p.root_u, start=1) * prod(p.root_v, start=1)
    return pre * schur_eval(double_staircase(n), list(p.u) + list(p.v))


def special_points(n: int, which: str, seed: int = 0, points: int = POINTS) -> list:
    """Residuals at the free-fermion or combinatorial point over seeded
    rational roots, for both signs of q."""
    if which not in ("freefermion", "combinatorial"):
        raise ValueError(f"unknown special point {which!r}")
    rng = PointSampler(seed * 7919 + n * 31 + (1 if which == "freefermion" else 2))
    out = []
    for _ in range(points):
        base = _random_roots(rng, n)
        for sign in (1, -1):
            if which == "freefermion":
                q = SQRT_I if sign > 0 else SQRT_I.conjugate()
            else:
                q = SQRT_OMEGA if sign > 0 else SQRT_OMEGA.conjugate()
            p = SpectralPoint(base.root_u, base.root_v, q)
            z = partition_function_brute(p)
            if which == "freefermion":
                out.append(z - zff_formula(p, sign))
                out.append(z - ik_determinant(p))
                out.append(cauchy_residual([x * x for x in base.u], [y * y for y in base.v]))
            else:
                out.append(z - zcomb_formula(p, sign))
                if n >= 2:
                    us, vs = list(p.root_u), list(p.root_v)
                    us[0], vs[1] = vs[1], us[0]
                    out.append(z - partition_function_brute(SpectralPoint(tuple(us), tuple(vs), q)))
    return out


def _cyclotomic_z(t, q):
    """z = a(t,1) / b(t,1) at the point with root t and root q."""
    a, b, _ = abc(t, 1, q)
    return a / b


def check_unwound(n: int, seed: int = 0, points: int = 2) -> list:
    """At q = omega: moving the boundary columns into rows leaves the
    partition function unchanged, and the general function at the matching
    z's equals X_n."""
    rng = PointSampler(seed * 7919 + n * 31 + 3)
    out = []
    for _ in range(points):
        d = random_dictionary_point(rng, 4, root_q=SQRT_OMEGA)
        t1, t2, t3, t4 = d.t
        r = d.r
        lhs = partition_function_brute(SpectralPoint((t1,) + (r,) * (n - 2) + (t3,),
                                                     (t4,) + (r,) * (n - 2) + (t2,), d.q))
        rhs = partition_function_brute(SpectralPoint((t1, t2, t3, t4) + (r,) * (n - 4), (r,) * n, d.q))
        out.append(lhs - rhs)
        zs = rng.distinct(4, avoid=(Fraction(1),))
        z1, z2, z3, z4 = zs
        pt = {"x": 1, "y": 1, "z1": z1, "z2": 1 / z2, "z3": z3, "z4": 1 / z4,
              "z41": 1 + (z4 - 1) * (z1 - 1) / z1, "z12": 1 + (z1 - 1) * (z2 - 1) / z2,
              "z23": 1 + (z2 - 1) * (z3 - 1) / z3, "z34": 1 + (z3 - 1) * (z4 - 1) / z4}
        out.append((z2 * z4) ** (n - 1) * genfun.brute_general(n).evaluate(pt)
                   - genfun.xfun_at(n, 1, 1, zs))
    return out


def schurgen_residuals(n: int, m: int, seed: int = 0) -> list:
    """X_n(1,1; z) against the Schur expression at q = omega and its conjugate."""
    rng = PointSampler(seed * 7919 + n * 31 + m * 5 + 4)
    zs = rng.distinct(m)
    x = genfun.xfun_at(n, 1, 1, zs)
    out = []
    for q in (SQRT_OMEGA ** 2, (SQRT_OMEGA ** 2).conjugate()):
        ws = [(q * z + 1) / (z + q) for z in zs]
        s = schur_eval(double_staircase(n), ws + [1] * (2 * n - m))
        rhs = (-q) ** (m * (n - 1)) * prod((z + q for z in zs), start=1) ** (n - 1) * s
        out.append(rhs / Fraction(3) ** (n * (n - 1) // 2) - x)
    return out


def multirow_param_residual(n: int, rows: Sequence[int], d: DictionaryPoint):
    """Multi-row function at the (x, y, z, w) parametrisation equals X_n."""
    m = len(rows)
    a, b, c = d.w(d.r, d.s)
    pt = {"x": (a / b) ** 2, "y": (c / b) ** 2}
    zs = []
    for i, t in enumerate(d.t[:m]):
        at, bt, ct = d.w(t, d.s)
        zs.append(at * b / (a * bt))
        pt[f"z{i + 1}"] = zs[-1]
        pt[f"w{i + 1}"] = (ct / bt) ** 2
    return genfun.brute_multirow(n, rows).evaluate(pt) - genfun.xfun_at(n, pt["x"], pt["y"], zs)


# ---------------------------------------------------------------------------
# registered checks

@identity("ik-determinant", "sixvertex", 1, 5)
def check_ik(n: int, seed: int = 0):
    """Izergin-Korepin determinant against the configuration sum."""
    rng = PointSampler(seed * 7919 + n * 31)
    out = []
    for _ in range(IK_POINTS):
        p = random_point(rng, n)
        out.append(ik_determinant(p) - partition_function_brute(p))
        q2 = p.root_q ** 2
        out.append(crossing_value(p.root_u[0], p.root_v[0], p.root_q) + q2 + 1 / q2)
    return out


@identity("desnanot-jacobi-pf", "sixvertex", 2, 5)
def check_djik_points(n: int, seed: int = 0):
    """Quadratic relation of the partition function at seeded points."""
    rng = PointSampler(seed * 7919 + n * 31 + 5)
    out = []
    for _ in range(POINTS):
        p = random_point(rng, n)
        out += check_djik(p, "brute")
        out += check_djik(p, "ik")
    return out


@identity("asm-dictionary", "sixvertex", 2, 4)
def check_dictionary_points(n: int, seed: int = 0):
    """Partition function at the specialised assignment as ASM generating functions."""
    rng = PointSampler(seed * 7919 + n * 31 + 6)
    rows = [c for m in range(0, min(n, 3) + 1) for c in combinations(range(1, n + 1), m)]
    out = []
    for _ in range(POINTS):
        d = random_dictionary_point(rng, 4)
        out += check_dictionary(n, d, rows)
    return out


@identity("multirow-bazin-pf", "sixvertex", 1, 4)
def check_bazin_points(n: int, seed: int = 0):
    """Multi-row determinant identity and its position independence."""
    rng = PointSampler(seed * 7919 + n * 31 + 7)
    out = []
    for _ in range(POINTS):
        d = random_dictionary_point(rng, 3)
        for m in range(1, min(n, 3) + 1):
            placements = list(combinations(range(1, n + 1), m))
            out += check_bazin_pf(d, n, placements[0], placements[-1])
    return out


@identity("free-fermion-point", "sixvertex", 1, 4)
def check_free_fermion(n: int, seed: int = 0):
    """Product formula at q = +-i, with the Cauchy alternant."""
    return special_points(n, "freefermion", seed)


@identity("combinatorial-point", "sixvertex", 1, 4)
def check_combinatorial(n: int, seed: int = 0):
    """Schur formula at q = exp(+-2 pi i/3) and the u/v swap symmetry."""
    out = special_points(n, "combinatorial", seed)
    if n >= 4:
        out += check_unwound(n, seed)
    return out


@identity("schur-multirow", "sixvertex", 1, 4)
def check_schurgen(n: int, seed: int = 0):
    """X_n(1,1; z) as a Schur function at the combinatorial point."""
    out = []
    for m in range(1, min(n, 3) + 1):
        out += schurgen_residuals(n, m, seed)
    return out


@identity("multirow-parametrized", "sixvertex", 1, 4)
def check_multirow_param(n: int, seed: int = 0):
    """Multi-row function at the spectral parametrisation equals X_n."""
    rng = PointSampler(seed * 7919 + n * 31 + 8)
    out = []
    for _ in range(POINTS):
        d = random_dictionary_point(rng, 2)
        for m in range(1, min(n, 2) + 1):
            for rows in combinations(range(1, n + 1), m):
                out.append(multirow_param_residual(n, rows, d))
    return out
