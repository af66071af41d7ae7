"""Identities among the brute-force generating functions.

Every entry returns residuals (left side minus right side) computed from
the enumeration oracle, so a pass certifies the identity at that size.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

from . import asmcore, genfun
from .catalog import identity
from .exactmath import SparsePoly, det_exact, var
from .points import PointSampler

X, Y = var("x"), var("y")
Z1, Z2, Z3, Z4 = (var(f"z{i}") for i in range(1, 5))
CORNERS = ("z41", "z12", "z23", "z34")


def _half(n: int) -> int:
    return n * (n - 1) // 2


def _dual(p: SparsePoly, n: int, zimages: dict[str, str], extra_x: int = 0,
          zpow: int | None = None) -> SparsePoly:
    """x -> 1/x, y -> y/x, and each z-variable -> 1/(its image); the result
    is multiplied by x^(n(n-1)/2 + extra_x) times (product of images)^zpow."""
    zpow = n - 1 if zpow is None else zpow
    images = {"x": {"x": -1}, "y": {"y": 1, "x": -1}}
    for src, dst in zimages.items():
        images[src] = {dst: -1}
    shift = {"x": _half(n) + extra_x}
    for dst in zimages.values():
        shift[dst] = zpow
    return p.monomial_map(images, shift)


def _swap(p: SparsePoly, *pairs: tuple[str, str]) -> SparsePoly:
    mapping = {}
    for a, b in pairs:
        mapping[a], mapping[b] = b, a
    return p.rename(mapping)


@identity("reflection-symmetries", "genfun", 1, 6)
def reflection_symmetries(n: int):
    """Transposition and rotation symmetries of the boundary-refined functions."""
    q, qa = genfun.zqua(n), genfun.zqua_alt(n)
    t, a, aa, o, s, u = (genfun.ztri(n), genfun.zadj(n), genfun.zadj_alt(n),
                         genfun.zopp(n), genfun.zsingle(n), genfun.zunref(n))
    cyc = {"z1": "z2", "z2": "z3", "z3": "z4", "z4": "z1"}
    rev = {"z1": "z4", "z2": "z3", "z3": "z2", "z4": "z1"}
    return [
        q - q.rename(rev),
        q - _dual(q, n, cyc),
        qa - qa.monomial_map({a: {b: -1} for a, b in rev.items()},
                             {z: n - 1 for z in rev}),
        qa - _dual(qa.rename(cyc), n, {}),
        t - _dual(t, n, {"z1": "z2", "z2": "z1", "z3": "z3"}),
        a - _swap(a, ("z1", "z2")),
        a - _dual(aa, n, {"z1": "z1", "z2": "z2"}),
        o - _swap(o, ("z1", "z2")),
        o - _dual(o, n, {"z1": "z1", "z2": "z2"}),
        s - _dual(s, n, {"z": "z"}),
        u - _dual(u, n, {}),
    ]


@identity("unit-specializations", "genfun", 1, 6)
def unit_specializations(n: int):
    """Setting boundary parameters to 1 drops to a less refined function."""
    t, a, aa, o, s = (genfun.ztri(n), genfun.zadj(n), genfun.zadj_alt(n),
                      genfun.zopp(n), genfun.zsingle(n))
    z = s.rename({"z": "z1"})
    return [
        t.subs({"z2": 1}).rename({"z3": "z2"}) - a,
        t.subs({"z1": 1}).rename({"z2": "z1", "z3": "z2"}) - aa,
        t.subs({"z3": 1}) - o,
        a.subs({"z2": 1}) - z,
        aa.subs({"z2": 1}) - z,
        o.subs({"z2": 1}) - z,
        s.subs({"z": 1}) - genfun.zunref(n),
    ]


@identity("zero-specializations", "genfun", 1, 6)
def zero_specializations(n: int):
    """Setting a boundary parameter to 0 forces a corner 1 and drops the size."""
    adj_prev = genfun.zadj(n - 1).rename({"z2": "z3"}) if n > 1 else SparsePoly.constant(1, ("x", "y"))
    single_prev = genfun.single_in(n - 1, "z1")
    prev = genfun.zunref(n - 1)
    q, t = genfun.zqua(n), genfun.ztri(n)
    return [
        q.subs({"z2": 0}).rename({"z3": "z2", "z4": "z3"}) - adj_prev,
        t.subs({"z2": 0}) - adj_prev,
        genfun.zadj_alt(n).subs({"z2": 0}) - single_prev,
        genfun.zopp(n).subs({"z2": 0}) - single_prev,
        genfun.zadj(n).subs({"z2": 0}) - prev,
        genfun.zsingle(n).subs({"z": 0}) - prev,
    ]


@identity("general-symmetries", "genfun", 1, 5)
def general_symmetries(n: int):
    """Symmetries of the corner-refined function, and its all-ones corners."""
    g = genfun.brute_general(n)
    flipped = g.rename({"z1": "z4", "z2": "z3", "z3": "z2", "z4": "z1",
                        "z12": "z34", "z34": "z12"})
    rotated = _dual(g, n, {"z1": "z2", "z2": "z3", "z3": "z4", "z4": "z1"}).rename(
        {"z41": "z12", "z12": "z23", "z23": "z34", "z34": "z41"})
    return [g - flipped, g - rotated,
            g.subs({c: 1 for c in CORNERS}) - genfun.zqua(n)]


@identity("general-corner-zero", "genfun", 2, 5)
def general_corner_zero(n: int):
    """A forced corner 1 reduces the size by one; two top corners cannot both be 1."""
    g = genfun.brute_general(n)
    smaller = genfun.brute_general(n - 1).subs(
        {"z1": 1, "z4": 1, "z41": 1, "z12": 1, "z34": 1})
    rhs = var("z12") * var("z34") * smaller
    return [g.subs({"z41": 0}) - rhs,
            g.subs({"z1": 0}) - rhs,
            g.subs({"z41": 0, "z12": 0})]


@identity("general-interpolation", "genfun", 1, 5)
def general_interpolation(n: int):
    """The corner-refined function is multilinear in the corner variables."""
    g = genfun.brute_general(n)
    total = SparsePoly.constant(0, g.vars)
    cs = [var(c) for c in CORNERS]
    for bits in product((0, 1), repeat=4):
        w = SparsePoly.constant(1, ())
        for c, b in zip(cs, bits):
            w = w * (c if b else 1 - c)
        total = total + w * g.subs(dict(zip(CORNERS, bits)))
    return [g - total]


@identity("general-expansion", "genfun", 2, 5)
def general_expansion(n: int):
    """Expansion of the corner-refined function over the corner states."""
    g = genfun.brute_general(n)
    z41, z12, z23, z34 = (var(c) for c in CORNERS)
    adj1 = genfun.zadj(n - 1)
    alt1 = genfun.zadj_alt(n - 1)
    zz = genfun.zunref(n - 2)
    m = n - 1
    rhs = (z41 * z12 * z23 * z34 * genfun.zqua(n)
           + z41 * z12 * (1 - z23) * z34 * adj1.rename({"z1": "z4", "z2": "z1"})
           + z41 * z12 * z23 * (1 - z34) * Z1 * Z2 * (X * Z3 * Z4) ** m * alt1
           + (1 - z41) * z12 * z23 * z34 * adj1.rename({"z1": "z2", "z2": "z3"})
           + z41 * (1 - z12) * z23 * z34 * Z3 * Z4 * (X * Z1 * Z2) ** m
           * alt1.rename({"z1": "z3", "z2": "z4"})
           + (1 - z41) * z12 * (1 - z23) * z34 * zz
           + z41 * (1 - z12) * z23 * (1 - z34) * X ** (2 * n - 3) * (Z1 * Z2 * Z3 * Z4) ** m * zz)
    # the two-corner special cases
    z = var("z12")
    adj, alt, prev = genfun.zadj(n), genfun.zadj_alt(n), genfun.zunref(n - 1)
    left = g.subs({"z2": 1, "z3": 1, "z12": 1, "z23": 1, "z34": 1}).rename(
        {"z4": "z2", "z41": "z12"})
    right = g.subs({"z1": 1, "z4": 1, "z41": 1, "z12": 1, "z34": 1}).rename(
        {"z2": "z1", "z3": "z2", "z23": "z12"})
    top = g.subs({"z3": 1, "z4": 1, "z41": 1, "z23": 1, "z34": 1})
    bottom = g.subs({"z1": 1, "z2": 1, "z41": 1, "z12": 1, "z23": 1}).rename(
        {"z3": "z1", "z4": "z2", "z34": "z12"})
    adj_rhs = z * adj + (1 - z) * prev
    alt_rhs = z * alt + (1 - z) * (X * Z1 * Z2) ** m * prev
    return [g - rhs, left - adj_rhs, right - adj_rhs, top - alt_rhs, bottom - alt_rhs]


@identity("coefficient-identities", "genfun", 2, 6)
def coefficient_identities(n: int):
    """Linear relations among boundary-parameter coefficients."""
    xy = ("x", "y")
    a = genfun.zadj(n)
    s = genfun.zsingle(n)
    sd = _dual(s, n, {})  # x^(n(n-1)/2) Z_n(1/x, y/x; z)

    def ac(k1, k2):
        return a.coeff("z1", k1).coeff("z2", k2).with_vars(xy)

    def sc(p, k, size):
        if not 0 <= k <= size - 1:
            return SparsePoly.constant(0, xy)
        return p.coeff("z", k).with_vars(xy)

    prev = genfun.zunref(n - 1)
    sp = genfun.zsingle(n - 1) if n > 1 else None
    out = []
    for k1 in range(n):
        out.append(sum((ac(k1, k2) for k2 in range(n)), SparsePoly.constant(0, xy))
                   - sc(s, k1, n))
        for k2 in range(n):
            out.append(ac(k1, k2) - ac(k2, k1))
        out.append(sc(s, k1, n) - sc(sd, n - 1 - k1, n))
        out.append(ac(k1, 0) - (prev if k1 == 0 else 0))
    out.append(sum((sc(s, k, n) for k in range(n)), SparsePoly.constant(0, xy)) - genfun.zunref(n))
    for k in range(n - 1):
        out.append(ac(k + 1, n - 1) - X ** (n - 1) * sc(sp, k, n - 1))
    out.append(sc(s, 0, n) - prev)
    # coefficients next to a corner
    for k in range(n):
        tail = sum((sc(sp, i, n - 1) for i in range(k, n - 1)), SparsePoly.constant(0, xy))
        rhs = X * sc(sp, k - 1, n - 1) + Y * tail - (Y * prev if k == 0 else 0)
        out.append(ac(k, 1) - rhs)
    weighted = sum((k * sc(sp, k, n - 1) for k in range(1, n - 1)), SparsePoly.constant(0, xy))
    out.append(sc(s, 1, n) - (X * prev + Y * weighted))
    return out


@identity("corner-function-symmetries", "genfun", 1, 5)
def corner_function_symmetries(n: int):
    """Reversal, reflection and the two transposition-free swaps of Y_n."""
    yf = genfun.yfun(n)
    return [
        yf - _swap(yf, ("z1", "z4"), ("z2", "z3")),
        yf - _dual(yf, n, {"z1": "z2", "z2": "z3", "z3": "z4", "z4": "z1"}, extra_x=4),
        yf - _swap(yf, ("z1", "z3")),
        yf - _swap(yf, ("z2", "z4")),
    ]


@identity("corner-function-zero", "genfun", 3, 5)
def corner_function_zero(n: int):
    """Y_n with z4 = 0 factors through Y_(n-1) with z4 = 1."""
    lhs = Y ** 2 * genfun.yfun(n).subs({"z4": 0})
    rhs = (Y + X * (Z1 - 1)) * (Y + X * (Z3 - 1)) * genfun.yfun(n - 1).subs({"z4": 1})
    return [lhs - rhs]


@identity("corner-function-reductions", "genfun", 1, 5)
def corner_function_reductions(n: int):
    """Y_n at unit parameters, and Y_n from the corner-refined function."""
    yf = genfun.yfun(n)
    y4 = Y ** 4
    return [
        yf.subs({"z2": 1, "z4": 1}).rename({"z3": "z2"}) - y4 * genfun.zopp(n),
        yf.subs({"z2": 1, "z3": 1, "z4": 1}).rename({"z1": "z"}) - y4 * genfun.zsingle(n),
        yf.subs({"z1": 1, "z2": 1, "z3": 1, "z4": 1}) - y4 * genfun.zunref(n),
        genfun.yfun_from_general(n) - genfun.yfun_brute(n),
    ]


@identity("multirow-statistics", "genfun", 1, 6)
def multirow_statistics(n: int):
    """Per-row and per-column statistics against the global ones, and under
    transposition and quarter turn.  Residual: number of violating matrices."""
    bad = 0
    for a in asmcore.enumerate_asms(n):
        s = asmcore.asm_stats(a)
        st = asmcore.asm_stats(asmcore.transpose(a))
        sq = asmcore.asm_stats(asmcore.quarter_turn(a))
        ok = (sum(s.nuRow) == sum(s.nuCol) == 2 * s.nu
              and (s.nuRow[0], s.nuCol[-1], s.nuRow[-1], s.nuCol[0])
              == (s.rhoT, s.rhoR, s.rhoB, s.rhoL)
              and sum(s.muRow[1:-1]) == sum(s.muCol[1:-1]) == s.mu
              and s.muRow[0] == s.muRow[-1] == s.muCol[0] == s.muCol[-1] == 0)
        for i in range(n):
            ok = ok and s.nuRow[i] == st.nuCol[i] == n - 1 - sq.nuCol[i] - 2 * s.muRow[i]
            ok = ok and s.muRow[i] == st.muCol[i] == sq.muCol[i]
        bad += not ok
    return [bad]


def _row_sets(n: int, max_m: int = 3):
    for m in range(1, min(n, max_m) + 1):
        yield from combinations(range(1, n + 1), m)


@identity("multirow-symmetry", "genfun", 1, 5)
def multirow_symmetry(n: int):
    """Column-refined functions from row-refined ones by reflection."""
    out = []
    for rows in _row_sets(n):
        m = len(rows)
        p = genfun.brute_multirow(n, rows)
        images = {"x": {"x": -1}, "y": {"y": 1, "x": -1}}
        shift = {"x": _half(n)}
        for i in range(1, m + 1):
            images[f"z{i}"] = {f"z{i}": -1}
            images[f"w{i}"] = {f"w{i}": 1, "x": -1, f"z{i}": -2}
            shift[f"z{i}"] = n - 1
        out.append(genfun.brute_multirow(n, rows, columns=True) - p.monomial_map(images, shift))
    return out


def _drop_index(rows, i):
    """Rename variables of the row set with entry i removed back to 1..m-1."""
    m = len(rows)
    mapping = {}
    for j in range(i + 1, m):
        mapping[f"z{j + 1}"] = f"z{j}"
        mapping[f"w{j + 1}"] = f"w{j}"
    return mapping


@identity("multirow-unit", "genfun", 1, 5)
def multirow_unit(n: int):
    """Setting z_i = 1 and w_i = y removes row k_i from the refinement."""
    out = []
    for rows in _row_sets(n):
        p = genfun.brute_multirow(n, rows)
        for i in range(len(rows)):
            lhs = p.subs({f"z{i + 1}": 1, f"w{i + 1}": Y}).rename(_drop_index(rows, i))
            rest = rows[:i] + rows[i + 1:]
            rhs = genfun.brute_multirow(n, rest) if rest else genfun.zunref(n)
            out.append(lhs - rhs)
    return out


@identity("multirow-determinant", "genfun", 1, 5)
def multirow_determinant(n: int):
    """Row-refined function on the quadric w = x z^2 + (y-x-1) z + 1 is X_n."""
    out = []
    for rows in _row_sets(n):
        m = len(rows)
        p = genfun.brute_multirow(n, rows)
        w = {f"w{i}": X * var(f"z{i}") ** 2 + (Y - X - 1) * var(f"z{i}") + 1
             for i in range(1, m + 1)}
        out.append(p.subs(w) - genfun.xfun(n, m))
    return out


@identity("multirow-x-properties", "genfun", 1, 5)
def multirow_x_properties(n: int):
    """Symmetry, reflection and unit/zero reductions of X_n."""
    out = [genfun.xfun(n, 1).rename({"z1": "z"}) - genfun.zsingle(n)]
    for m in range(1, min(n, 3) + 1):
        xf = genfun.xfun(n, m)
        names = [f"z{i}" for i in range(1, m + 1)]
        for perm in permutations(names):
            out.append(xf - xf.rename(dict(zip(names, perm))))
        out.append(xf - _dual(xf, n, {z: z for z in names}))
        for i in range(m):
            mapping = {f"z{j + 1}": f"z{j}" for j in range(i + 1, m)}
            out.append(xf.subs({names[i]: 1}).rename(mapping) - genfun.xfun(n, m - 1))
            out.append(xf.subs({names[i]: 0}).rename(mapping) - genfun.xfun(n - 1, m - 1))
    return out


@identity("multirow-minors", "genfun", 1, 5)
def multirow_minors(n: int, seed: int = 0):
    """Minor identity for X_n at seeded distinct rational points."""
    out = []
    for m in range(1, min(n, 3) + 1):
        rng = PointSampler(seed * 1000 + n * 10 + m)
        x, y = rng.distinct(2)
        vals = rng.distinct(3 * m - 2)
        zs, us, vs = vals[:m], vals[m:2 * m - 1], vals[2 * m - 1:]

        def xf(args):
            return genfun.xfun_at(n, x, y, list(args))

        lhs = 1
        for i in range(m):
            for j in range(i + 1, m):
                lhs *= zs[i] - zs[j]
        for i in range(m - 1):
            for j in range(i, m - 1):
                lhs *= us[i] - vs[j]
        lhs *= xf(zs)
        for i in range(1, m):
            lhs *= xf(us[:m - i] + vs[m - i - 1:])
        mat = []
        for i in range(m):
            row = []
            for j in range(1, m + 1):
                e = 1
                for k in range(m - j):
                    e *= zs[i] - us[k]
                for k in range(m - j, m - 1):
                    e *= zs[i] - vs[k]
                row.append(e * xf([zs[i]] + us[:m - j] + vs[m - j:]))
            mat.append(row)
        out.append(lhs - det_exact(mat))
    return out


@identity("degree-bounds", "genfun", 1, 6)
def degree_bounds(n: int):
    """Degrees of the quadruply refined function in each variable, and
    integrality and sign of its coefficients."""
    q = genfun.zqua(n)
    out = [q.degree("x") - _half(n), q.degree("y") - (n - 1) ** 2 // 4]
    out += [q.degree(f"z{i}") - (n - 1) for i in range(1, 5)]
    out.append(0 if q.has_nonnegative_integer_coefficients() else 1)
    return out


@identity("route-agreement", "genfun", 1, 6)
def route_agreement(n: int):
    """Direct folds agree with specialisations of the quadruply refined fold."""
    kinds = ("quadAlt", "tri", "adj", "adjAlt", "opp", "single", "unrefined")
    return [genfun.brute_specialized(k, n) - genfun.brute_specialized(k, n, route="subs")
            for k in kinds]
