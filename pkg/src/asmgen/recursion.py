"""Recursive reconstruction of the refined generating functions.

Size-n functions are rebuilt from sizes n-1 and n-2 with exact polynomial
division; every quotient is checked to have zero remainder, so a wrong
input or a wrong formula surfaces as ``InexactDivision``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from . import genfun
from .catalog import identity, is_zero
from .exactmath import SparsePoly, binom, divexact, var

X, Y = var("x"), var("y")
Z1, Z2, Z3, Z4 = (var(f"z{i}") for i in range(1, 5))
XY = ("x", "y")


def _one(vars=XY) -> SparsePoly:
    return SparsePoly.constant(1, vars)


def _at(p: SparsePoly, *targets: str, inverted: tuple[str, ...] = (), shift=None) -> SparsePoly:
    """Rename z1, z2, ... of ``p`` to ``targets``.  Targets listed in
    ``inverted`` receive the reciprocal, and the result is multiplied by the
    monomial ``shift`` (which must clear the negative powers)."""
    images = {}
    for i, t in enumerate(targets):
        images[f"z{i + 1}"] = {t: -1 if t in inverted else 1}
    return p.monomial_map(images, shift)


def _single_at(p: SparsePoly, name: str) -> SparsePoly:
    return p.rename({"z": name}) if "z" in p.vars else p


@dataclass
class RecursionState:
    """Generating functions of every size built so far.

    ``single`` holds Z_m(x,y;z), ``unrefined`` Z_m(x,y), ``adj`` and
    ``adj_alt`` the two adjacent-boundary functions, ``quad`` the
    quadruply refined one.  Size 0 entries follow the convention Z_0 = 1.
    """

    single: dict[int, SparsePoly] = field(default_factory=dict)
    unrefined: dict[int, SparsePoly] = field(default_factory=dict)
    adj: dict[int, SparsePoly] = field(default_factory=dict)
    adj_alt: dict[int, SparsePoly] = field(default_factory=dict)
    quad: dict[int, SparsePoly] = field(default_factory=dict)

    @classmethod
    def initial(cls) -> "RecursionState":
        st = cls()
        st.unrefined[0] = _one()
        st.single[0] = _one(("x", "y", "z"))
        st.unrefined[1] = _one()
        st.single[1] = _one(("x", "y", "z"))
        st.adj[1] = _one(("x", "y", "z1", "z2"))
        st.adj_alt[1] = _one(("x", "y", "z1", "z2"))
        st.quad[1] = _one(genfun.QUAD_VARS)
        return st

    @classmethod
    def from_brute(cls, upto: int) -> "RecursionState":
        """Seed every size up to ``upto`` from the enumeration oracle."""
        st = cls.initial()
        for m in range(2, upto + 1):
            st.single[m] = genfun.zsingle(m)
            st.unrefined[m] = genfun.zunref(m)
            st.adj[m] = genfun.zadj(m)
            st.adj_alt[m] = genfun.zadj_alt(m)
            st.quad[m] = genfun.zqua(m)
        return st

    @classmethod
    def build(cls, upto: int) -> "RecursionState":
        """Build every size up to ``upto`` recursively from sizes 0 and 1."""
        st = cls.initial()
        for m in range(2, upto + 1):
            st.extend(m)
        return st

    @property
    def size(self) -> int:
        return max(self.quad)

    def extend(self, n: int) -> None:
        coeffs = recur_single(n, self)
        self.single[n] = _from_coeffs(coeffs)
        self.unrefined[n] = recur_unrefined(n, self)
        self.adj[n], self.adj_alt[n] = recur_adj(n, self)
        self.quad[n] = recur_quad(n, self)

    # accessors used by the formulas
    def z(self, m: int) -> SparsePoly:
        return self.unrefined[m] if m >= 0 else _one()

    def zs(self, m: int, name: str) -> SparsePoly:
        return _single_at(self.single[m], name)

    def coeff(self, m: int, k: int) -> SparsePoly:
        """Z_m(x,y)_k as a polynomial in x, y."""
        return self.single[m].coeff("z", k).with_vars(XY)


def _from_coeffs(coeffs: list[SparsePoly]) -> SparsePoly:
    zv = var("z")
    total = _one(("x", "y", "z")) * 0
    for k, c in enumerate(coeffs):
        total = total + c * zv ** k
    return total


def _require(state: RecursionState, n: int, **need: int):
    for name, size in need.items():
        if size > 0 and size not in getattr(state, name):
            raise ValueError(f"state lacks {name} at size {size} (needed for n={n})")


# fraction sums over products of unrefined functions

def _zsum(state: RecursionState, terms: list[tuple[SparsePoly, dict[int, int]]]) -> SparsePoly:
    """Sum numerator / prod Z_m^e over the terms, dividing exactly at the end.

    Each term is (numerator, {m: e}).  Z_0 = 1 is skipped.
    """
    common: dict[int, int] = {}
    for _, den in terms:
        for m, e in den.items():
            if m > 0:
                common[m] = max(common.get(m, 0), e)
    total = None
    for num, den in terms:
        t = num
        for m, e in common.items():
            t = t * state.z(m) ** (e - den.get(m, 0))
        total = t if total is None else total + t
    if total is None:
        return _one() * 0
    for m, e in sorted(common.items()):
        for _ in range(e):
            total = divexact(total, state.z(m))
    return total


# singly refined and unrefined

def recur_single(n: int, state: RecursionState) -> list[SparsePoly]:
    """Coefficients Z_n(x,y)_k, k = 0..n-1, from sizes below n."""
    if n <= 1:
        return [_one()]
    _require(state, n, single=n - 1, unrefined=n - 1)
    out = []
    for k in range(n):
        terms: list[tuple[SparsePoly, dict[int, int]]] = []
        if k == 0:
            terms.append((state.z(n - 1), {}))
        for i in range(k):
            m = n - i - 1
            poly = Y ** (i + 1) * binom(k - 1, i) * binom(n - 1, i + 1) * state.z(n - 1)
            terms.append((poly, {}))
            inner = _one() * 0
            for j1 in range(k - i):
                a = X * binom(k - j1 - 2, i - 1)
                b = Y * binom(k - j1 - 1, i)
                c1 = state.coeff(m, j1)
                for j2 in range(n - i - 1):
                    w = a * binom(n - j2 - 2, i) - b * binom(n - j2 - 1, i + 1)
                    if w:
                        inner = inner + c1 * state.coeff(m, j2) * w
            # the prefactor Z_{n-1} cancels the Z_{n-i-1} denominator when i = 0
            if i == 0:
                terms.append((inner, {n - 2: 1}))
            else:
                terms.append((Y ** i * inner * state.z(n - 1), {m: 1, m - 1: 1}))
        out.append(_zsum(state, terms))
    return out


def recur_unrefined(n: int, state: RecursionState) -> SparsePoly:
    """Z_n(x,y) from the coefficient data of smaller sizes."""
    if n <= 1:
        return _one()
    _require(state, n, single=n - 1, unrefined=n - 1)
    terms: list[tuple[SparsePoly, dict[int, int]]] = [(state.z(n - 1), {})]
    for i in range(n - 1):
        m = n - i - 1
        s1 = sum((binom(n - j - 2, i) * state.coeff(m, j) for j in range(m)), _one() * 0)
        s2 = sum((binom(n - j - 1, i + 1) * state.coeff(m, j) for j in range(m)), _one() * 0)
        terms.append((Y ** (i + 1) * binom(n - 1, i + 1) ** 2 * state.z(n - 1), {}))
        num = X * Y ** i * s1 ** 2 - Y ** (i + 1) * s2 ** 2
        if i == 0:
            terms.append((num, {n - 2: 1}))
        else:
            terms.append((num * state.z(n - 1), {m: 1, m - 1: 1}))
    return _zsum(state, terms)


def doub_coeff(n: int, k1: int, k2: int, state: RecursionState) -> SparsePoly:
    """Z^adj_n(x,y)_{k1,k2} from singly refined coefficients of smaller sizes."""
    if n == 1:
        return _one() if k1 == k2 == 0 else _one() * 0
    terms: list[tuple[SparsePoly, dict[int, int]]] = []
    if k1 == k2 == 0:
        terms.append((state.z(n - 1), {}))
    for i in range(min(k1, k2)):
        m = n - i - 1
        terms.append((Y ** (i + 1) * binom(k1 - 1, i) * binom(k2 - 1, i) * state.z(n - 1), {}))
        inner = _one() * 0
        for j1 in range(k1 - i):
            for j2 in range(k2 - i):
                w = (X * binom(k1 - j1 - 2, i - 1) * binom(k2 - j2 - 2, i - 1)
                     - Y * binom(k1 - j1 - 1, i) * binom(k2 - j2 - 1, i))
                if w:
                    inner = inner + state.coeff(m, j1) * state.coeff(m, j2) * w
        if i == 0:
            terms.append((inner, {n - 2: 1}))
        else:
            terms.append((Y ** i * inner * state.z(n - 1), {m: 1, m - 1: 1}))
    return _zsum(state, terms)


# adjacent-boundary functions

def _p12() -> SparsePoly:
    return (Z1 - 1) * (Z2 - 1)


def adj_by_recursion(n: int, state: RecursionState) -> tuple[SparsePoly, SparsePoly]:
    """One step of the first-order recursions for both adjacent functions."""
    if n == 1:
        return state.adj[1], state.adj_alt[1]
    _require(state, n, adj=n - 1, adj_alt=n - 1, single=n - 1)
    p = _p12()
    zz = Z1 * Z2
    z1, z2 = state.zs(n - 1, "z1"), state.zs(n - 1, "z2")
    zn1, zn2 = state.z(n - 1), state.z(n - 2)
    rhs = (Y * zz * state.adj[n - 1] * zn1 + (X * p - Y) * zz * z1 * z2 + p * zn1 * zn2)
    rhs_alt = (Y * zz * state.adj_alt[n - 1] * zn1 + (p - Y * zz) * z1 * z2
               + p * (X * zz) ** (n - 1) * zn1 * zn2)
    out = []
    for r in (rhs, rhs_alt):
        r = divexact(divexact(r, Z1 - 1), Z2 - 1)
        out.append(divexact(r, zn2))
    return out[0], out[1]


def adj_by_sum(n: int, state: RecursionState) -> tuple[SparsePoly, SparsePoly]:
    """Explicit sums over i = 1..n-1, after clearing the ((z1-1)(z2-1))^(n-1)
    denominators."""
    if n == 1:
        return state.adj[1], state.adj_alt[1]
    p = _p12()
    zz = Z1 * Z2
    terms: list[tuple[SparsePoly, dict[int, int]]] = [(p ** (n - 1) * state.z(n - 1), {})]
    terms_alt: list[tuple[SparsePoly, dict[int, int]]] = [
        ((X * zz) ** (n - 1) * p ** (n - 1) * state.z(n - 1), {})]
    for i in range(1, n):
        prod = state.zs(i, "z1") * state.zs(i, "z2")
        terms.append(((Y * zz) ** (n - i) * p ** (i - 1) * state.z(n - 1), {}))
        num = Y ** (n - i - 1) * zz ** (n - i) * p ** (i - 1) * (X * p - Y) * prod
        terms_alt.append((Y ** (n - i) * p ** (i - 1) * X ** (i - 1) * zz ** (n - 1)
                          * state.z(n - 1), {}))
        num_alt = Y ** (n - i - 1) * p ** (i - 1) * zz ** (n - i - 1) * (p - Y * zz) * prod
        # Z_{n-1} / (Z_{i-1} Z_i): the top term cancels against the prefactor
        if i == n - 1:
            terms.append((num, {n - 2: 1}))
            terms_alt.append((num_alt, {n - 2: 1}))
        else:
            terms.append((num * state.z(n - 1), {i - 1: 1, i: 1}))
            terms_alt.append((num_alt * state.z(n - 1), {i - 1: 1, i: 1}))
    out = []
    for t in (terms, terms_alt):
        s = _zsum(state, t)
        for _ in range(n - 1):
            s = divexact(divexact(s, Z1 - 1), Z2 - 1)
        out.append(s.with_vars(("x", "y", "z1", "z2")))
    return out[0], out[1]


def recur_adj(n: int, state: RecursionState, route: str = "recursion") -> tuple[SparsePoly, SparsePoly]:
    if route == "recursion":
        pair = adj_by_recursion(n, state)
    elif route == "sum":
        pair = adj_by_sum(n, state)
    else:
        raise ValueError(f"unknown route {route!r}")
    return tuple(p.with_vars(("x", "y", "z1", "z2")) for p in pair)


# quadruply refined

def _pair(a: SparsePoly, b: SparsePoly) -> SparsePoly:
    return (a - 1) * (b - 1)


def quad_rhs(n: int, state: RecursionState) -> SparsePoly:
    """Right-hand side of the quadratic relation for the quadruply refined
    function; it equals y (z4 - z2)(z1 - z3) Z^qua_n Z_{n-2}."""
    adj, alt = state.adj[n - 1], state.adj_alt[n - 1]
    a41 = _at(adj, "z4", "z1")
    a23 = _at(adj, "z2", "z3")
    b12 = _at(alt, "z1", "z2")
    b34 = _at(alt, "z3", "z4")
    zn2 = state.z(n - 2)
    p12, p23, p34, p41 = _pair(Z1, Z2), _pair(Z2, Z3), _pair(Z3, Z4), _pair(Z4, Z1)
    return ((p12 - Y * Z1 * Z2) * (p34 - Y * Z3 * Z4) * a41 * a23
            - (X * p41 - Y) * (X * p23 - Y) * Z1 * Z2 * Z3 * Z4 * b12 * b34
            - p23 * (p41 - Y * Z4 * Z1) * a41 * zn2
            + p34 * (X * p12 - Y) * Z1 * Z2 * (X * Z3 * Z4) ** (n - 1) * b12 * zn2
            - p41 * (p23 - Y * Z2 * Z3) * a23 * zn2
            + p12 * (X * p34 - Y) * Z3 * Z4 * (X * Z1 * Z2) ** (n - 1) * b34 * zn2
            + p12 * p34 * (1 - (X ** 2 * Z1 * Z2 * Z3 * Z4) ** (n - 1)) * zn2 ** 2)


def recur_quad(n: int, state: RecursionState) -> SparsePoly:
    """Z^qua_n from the adjacent functions at n-1 and Z_{n-2}.

    Divides by y, then (z4 - z2), then (z1 - z3), then Z_{n-2}.
    """
    if n == 1:
        return state.quad[1]
    _require(state, n, adj=n - 1, adj_alt=n - 1, unrefined=n - 2)
    r = quad_rhs(n, state)
    for d in (Y, Z4 - Z2, Z1 - Z3, state.z(n - 2)):
        r = divexact(r, d)
    return r.with_vars(genfun.QUAD_VARS)


# triply refined and opposite-boundary

def recur_tri(n: int, state: RecursionState, route: str = "triprel") -> SparsePoly:
    """Z^tri_n by one of two equivalent relations.

    ``route="triprel"`` uses adjacent functions at n-1 and divides by
    (z2 - z1)(z3 - 1) Z_{n-2}; ``route="triprelalt"`` uses adjacent
    functions at n and divides by y (z2 - z1) z3 Z_{n-1}.
    """
    tv = ("x", "y", "z1", "z2", "z3")
    if n == 1:
        return _one(tv)
    if route == "triprel":
        adj, alt = state.adj[n - 1], state.adj_alt[n - 1]
        s1, s2 = state.zs(n - 1, "z1"), state.zs(n - 1, "z2")
        zn2 = state.z(n - 2)
        r = ((_pair(Z2, Z3) - Y * Z2 * Z3) * Z1 * _at(adj, "z1", "z3") * s2
             - (X * _pair(Z1, Z3) - Y) * Z1 * Z2 * Z3 * _at(alt, "z2", "z3") * s1
             - _pair(Z1, Z3) * Z2 * s2 * zn2
             + _pair(Z2, Z3) * Z1 * (X * Z2 * Z3) ** (n - 1) * s1 * zn2)
        for d in (Z2 - Z1, Z3 - 1, zn2):
            r = divexact(r, d)
    elif route == "triprelalt":
        adj, alt = state.adj[n], state.adj_alt[n]
        s1, s2 = state.zs(n - 1, "z1"), state.zs(n - 1, "z2")
        zn1 = state.z(n - 1)
        r = ((Z1 - 1) * (_pair(Z2, Z3) - Y * Z2 * Z3) * _at(adj, "z1", "z3") * s2
             - (Z2 - 1) * (X * _pair(Z1, Z3) - Y) * Z1 * Z3 * _at(alt, "z2", "z3") * s1
             - (Z1 - 1) * (Z2 - 1) * (Z3 - 1) * s2 * zn1
             + (Z1 - 1) * (Z2 - 1) * (Z3 - 1) * Z1 * Z2 ** (n - 1) * (X * Z3) ** n * s1 * zn1)
        for d in (Y, Z2 - Z1, Z3, zn1):
            r = divexact(r, d)
    else:
        raise ValueError(f"unknown route {route!r}")
    return r.with_vars(tv)


def recur_opp(n: int, state: RecursionState) -> SparsePoly:
    """Z^opp_n from singly refined functions at n and n-1."""
    ov = ("x", "y", "z1", "z2")
    if n == 1:
        return _one(ov)
    _require(state, n, single=n, unrefined=n - 1)
    r = ((Z1 - 1) * Z2 * state.zs(n, "z1") * state.zs(n - 1, "z2")
         - Z1 * (Z2 - 1) * state.zs(n - 1, "z1") * state.zs(n, "z2"))
    for d in (Z1 - Z2, state.z(n - 1)):
        r = divexact(r, d)
    return r.with_vars(ov)




# identities checked against the enumeration oracle

@dataclass
class IdentityReport:
    identity: str
    n: int
    residuals: list

    @property
    def ok(self) -> bool:
        return all(is_zero(r) for r in self.residuals)

    @property
    def residual(self) -> SparsePoly:
        """The first nonzero residual, or zero."""
        for r in self.residuals:
            if not is_zero(r):
                return r
        return self.residuals[0] if self.residuals else SparsePoly.constant(0)


def verify_identity(catalog_id: str, n: int, seed: int = 0) -> IdentityReport:
    from .catalog import load_all

    ident = load_all()[catalog_id]
    return IdentityReport(catalog_id, n, ident.residuals(n, seed))


def _brute(n: int) -> RecursionState:
    return RecursionState.from_brute(n)


def _reflect(p: SparsePoly, n: int, zvars: tuple[str, ...], zpow: int) -> SparsePoly:
    """x^(n(n-1)/2) prod z^zpow p(1/x, y/x; 1/z, ...)."""
    images = {"x": {"x": -1}, "y": {"y": 1, "x": -1}}
    images.update({z: {z: -1} for z in zvars})
    shift = {"x": n * (n - 1) // 2}
    shift.update({z: zpow for z in zvars})
    return p.monomial_map(images, shift)


@identity("quad-relation", "recursion", min_n=2, max_n=6)
def _quad_relation(n: int):
    """Quadratic relation for the quadruply refined function."""
    st = _brute(n)
    lhs = Y * (Z4 - Z2) * (Z1 - Z3) * genfun.zqua(n) * st.z(n - 2)
    return lhs - quad_rhs(n, st)


@identity("quad-relation-alt", "recursion", min_n=2, max_n=5)
def _quad_relation_alt(n: int):
    """Quadratic relation for the alternative quadruply refined function."""
    st = _brute(n)
    adj, alt = st.adj[n - 1], st.adj_alt[n - 1]
    zn2 = st.z(n - 2)
    e = n - 1
    # each rescaled function below is a polynomial
    a41 = _at(adj, "z4", "z1", inverted=("z4",), shift={"z4": e})
    a23 = _at(adj, "z2", "z3", inverted=("z2",), shift={"z2": e})
    b12 = _at(alt, "z1", "z2", inverted=("z2",), shift={"z2": n - 2})
    b34 = _at(alt, "z3", "z4", inverted=("z4",), shift={"z4": n - 2})
    p12, p23, p34, p41 = _pair(Z1, Z2), _pair(Z2, Z3), _pair(Z3, Z4), _pair(Z4, Z1)
    lhs = Y * (Z1 - Z3) * (Z2 - Z4) * genfun.zqua_alt(n) * zn2
    rhs = ((p12 + Y * Z1) * (p34 + Y * Z3) * a41 * a23
           - (X * p41 + Y * Z4) * (X * p23 + Y * Z2) * Z1 * Z3 * b12 * b34
           - p23 * (p41 + Y * Z1) * Z2 ** e * a41 * zn2
           + p34 * (X * p12 + Y * Z2) * Z1 * (X * Z3) ** e * b12 * zn2
           - p41 * (p23 + Y * Z3) * Z4 ** e * a23 * zn2
           + p12 * (X * p34 + Y * Z4) * Z3 * (X * Z1) ** e * b34 * zn2
           + p12 * p34 * ((Z2 * Z4) ** e - (X ** 2 * Z1 * Z3) ** e) * zn2 ** 2)
    return lhs - rhs


@identity("triple-relation", "recursion", min_n=2, max_n=5)
def _triple_relation(n: int):
    """Both relations for the triply refined function reproduce the oracle."""
    st = _brute(n)
    return [recur_tri(n, st, "triprel") - genfun.ztri(n),
            recur_tri(n, st, "triprelalt") - genfun.ztri(n)]


@identity("adjacent-recursion", "recursion", min_n=2, max_n=6)
def _adjacent_recursion(n: int):
    """First-order recursions for both adjacent-boundary functions."""
    st = _brute(n)
    a, b = adj_by_recursion(n, st)
    return [a - genfun.zadj(n), b - genfun.zadj_alt(n)]


@identity("adjacent-sum", "recursion", min_n=1, max_n=6)
def _adjacent_sum(n: int):
    """Explicit sums for both adjacent-boundary functions."""
    st = _brute(n)
    a, b = adj_by_sum(n, st)
    return [a - genfun.zadj(n), b - genfun.zadj_alt(n)]


@identity("adjacent-pair", "recursion", min_n=1, max_n=6)
def _adjacent_pair(n: int):
    """Linear relation between the two adjacent-boundary functions."""
    p = _p12()
    zz = Z1 * Z2
    return ((p - Y * zz) * genfun.zadj(n) - (X * p - Y) * zz * genfun.zadj_alt(n)
            - p * (1 - (X * zz) ** n) * genfun.zunref(n - 1))


@identity("adjacent-symmetry", "recursion", min_n=1, max_n=6)
def _adjacent_symmetry(n: int):
    """Self-relation of the adjacent-boundary function under inversion."""
    p = _p12()
    zz = Z1 * Z2
    adj = genfun.zadj(n)
    refl = _reflect(adj, n, ("z1", "z2"), n - 1) * zz
    return ((p - Y * zz) * adj - (X * p - Y) * refl
            - p * (1 - (X * zz) ** n) * genfun.zunref(n - 1))


@identity("opposite-relation", "recursion", min_n=2, max_n=6)
def _opposite_relation(n: int):
    """Opposite-boundary function from singly refined functions."""
    st = _brute(n)
    return recur_opp(n, st) - genfun.zopp(n)


@identity("opposite-plucker", "recursion", min_n=1, max_n=5)
def _opposite_plucker(n: int):
    """Three-term quadratic relation among opposite-boundary functions."""
    opp = genfun.zopp(n)

    def o(a, b):
        return _at(opp, a, b)

    return ((Z1 - Z2) * (Z3 - Z4) * o("z1", "z2") * o("z3", "z4")
            - (Z1 - Z3) * (Z2 - Z4) * o("z1", "z3") * o("z2", "z4")
            + (Z1 - Z4) * (Z2 - Z3) * o("z1", "z4") * o("z2", "z3"))


@identity("single-coefficients", "recursion", min_n=1, max_n=7)
def _single_coefficients(n: int):
    """Binomial sums for the singly refined coefficients."""
    st = _brute(n)
    return [c - genfun.coeff_extract("single", n, (k,)) for k, c in enumerate(recur_single(n, st))]


@identity("adjacent-coefficients", "recursion", min_n=1, max_n=6)
def _adjacent_coefficients(n: int):
    """Binomial sums for the adjacent-boundary coefficients."""
    st = _brute(n)
    return [doub_coeff(n, k1, k2, st) - genfun.coeff_extract("adj", n, (k1, k2))
            for k1 in range(n) for k2 in range(n)]


@identity("unrefined-sum", "recursion", min_n=1, max_n=7)
def _unrefined_sum(n: int):
    """Binomial sum for the unrefined function."""
    return recur_unrefined(n, _brute(n)) - genfun.zunref(n)


@identity("recursive-build", "recursion", min_n=1, max_n=6)
def _recursive_build(n: int):
    """Functions built recursively from sizes 0 and 1 match the oracle."""
    st = RecursionState.build(n)
    return [st.quad[n] - genfun.zqua(n), st.adj[n] - genfun.zadj(n),
            st.adj_alt[n] - genfun.zadj_alt(n), st.single[n] - genfun.zsingle(n),
            st.unrefined[n] - genfun.zunref(n)]


def _bracket_x(a, b):
    return X * _pair(a, b) - Y


def _bracket_y(a, b):
    return _pair(a, b) - Y * a * b


@identity("corner-quad", "recursion", min_n=2, max_n=5)
def _corner_quad(n: int):
    """Quadratic relation for the corner-weighted function."""
    yn = genfun.yfun(n)
    y2 = lambda a, b: genfun.y_two(n - 1, a, b)  # noqa: E731
    lhs = Y ** 7 * (Z4 - Z2) * (Z1 - Z3) * yn * genfun.zunref(n - 2)
    rhs = (_bracket_x(Z1, Z2) * _bracket_y(Z1, Z2) * _bracket_x(Z3, Z4) * _bracket_y(Z3, Z4)
           * y2("z1", "z4") * y2("z2", "z3")
           - _bracket_x(Z4, Z1) * _bracket_y(Z4, Z1) * _bracket_x(Z2, Z3) * _bracket_y(Z2, Z3)
           * y2("z1", "z2") * y2("z3", "z4"))
    return lhs - rhs


def _y_1z(n: int) -> SparsePoly:
    """Y_n(z1, 1, z2, z3) in the variables z1, z2, z3."""
    return genfun.yfun(n).subs({"z2": 1}).rename({"z3": "z2", "z4": "z3"})


@identity("corner-triple", "recursion", min_n=2, max_n=5)
def _corner_triple(n: int):
    """Triply refined corner relations at sizes (n-1, n-2) and (n, n-1)."""
    s = lambda m, name: genfun.single_in(m, name)  # noqa: E731
    y_prev = lambda a, b: genfun.y_two(n - 1, a, b)  # noqa: E731
    y_same = lambda a, b: genfun.y_two(n, a, b)  # noqa: E731
    first = (Y * (Z1 - Z2) * (Z3 - 1) * _y_1z(n) * genfun.zunref(n - 2)
             - _bracket_x(Z2, Z3) * _bracket_y(Z2, Z3) * Z1 * y_prev("z1", "z3") * s(n - 1, "z2")
             + _bracket_x(Z3, Z1) * _bracket_y(Z3, Z1) * Z2 * y_prev("z2", "z3") * s(n - 1, "z1"))
    second = (Y ** 2 * (Z1 - Z2) * Z3 * _y_1z(n) * genfun.zunref(n - 1)
              - (Z1 - 1) * _bracket_x(Z2, Z3) * _bracket_y(Z2, Z3) * y_same("z1", "z3") * s(n - 1, "z2")
              + (Z2 - 1) * _bracket_x(Z1, Z3) * _bracket_y(Z1, Z3) * y_same("z2", "z3") * s(n - 1, "z1"))
    return [first, second]


@identity("corner-plucker", "recursion", min_n=1, max_n=4)
def _corner_plucker(n: int):
    """Three-term relation for the corner-weighted function with two fixed
    boundary parameters w1, w2."""
    yn = genfun.yfun(n)

    def y(a, b):
        return yn.rename({"z1": a, "z2": "w1", "z3": b, "z4": "w2"})

    return ((Z1 - Z2) * (Z3 - Z4) * y("z1", "z2") * y("z3", "z4")
            - (Z1 - Z3) * (Z2 - Z4) * y("z1", "z3") * y("z2", "z4")
            + (Z1 - Z4) * (Z2 - Z3) * y("z1", "z4") * y("z2", "z3"))
