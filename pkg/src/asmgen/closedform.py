"""Explicit formulas for special parameter regimes.

Covers y = 0 (permutation matrices), y = x + 1 (free fermions), x = y = 1
(refined ASM numbers), the K-matrix determinant formulas, the
lambda-determinant and q-products for descending plane partitions.  Each
formula has a registered check against the enumeration oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from . import asmcore, genfun
from .catalog import identity
from .errors import DivisionByZero, SingularCondensation
from .exactmath import SparsePoly, as_poly, binom, det_exact, divexact, rising, var

X, Y = var("x"), var("y")
Z1, Z2, Z3, Z4 = (var(f"z{i}") for i in range(1, 5))
ONE = SparsePoly.constant(1, ())


def _half(n: int) -> int:
    return n * (n - 1) // 2


# x-numbers and x-factorials

def xnumber(n: int, base=None) -> SparsePoly:
    """[n]_b = 1 + b + ... + b^(n-1) for a polynomial base b (default x)."""
    base = X if base is None else as_poly(base)
    out = SparsePoly.constant(0, ())
    pw = ONE
    for _ in range(n):
        out = out + pw
        pw = pw * base
    return out


@dataclass(frozen=True)
class XFactorial:
    n: int
    value: SparsePoly

    @classmethod
    def of(cls, n: int, base=None) -> "XFactorial":
        if n < 0:
            raise ValueError("x-factorial of a negative integer")
        return cls(n, prod((xnumber(k, base) for k in range(1, n + 1)), start=ONE))


def xfact(n: int, base=None) -> SparsePoly:
    return XFactorial.of(n, base).value


# permutation case (y = 0)

def _pair_sum(top: int, a: SparsePoly, b: SparsePoly) -> SparsePoly:
    """Sum over 0 <= i < j <= top of x^(top+i-j) a^i b^(top-j) + x^(top-i+j-1) a^(top-i) b^j."""
    out = SparsePoly.constant(0, ())
    for j in range(top + 1):
        for i in range(j):
            out = out + X ** (top + i - j) * a ** i * b ** (top - j)
            out = out + X ** (top - i + j - 1) * a ** (top - i) * b ** j
    return out


def perm_case(n: int) -> dict[str, SparsePoly]:
    """Generating functions at y = 0, for every kind whose formula is
    defined at this n (the quadruply refined one needs n >= 4)."""
    xz = {i: X * var(f"z{i}") for i in range(1, 5)}

    def num(k, i):
        return xnumber(k, xz[i])

    out: dict[str, SparsePoly] = {}
    if n >= 4:
        out["quad"] = (
            X ** 2 * Z1 * Z2 * Z3 * Z4 * _pair_sum(n - 3, Z4, Z2) * _pair_sum(n - 3, Z1, Z3)
            * xfact(n - 4)
            + (X * Z4 * Z1 * num(n - 2, 4) * num(n - 2, 1)
               + Z1 * Z2 * (X * Z3 * Z4) ** (n - 1) * num(n - 2, 1) * num(n - 2, 2)
               + X * Z2 * Z3 * num(n - 2, 2) * num(n - 2, 3)
               + Z3 * Z4 * (X * Z1 * Z2) ** (n - 1) * num(n - 2, 3) * num(n - 2, 4)) * xfact(n - 3)
            + (1 + X ** (2 * n - 3) * (Z1 * Z2 * Z3 * Z4) ** (n - 1)) * xfact(n - 2))
    if n >= 3:
        out["tri"] = (
            (X * Z2 * _pair_sum(n - 3, Z1, Z2) + num(n - 2, 1)
             + Z2 * (X * Z1) ** (n - 2) * num(n - 2, 2))
            * X * Z1 * Z3 * num(n - 2, 3) * xfact(n - 3)
            + (Z1 * (X * Z2 * Z3) ** (n - 1) * num(n - 2, 1) + X * Z2 * num(n - 2, 2)
               + 1 + X ** (2 * n - 3) * (Z1 * Z2 * Z3) ** (n - 1)) * xfact(n - 2))
    if n >= 2:
        out["adj"] = (X * Z1 * Z2 * num(n - 1, 1) * num(n - 1, 2) * xfact(n - 2)
                      + xfact(n - 1))
        out["opp"] = _pair_sum(n - 1, Z1, Z2) * xfact(n - 2)
    if n >= 1:
        out["single"] = xnumber(n, X * var("z")) * xfact(n - 1)
        out["unrefined"] = xfact(n)
    return out


# free-fermion case (y = x + 1)

def _ff_brackets():
    p41 = X * Z4 * Z1 + Z4 + Z1 - 1
    p12 = X * Z1 * Z2 - X * Z1 - X * Z2 - 1
    p23 = X * Z2 * Z3 + Z2 + Z3 - 1
    p34 = X * Z3 * Z4 - X * Z3 - X * Z4 - 1
    return p41, p12, p23, p34


def ff_quad_sides(n: int) -> tuple[SparsePoly, SparsePoly]:
    """(factor, rhs) with factor * Z^qua_n(x, x+1; z) = rhs."""
    p41, p12, p23, p34 = _ff_brackets()
    xp = X + 1
    l = [None] + [X * var(f"z{i}") + 1 for i in range(1, 5)]
    e3 = (n - 3) * (n - 4) // 2
    rhs = (Z1 * Z2 * Z3 * Z4 * (X * Z1 * Z3 + 1) * (X * Z2 * Z4 + 1)
           * (l[1] * l[2] * l[3] * l[4]) ** (n - 2) * xp ** ((n - 4) * (n - 5) // 2)
           - ((Z2 - 1) * (Z3 - 1) * Z4 * Z1 * (l[4] * l[1]) ** (n - 2)
              + (Z4 - 1) * (Z1 - 1) * Z2 * Z3 * (l[2] * l[3]) ** (n - 2)) * p12 * p34 * xp ** e3
           - ((Z3 - 1) * (Z4 - 1) * Z1 * Z2 * (Z3 * Z4) ** (n - 1) * (l[1] * l[2]) ** (n - 2)
              + (Z1 - 1) * (Z2 - 1) * Z3 * Z4 * (Z1 * Z2) ** (n - 1) * (l[3] * l[4]) ** (n - 2))
           * p41 * p23 * X ** n * xp ** e3
           + (Z1 - 1) * (Z2 - 1) * (Z3 - 1) * (Z4 - 1)
           * (p12 * p34 + p41 * p23 * (Z1 * Z2 * Z3 * Z4) ** (n - 1) * X ** (2 * n - 1))
           * xp ** ((n - 2) * (n - 3) // 2))
    return p41 * p12 * p23 * p34, rhs


def ff_tri_sides(n: int) -> tuple[SparsePoly, SparsePoly]:
    xp = X + 1
    a = X * Z1 * Z3 + Z1 + Z3 - 1
    b = X * Z2 * Z3 - X * Z2 - X * Z3 - 1
    e2 = (n - 2) * (n - 3) // 2
    rhs = (-Z1 * Z3 * (X * Z1 * Z2 + 1) * ((X * Z1 + 1) * (X * Z2 + 1)) ** (n - 2)
           * (X * Z3 + 1) ** (n - 1) * xp ** ((n - 3) * (n - 4) // 2)
           + (Z2 - 1) * (Z3 - 1) * a * Z1 * (Z2 * Z3) ** (n - 1) * (X * Z1 + 1) ** (n - 2)
           * X ** n * xp ** e2
           - (Z1 - 1) * (Z3 - 1) * b * (X * Z2 + 1) ** (n - 2) * xp ** e2)
    return a * b, rhs


def ff_adj_sides(n: int) -> tuple[SparsePoly, SparsePoly]:
    xp = X + 1
    rhs = (Z1 * Z2 * ((X * Z1 + 1) * (X * Z2 + 1)) ** (n - 1) * xp ** ((n - 2) * (n - 3) // 2)
           - (Z1 - 1) * (Z2 - 1) * xp ** ((n - 1) * (n - 2) // 2))
    return X * Z1 * Z2 + Z1 + Z2 - 1, rhs


def freefermion_case(n: int) -> dict[str, object]:
    """Formulas at y = x + 1.  The quad, tri and adj entries are
    (factor, rhs) pairs meaning factor * Z = rhs; the rest are polynomials."""
    if n < 2:
        raise ValueError("the free-fermion formulas need n >= 2")
    xp = X + 1
    return {
        "quad": ff_quad_sides(n),
        "tri": ff_tri_sides(n),
        "adj": ff_adj_sides(n),
        "opp": (X * Z1 * Z2 + 1) * ((X * Z1 + 1) * (X * Z2 + 1)) ** (n - 2)
        * xp ** ((n - 2) * (n - 3) // 2),
        "single": (X * var("z") + 1) ** (n - 1) * xp ** ((n - 1) * (n - 2) // 2),
        "unrefined": xp ** _half(n),
    }


def ff_multirow(n: int, m: int) -> SparsePoly:
    """X_n(x, x+1; z1..zm) in product form."""
    zs = [var(f"z{i}") for i in range(1, m + 1)]
    out = prod((X * z + 1 for z in zs), start=ONE) ** (n - m) * (X + 1) ** ((n - m) * (n - m - 1) // 2)
    for i in range(m):
        for j in range(i + 1, m):
            out = out * (X * zs[i] * zs[j] + 1)
    return out


def _at_ff(p: SparsePoly) -> SparsePoly:
    return p.subs({"y": X + 1})


# lambda-determinant

class Laurent:
    """Polynomial divided by a monomial; enough for lambda-determinants,
    which are Laurent polynomials in the matrix entries."""

    __slots__ = ("num", "den")

    def __init__(self, num, den: dict[str, int] | None = None):
        self.num = as_poly(num)
        self.den = {k: v for k, v in (den or {}).items() if v}

    @staticmethod
    def lift(v) -> "Laurent":
        return v if isinstance(v, Laurent) else Laurent(v)

    def _over(self, den: dict[str, int]) -> SparsePoly:
        extra = {k: den.get(k, 0) - self.den.get(k, 0) for k in den}
        return self.num * SparsePoly.monomial(extra) if any(extra.values()) else self.num

    def __add__(self, other):
        o = Laurent.lift(other)
        den = {k: max(self.den.get(k, 0), o.den.get(k, 0)) for k in set(self.den) | set(o.den)}
        return Laurent(self._over(den) + o._over(den), den)

    __radd__ = __add__

    def __mul__(self, other):
        o = Laurent.lift(other)
        den = dict(self.den)
        for k, v in o.den.items():
            den[k] = den.get(k, 0) + v
        return Laurent(self.num * o.num, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Laurent.lift(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        content = _monomial_content(o.num)
        rest = divexact(o.num, SparsePoly.monomial(content)) if content else o.num
        num = divexact(self.num, rest) * (SparsePoly.monomial(o.den) if o.den else 1)
        den = dict(self.den)
        for k, v in content.items():
            den[k] = den.get(k, 0) + v
        return Laurent(num, den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __sub__(self, other):
        return self + Laurent.lift(other) * -1

    def __eq__(self, other):
        o = Laurent.lift(other)
        return (self - o).is_zero()

    def as_poly(self) -> SparsePoly:
        """The polynomial value; fails if a negative power remains."""
        content = _monomial_content(self.num)
        if any(content.get(k, 0) < v for k, v in self.den.items()):
            raise ValueError("not a polynomial")
        return divexact(self.num, SparsePoly.monomial(self.den)) if self.den else self.num


def _monomial_content(p: SparsePoly) -> dict[str, int]:
    mins = None
    for exps, _ in p.terms():
        mins = list(exps) if mins is None else [min(a, b) for a, b in zip(mins, exps)]
    if mins is None:
        return {}
    return {v: e for v, e in zip(p.vars, mins) if e}


def _is_numeric(v) -> bool:
    return isinstance(v, (int, Fraction))


def _ring(matrix, x):
    numeric = _is_numeric(x) and all(_is_numeric(e) for row in matrix for e in row)
    if numeric:
        return [[Fraction(e) for e in row] for row in matrix], Fraction(x), numeric
    return [[Laurent(e) for e in row] for row in matrix], Laurent(x), numeric


def _finish(v, numeric: bool):
    if numeric:
        return v.numerator if v.denominator == 1 else v
    try:
        return v.as_poly()
    except ValueError:
        return v


def lambda_det_expansion(matrix: Sequence[Sequence], x=None):
    """Sum over ASM(n) of x^nu (x+1)^mu prod M_ij^A_ij."""
    x = X if x is None else x
    n = len(matrix)
    if n == 0:
        return 1
    m, xv, numeric = _ring(matrix, x)
    total = Fraction(0) if numeric else Laurent(0)
    for a in asmcore.enumerate_asms(n):
        s = asmcore.asm_stats(a)
        if numeric and s.mu and xv == -1:
            continue  # (x+1)^mu vanishes
        term = xv ** s.nu if numeric else Laurent(as_poly(x) ** s.nu)
        term = term * ((xv + 1) ** s.mu if numeric else Laurent((as_poly(x) + 1) ** s.mu))
        for i in range(n):
            for j in range(n):
                if a[i, j] == 1:
                    term = term * m[i][j]
                elif a[i, j] == -1:
                    if numeric and m[i][j] == 0:
                        raise DivisionByZero(f"entry ({i + 1},{j + 1}) is zero where an ASM has -1")
                    term = term / m[i][j]
        total = total + term
    return _finish(total, numeric)


def lambda_det_condensation(matrix: Sequence[Sequence], x=None):
    """Dodgson condensation with parameter x over contiguous minors."""
    x = X if x is None else x
    n = len(matrix)
    if n == 0:
        return 1
    m, xv, numeric = _ring(matrix, x)
    prev2 = None
    prev = m  # size-1 minors
    for size in range(2, n + 1):
        cur = []
        for i in range(n - size + 1):
            row = []
            for j in range(n - size + 1):
                top = prev[i][j] * prev[i + 1][j + 1] + xv * prev[i][j + 1] * prev[i + 1][j]
                if size == 2:
                    row.append(top)
                    continue
                d = prev2[i + 1][j + 1]
                if (d == 0) if numeric else d.is_zero():
                    raise SingularCondensation(f"central minor of size {size - 2} vanished")
                row.append(top / d)
            cur.append(row)
        prev2, prev = prev, cur
    return _finish(prev[0][0], numeric)


def lambda_det(matrix: Sequence[Sequence], x=None, route: str = "auto"):
    """The lambda-determinant; ``route`` is expansion, condensation or
    auto (condensation, falling back to the expansion on a singular minor)."""
    if route == "expansion":
        return lambda_det_expansion(matrix, x)
    if route == "condensation":
        return lambda_det_condensation(matrix, x)
    try:
        return lambda_det_condensation(matrix, x)
    except SingularCondensation:
        return lambda_det_expansion(matrix, x)


def zpower_matrix(n: int) -> list[list[SparsePoly]]:
    """Boundary entries are powers of z1..z4, interior entries are 1."""
    m = [[ONE for _ in range(n)] for _ in range(n)]
    if n == 1:
        return m
    for j in range(n - 1):
        m[0][j] = Z1 ** j
        m[n - 1][n - 1 - j] = Z3 ** j
    for i in range(n - 1):
        m[i][0] = Z4 ** i
        m[n - 1 - i][n - 1] = Z2 ** i
    m[0][n - 1] = (Z1 * Z2) ** (n - 1)
    m[n - 1][0] = (Z3 * Z4) ** (n - 1)
    return m


def _sub(m, r0, c0, size):
    return [row[c0:c0 + size] for row in m[r0:r0 + size]]


# refined ASM numbers at x = y = 1

@dataclass(frozen=True)
class RefinedNumbers:
    n: int
    total: int
    single: tuple[int, ...]
    opp: tuple[tuple[int, ...], ...]
    adj: tuple[tuple[int, ...], ...]

    def a(self, k: int) -> int:
        return self.single[k] if 0 <= k < self.n else 0

    def o(self, k1: int, k2: int) -> int:
        return self.opp[k1][k2] if 0 <= k1 < self.n and 0 <= k2 < self.n else 0

    def d(self, k1: int, k2: int) -> int:
        return self.adj[k1][k2] if 0 <= k1 < self.n and 0 <= k2 < self.n else 0


@lru_cache(maxsize=None)
def asm_number(n: int) -> int:
    """Product formula for |ASM(n)|; 1 for n = 0."""
    num = prod(factorial(3 * i + 1) for i in range(n))
    den = prod(factorial(n + i) for i in range(n))
    return num // den


def refined_number(n: int, k: int) -> int:
    if not 0 <= k <= n - 1:
        return 0
    num = factorial(n + k - 1) * factorial(2 * n - k - 2) * prod(factorial(3 * i + 1) for i in range(n - 1))
    den = (factorial(k) * factorial(n - k - 1) * factorial(2 * n - 2)
           * prod(factorial(n + i - 1) for i in range(n - 1)))
    q, r = divmod(num, den)
    assert r == 0
    return q


@lru_cache(maxsize=None)
def product_formulas(n: int) -> RefinedNumbers:
    """Refined numbers from the product formulas, with the doubly refined
    ones obtained from the singly refined ones."""
    if n < 1:
        raise ValueError("n >= 1 required")

    def a(m, k):
        return refined_number(m, k)

    prev = asm_number(n - 1)
    if n == 1:  # the difference formula needs a nontrivial A_{n-1,k}
        return RefinedNumbers(1, 1, (1,), ((1,),), ((1,),))
    opp = []
    for k1 in range(n):
        row = []
        for k2 in range(n):
            s = sum(a(n, k1 - i) * a(n - 1, k2 + i) + a(n - 1, k1 - i - 1) * a(n, k2 + i)
                    - a(n, k1 - i - 1) * a(n - 1, k2 + i) - a(n - 1, k1 - i - 1) * a(n, k2 + i + 1)
                    for i in range(min(k1, n - k2 - 1) + 1))
            q, r = divmod(s, prev)
            assert r == 0
            row.append(q)
        opp.append(tuple(row))
    adj = []
    for k1 in range(n):
        row = []
        for k2 in range(n):
            if k1 == k2 == 0:
                row.append(prev)
            elif k1 >= 1 and k2 >= 1:
                v = binom(k1 + k2 - 2, k1 - 1) * prev
                v -= sum(binom(k1 + k2 - i - j, k1 - i) * opp[i - 1][n - j]
                         for i in range(1, k1 + 1) for j in range(1, k2 + 1))
                row.append(v)
            else:
                row.append(0)
        adj.append(tuple(row))
    return RefinedNumbers(n, asm_number(n), tuple(a(n, k) for k in range(n)),
                          tuple(opp), tuple(adj))


def _unity(p: SparsePoly) -> SparsePoly:
    return p.subs({"x": 1, "y": 1})


def _coeff_matrix(p: SparsePoly, n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(p.coefficient_of({"z1": k1, "z2": k2})) for k2 in range(n))
                 for k1 in range(n))


@lru_cache(maxsize=None)
def refined_numbers_brute(n: int) -> RefinedNumbers:
    """The same numbers read off the enumeration oracle."""
    s = _unity(genfun.zsingle(n))
    single = tuple(int(s.coefficient_of({"z": k})) for k in range(n))
    return RefinedNumbers(n, int(_unity(genfun.zunref(n)).constant_value()), single,
                          _coeff_matrix(_unity(genfun.zopp(n)), n),
                          _coeff_matrix(_unity(genfun.zadj(n)), n))


# K-matrix determinants

def _kmat(n: int, which: str):
    def base(i, k):
        return binom(i - 1, i - k) * X ** k * Y ** (i - k)

    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            e = SparsePoly.constant(-1 if i == j + 1 else 0, ())
            plain_cols = {"unrefined": n, "single": n - 1, "opp": n - 2}[which]
            if j < plain_cols:
                e = e + sum((base(i, k) * binom(j + 1, k) for k in range(min(i, j + 1) + 1)),
                            SparsePoly.constant(0, ()))
            elif which == "single":
                for k in range(i + 1):
                    for l in range(k + 1):
                        e = e + base(i, k) * binom(n - l - 1, k - l) * var("z") ** l
            elif j == n - 2:
                for k in range(i + 1):
                    for l in range(k + 1):
                        e = e + base(i, k) * binom(n - l - 2, k - l) * Z2 ** (l + 1)
            else:
                for k in range(i + 1):
                    for l in range(k + 1):
                        c = base(i, k) * binom(n - l - 2, k - l)
                        for mm in range(l + 1):
                            e = e + c * Z1 ** mm * Z2 ** (l - mm)
            row.append(e)
        rows.append(row)
    return rows


def kmatrix(n: int, which: str = "opp") -> list[list[SparsePoly]]:
    """Entries of K_n for ``which`` in {opp, single, unrefined}."""
    if which not in ("opp", "single", "unrefined"):
        raise ValueError(f"unknown K-matrix variant {which!r}")
    return _kmat(n, which)


def kmatrix_formulas(n: int, which: str = "opp") -> SparsePoly:
    return as_poly(det_exact(kmatrix(n, which)))


# descending plane partitions

def _qfact(n: int, q):
    out = 1
    for k in range(1, n + 1):
        out = out * sum((q ** i for i in range(k)), 0 * q)
    return out


def dpp_qformula(n: int, k: int | None = None, q=None):
    """q-product formula for DPPs with largest part at most n, optionally
    with exactly k parts equal to n.  ``q`` may be a number or a
    polynomial (default: the variable q)."""
    q = var("q") if q is None else q
    if k is not None and not 0 <= k <= n - 1:
        raise ValueError("need 0 <= k <= n-1")
    if k is None:
        num = prod((_qfact(3 * i + 1, q) for i in range(n)), start=1)
        den = prod((_qfact(n + i, q) for i in range(n)), start=1)
    else:
        num = (q ** (k * n) * _qfact(n + k - 1, q) * _qfact(2 * n - k - 2, q)
               * prod((_qfact(3 * i + 1, q) for i in range(n - 1)), start=1))
        den = (_qfact(k, q) * _qfact(n - k - 1, q) * _qfact(2 * n - 2, q)
               * prod((_qfact(n + i - 1, q) for i in range(n - 1)), start=1))
    if isinstance(num, SparsePoly) or isinstance(den, SparsePoly):
        return divexact(as_poly(num), as_poly(den))
    v = Fraction(num) / Fraction(den)
    return v.numerator if v.denominator == 1 else v


# X_n at x = y = 1 without the full symbolic determinant

def x_at_unity(n: int, m: int) -> SparsePoly:
    """X_n(1,1; z1..zm) by exact division of a univariate-row determinant."""
    if m == 0:
        return _unity(genfun.zunref(n))
    zs = [var(f"z{i + 1}") for i in range(m)]
    single = {k: _unity(genfun.zsingle(k)) for k in range(n - m + 1, n + 1)}
    mat = genfun.xfun_matrix(n, zs, single=lambda k, i: single[k].rename({"z": f"z{i + 1}"}))
    d = as_poly(det_exact(mat))
    d = divexact(d, genfun._vandermonde(zs))
    return divexact(d, as_poly(prod(asm_number(n - i) for i in range(1, m))))


# ---------------------------------------------------------------------------
# registered checks

@identity("permutation-case", "closedform", 1, 6)
def check_perm(n: int):
    """Formulas at y = 0 against the brute functions with y = 0."""
    kinds = {"quad": genfun.zqua, "tri": genfun.ztri, "adj": genfun.zadj,
             "opp": genfun.zopp, "single": genfun.zsingle, "unrefined": genfun.zunref}
    return [formula - kinds[k](n).subs({"y": 0}) for k, formula in perm_case(n).items()]


@identity("free-fermion-case", "closedform", 2, 6)
def check_ff(n: int):
    """Formulas at y = x + 1, the first three in product form."""
    f = freefermion_case(n)
    out = []
    for kind, brute in (("quad", genfun.zqua), ("tri", genfun.ztri), ("adj", genfun.zadj)):
        factor, rhs = f[kind]
        out.append(factor * _at_ff(brute(n)) - rhs)
    out.append(f["opp"] - _at_ff(genfun.zopp(n)))
    out.append(f["single"] - _at_ff(genfun.zsingle(n)))
    out.append(f["unrefined"] - _at_ff(genfun.zunref(n)))
    return out


@identity("free-fermion-quadratic", "closedform", 2, 6)
def check_ffquad(n: int):
    """Quadratic relation at y = x + 1, and its all-ones specialisation."""
    adj, alt = _at_ff(genfun.zadj(n - 1)), _at_ff(genfun.zadj_alt(n - 1))
    lhs = _at_ff(genfun.zqua(n)) * _at_ff(genfun.zunref(n - 2))
    rhs = (adj.rename({"z1": "z4", "z2": "z1"}) * adj.rename({"z1": "z2", "z2": "z3"})
           + X * Z1 * Z2 * Z3 * Z4 * alt * alt.rename({"z1": "z3", "z2": "z4"}))
    u = [_at_ff(genfun.zunref(k)) for k in (n, n - 1, n - 2)]
    return [lhs - rhs, u[0] * u[2] - (X + 1) * u[1] ** 2]


@identity("free-fermion-adjacent-sum", "closedform", 1, 6)
def check_ffzadj(n: int):
    """Adjacent-boundary function at y = x + 1 as a sum of products."""
    u = {k: _at_ff(genfun.zunref(k)) for k in range(n)}
    s = {k: _at_ff(genfun.zsingle(k)) for k in range(1, n)}
    total = u[n - 1]
    for i in range(1, n):
        term = divexact(u[n - 1] * s[i].rename({"z": "z1"}) * s[i].rename({"z": "z2"}),
                        u[i - 1] * u[i])
        total = total + X * Z1 * Z2 * term
    return [_at_ff(genfun.zadj(n)) - total]


@identity("free-fermion-multirow", "closedform", 1, 5)
def check_ff_multirow(n: int):
    """X_n at y = x + 1 factors completely."""
    return [_at_ff(genfun.xfun(n, m)) - ff_multirow(n, m) for m in range(0, min(n, 3) + 1)]


@identity("lambda-routes", "closedform", 1, 4)
def check_lambda_routes(n: int):
    """Expansion and condensation agree on a symbolic matrix; x = -1 gives det."""
    m = [[var(f"m{i}{j}") for j in range(n)] for i in range(n)]
    exp = Laurent.lift(lambda_det_expansion(m))
    return [(exp - lambda_det_condensation(m)).num,
            (Laurent.lift(lambda_det_expansion(m, -1)) - as_poly(det_exact(m))).num]


@identity("lambda-zpower", "closedform", 2, 5)
def check_lambda_zpower(n: int):
    """The z-power matrix expands to the free-fermion quad function and
    its corner minors to the adjacent ones."""
    m = zpower_matrix(n)
    full = lambda_det_expansion(m)
    tl = lambda_det_expansion(_sub(m, 0, 0, n - 1))
    br = lambda_det_expansion(_sub(m, 1, 1, n - 1))
    tr = lambda_det_expansion(_sub(m, 0, 1, n - 1))
    bl = lambda_det_expansion(_sub(m, 1, 0, n - 1))
    centre = lambda_det_expansion(_sub(m, 1, 1, n - 2)) if n > 2 else ONE
    adj, alt = _at_ff(genfun.zadj(n - 1)), _at_ff(genfun.zadj_alt(n - 1))
    return [
        full - _at_ff(genfun.zqua(n)),
        full * centre - (tl * br + X * tr * bl),
        tl * br - adj.rename({"z1": "z4", "z2": "z1"}) * adj.rename({"z1": "z2", "z2": "z3"}),
        X * tr * bl - X * Z1 * Z2 * Z3 * Z4 * alt * alt.rename({"z1": "z3", "z2": "z4"}),
        centre - _at_ff(genfun.zunref(n - 2)),
    ]


@identity("product-formulas", "closedform", 1, 6)
def check_product_formulas(n: int):
    """Product formulas for the refined numbers against enumeration."""
    p, b = product_formulas(n), refined_numbers_brute(n)
    out = [p.total - b.total, p.total - asmcore.count_asms(n)]
    out += [x - y for x, y in zip(p.single, b.single)]
    out += [p.o(i, j) - b.o(i, j) for i in range(n) for j in range(n)]
    out += [p.d(i, j) - b.d(i, j) for i in range(n) for j in range(n)]
    return out


@identity("refined-identities", "closedform", 1, 6)
def check_refined_identities(n: int):
    """Sums, symmetries and corner relations of the refined numbers."""
    r = refined_numbers_brute(n)
    prev = product_formulas(n - 1) if n > 1 else None
    a_prev = asm_number(n - 1)

    def ap(k):
        return prev.a(k) if prev else 0

    out = [sum(r.single) - r.total, r.a(0) - a_prev]
    for k in range(n):
        out.append(r.a(k) - r.a(n - 1 - k))
        out.append(sum(r.o(k, j) for j in range(n)) - r.a(k))
        out.append(sum(r.d(k, j) for j in range(n)) - r.a(k))
        out.append(r.d(k, 0) - (a_prev if k == 0 else 0))
        if n >= 2:
            out.append(r.o(k, 0) - ap(k))
            out.append(r.d(k + 1, n - 1) - ap(k) if k + 1 < n else 0)
        for j in range(n):
            out.append(r.o(k, j) - r.o(j, k))
            out.append(r.o(k, j) - r.o(n - 1 - k, n - 1 - j))
            out.append(r.d(k, j) - r.d(j, k))
    if n >= 2:
        for k in range(n):
            out.append(r.d(k, 1) - (sum(ap(i) for i in range(k - 1, n - 1)) - (a_prev if k == 0 else 0)))
        out.append(r.a(1) - (a_prev + sum(k * ap(k) for k in range(1, n - 1))))
        out.append(2 * r.a(1) - n * a_prev)
    return out


@identity("refined-recursions", "closedform", 1, 8)
def check_refined_recursions(n: int):
    """Recursions among unrefined, singly and doubly refined numbers."""
    r = product_formulas(n)
    out = []
    if n >= 2:
        out.append(asm_number(n) * factorial(2 * n - 2) * factorial(2 * n - 1)
                   - factorial(n - 1) * factorial(3 * n - 2) * asm_number(n - 1))
        out.append(4 * (2 * n - 1) * (2 * n - 3) * asm_number(n) * asm_number(n - 2)
                   - 3 * (3 * n - 2) * (3 * n - 4) * asm_number(n - 1) ** 2)
    for k in range(n + 1):
        out.append(k * (2 * n - k - 1) * r.a(k) - (n - k) * (n + k - 1) * r.a(k - 1))
    prev = product_formulas(n - 1) if n > 1 else None
    a_prev = asm_number(n - 1)

    def ap(k):
        return prev.a(k) if prev else 0

    def delta(a, b):
        return 1 if a == b else 0

    for k1 in range(n + 1):
        for k2 in range(n + 1):
            if n >= 2:
                out.append((r.o(k1 - 1, k2) - r.o(k1, k2 - 1)) * a_prev
                           - (r.a(k1 - 1) * ap(k2 - 1) - r.a(k1) * ap(k2 - 1)
                              - ap(k1 - 1) * r.a(k2 - 1) + ap(k1 - 1) * r.a(k2)))
            if k1 <= n - 1 and k2 <= n - 1:
                out.append(r.d(k1 - 1, k2) + r.d(k1, k2 - 1) - r.d(k1, k2)
                           - (r.o(k1 - 1, n - k2)
                              - (delta(k1, 1) - delta(k1, 0)) * (delta(k2, 1) - delta(k2, 0)) * a_prev))
    return out


def _solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Unique solution of an overdetermined consistent linear system."""
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0])
    piv_row = 0
    pivots = []
    for c in range(ncols):
        p = next((r for r in range(piv_row, len(m)) if m[r][c] != 0), None)
        if p is None:
            raise ValueError("system is not of full column rank")
        m[piv_row], m[p] = m[p], m[piv_row]
        pv = m[piv_row][c]
        m[piv_row] = [v / pv for v in m[piv_row]]
        for r in range(len(m)):
            if r != piv_row and m[r][c] != 0:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[piv_row])]
        pivots.append(piv_row)
        piv_row += 1
    if any(row[-1] != 0 for row in m[piv_row:]):
        raise ValueError("inconsistent system")
    return [m[p][-1] for p in pivots]


def solve_singly_refined(n: int) -> list[Fraction]:
    """A_{n,0..n-1} from the alternating linear relations, the symmetry
    A_{n,k} = A_{n,n-1-k} and A_{n,0} = A_{n-1}."""
    rows, rhs = [], []
    for k in range(n):
        row = [Fraction(0)] * n
        row[k] += 1
        for i in range(k + 1):
            row[i] -= (-1) ** i * binom(n + k - 1, k - i)
        rows.append(row)
        rhs.append(Fraction(0))
        sym = [Fraction(0)] * n
        sym[k] += 1
        sym[n - 1 - k] -= 1
        rows.append(sym)
        rhs.append(Fraction(0))
    first = [Fraction(0)] * n
    first[0] = Fraction(1)
    rows.append(first)
    rhs.append(Fraction(asm_number(n - 1)))
    return _solve(rows, rhs)


@identity("singly-refined-linear", "closedform", 1, 8)
def check_rasm_linear(n: int):
    """Alternating binomial relation, and the numbers it determines."""
    r = product_formulas(n)
    out = [r.a(k) - sum((-1) ** i * binom(n + k - 1, k - i) * r.a(i) for i in range(k + 1))
           for k in range(n)]
    out += [v - r.a(k) for k, v in enumerate(solve_singly_refined(n))]
    return out


def hyp_polynomial(n: int) -> SparsePoly:
    """A_{n-1} times the terminating 2F1(1-n, n; 2-2n; z), summed to i = n-1."""
    z = var("z")
    out = SparsePoly.constant(0, ())
    for i in range(n):
        c = Fraction(rising(1 - n, i) * rising(n, i), rising(2 - 2 * n, i) * factorial(i))
        out = out + c * z ** i
    return out * asm_number(n - 1)


@identity("hypergeometric", "closedform", 1, 7)
def check_hypergeometric(n: int):
    """Singly refined function at x = y = 1: 2F1 form and its ODE."""
    p = _unity(genfun.zsingle(n)).with_vars(("z",))
    z = var("z")
    d1 = p.derivative("z")
    d2 = d1.derivative("z")
    ode = z * (1 - z) * d2 + 2 * (1 - n - z) * d1 + n * (n - 1) * p
    return [p - hyp_polynomial(n), ode]


def _inv_second(p: SparsePoly, power: int) -> SparsePoly:
    """z2^power * p(z1, 1/z2)."""
    return p.monomial_map({"z2": {"z2": -1}}, {"z2": power})


@identity("opposite-unity", "closedform", 1, 6)
def check_opposite_unity(n: int):
    """Opposite and adjacent functions at x = y = 1 through singly refined ones."""
    a_prev = asm_number(n - 1)
    opp, adj = _unity(genfun.zopp(n)), _unity(genfun.zadj(n))
    out = []
    if n >= 2:
        s, sp = _unity(genfun.zsingle(n)), _unity(genfun.zsingle(n - 1))
        out.append((Z1 - Z2) * opp * a_prev
                   - ((Z1 - 1) * Z2 * s.rename({"z": "z1"}) * sp.rename({"z": "z2"})
                      - Z1 * (Z2 - 1) * sp.rename({"z": "z1"}) * s.rename({"z": "z2"})))
    out.append((Z1 + Z2 - 1) * adj - (Z1 * _inv_second(opp, n) - (Z1 - 1) * (Z2 - 1) * a_prev))
    return out


@identity("opposite-determinant", "closedform", 1, 6)
def check_opposite_determinant(n: int):
    """Determinant of the opposite-boundary number matrix."""
    r = refined_numbers_brute(n)
    d = det_exact([list(row) for row in r.opp])
    expected = (-1) ** (n * (n + 1) // 2 + 1) * Fraction(asm_number(n - 1)) ** (n - 3)
    return [d - expected]


def _bar_adj_prev(n: int) -> SparsePoly:
    return _unity(genfun.zadj(n - 1))


def _unity_quad_common(n: int):
    q = [None, Z4 * Z1 - Z4 + 1, Z1 * Z2 - Z1 + 1, Z2 * Z3 - Z2 + 1, Z3 * Z4 - Z3 + 1]
    tail = ((Z1 - 1) * (Z2 - 1) * (Z3 - 1) * (Z4 - 1)
            * (q[2] * q[4] * (Z2 * Z4) ** (n - 1) + q[3] * q[1] * (Z1 * Z3) ** (n - 1))
            * asm_number(n - 2))
    return q, tail


def _opp_terms(n: int, q) -> SparsePoly:
    o = _unity(genfun.zopp(n - 1))
    return ((Z2 - 1) * (Z3 - 1) * q[2] * q[4] * Z4 * Z1 * Z2 ** (n - 1) * o.rename({"z1": "z4", "z2": "z1"})
            + (Z3 - 1) * (Z4 - 1) * q[3] * q[1] * Z1 * Z2 * Z3 ** (n - 1) * o
            + (Z4 - 1) * (Z1 - 1) * q[4] * q[2] * Z2 * Z3 * Z4 ** (n - 1) * o.rename({"z1": "z2", "z2": "z3"})
            + (Z1 - 1) * (Z2 - 1) * q[1] * q[3] * Z3 * Z4 * Z1 ** (n - 1) * o.rename({"z1": "z3", "z2": "z4"}))


@identity("unity-quad", "closedform", 2, 6)
def check_unity_quad(n: int):
    """Three expressions for the alternative quad function at x = y = 1."""
    q, tail = _unity_quad_common(n)
    lhs = q[1] * q[2] * q[3] * q[4] * _unity(genfun.zqua_alt(n))
    out = []
    if n >= 4:
        det_term = Z1 * Z2 * Z3 * Z4 * x_at_unity(n, 4)
        adj = _bar_adj_prev(n)

        def inv_first(a, b):  # (.)^(n-1) Z^adj_{n-1}(1/a, b) with the a-power cleared
            return adj.monomial_map({"z1": {a: -1}, "z2": {b: 1}}, {a: n - 1})

        adj_terms = ((Z2 - 1) * (Z3 - 1) * q[1] * q[2] * q[4] * Z2 ** (n - 1) * inv_first("z4", "z1")
                     + (Z3 - 1) * (Z4 - 1) * q[2] * q[3] * q[1] * Z3 ** (n - 1) * inv_first("z1", "z2")
                     + (Z4 - 1) * (Z1 - 1) * q[3] * q[4] * q[2] * Z4 ** (n - 1) * inv_first("z2", "z3")
                     + (Z1 - 1) * (Z2 - 1) * q[4] * q[1] * q[3] * Z1 ** (n - 1) * inv_first("z3", "z4"))
        out.append(lhs - (det_term + adj_terms - tail))
        out.append(lhs - (det_term + _opp_terms(n, q) + tail))
    o = _unity(genfun.zopp(n - 1))
    quad = ((q[2] * (Z1 * Z2 - Z2 + 1) * q[4] * (Z3 * Z4 - Z4 + 1)
             * o.rename({"z1": "z4", "z2": "z1"}) * o.rename({"z1": "z2", "z2": "z3"}))
            - (q[1] * (Z4 * Z1 - Z1 + 1) * q[3] * (Z2 * Z3 - Z3 + 1)
               * o * o.rename({"z1": "z3", "z2": "z4"})))
    scale = asm_number(n - 2) * (Z1 - Z3) * (Z2 - Z4)
    out.append(scale * (lhs - _opp_terms(n, q) - tail) - Z1 * Z2 * Z3 * Z4 * quad)
    return out


@identity("unity-triple", "closedform", 2, 6)
def check_unity_triple(n: int):
    """Two expressions for the triply refined function at x = y = 1."""
    t = _unity(genfun.ztri(n))
    lhs = ((Z1 * Z3 - Z3 + 1) * (Z2 * Z3 - Z2 + 1)
           * t.monomial_map({"z3": {"z3": -1}}, {"z3": n - 1}))
    sp = _unity(genfun.zsingle(n - 1))
    s1, s2 = sp.rename({"z": "z1"}), sp.rename({"z": "z2"})
    rest = ((Z2 - 1) * (Z3 - 1) * (Z1 * Z3 - Z3 + 1) * Z1 * Z2 ** (n - 1) * s1
            + (Z1 - 1) * (Z3 - 1) * (Z2 * Z3 - Z2 + 1) * Z3 ** (n - 1) * s2)
    out = []
    if n >= 3:
        out.append(lhs - (Z1 * Z3 * x_at_unity(n, 3) + rest))
    o = _unity(genfun.zopp(n - 1))
    pair = ((Z1 * Z3 - Z1 + 1) * (Z1 * Z3 - Z3 + 1) * Z2 * s1 * o.rename({"z1": "z2", "z2": "z3"})
            - (Z2 * Z3 - Z2 + 1) * (Z2 * Z3 - Z3 + 1) * Z1 * s2 * o.rename({"z2": "z3"}))
    scale = asm_number(n - 2) * (Z1 - Z2) * (Z3 - 1)
    out.append(scale * (lhs - rest) - Z1 * Z3 * pair)
    return out


def corner_free_brute(n: int) -> SparsePoly:
    """Quad function over ASMs with zeros in all four corners, with
    boundary exponents shifted so that they start at 0."""
    terms: dict[tuple, int] = {}
    for (nu, mu, t, r, b, l, *corners), count in genfun.boundary_histogram(n).items():
        if any(corners):
            continue
        e = (nu, mu, t - 1, n - 2 - r, b - 1, n - 2 - l)
        terms[e] = terms.get(e, 0) + count
    return SparsePoly(terms, genfun.QUAD_VARS)


@identity("corner-free-quad", "closedform", 2, 6)
def check_corner_free(n: int):
    """Corner-free quad function through the alternative quad function."""
    adj, alt = genfun.zadj(n - 1), genfun.zadj_alt(n - 1)
    rhs = (genfun.zqua_alt(n)
           - adj.monomial_map({"z1": {"z4": -1}, "z2": {"z1": 1}}, {"z4": n - 1, "z2": n - 1})
           - adj.monomial_map({"z1": {"z2": -1}, "z2": {"z3": 1}}, {"z2": n - 1, "z4": n - 1})
           - Z1 * (X * Z3) ** (n - 1) * alt.monomial_map({"z2": {"z2": -1}}, {"z2": n - 2})
           - Z3 * (X * Z1) ** (n - 1) * alt.monomial_map({"z1": {"z3": 1}, "z2": {"z4": -1}},
                                                         {"z4": n - 2})
           + ((Z2 * Z4) ** (n - 1) + X ** (2 * n - 3) * (Z1 * Z3) ** (n - 1)) * genfun.zunref(n - 2))
    return [Z1 * Z2 * Z3 * Z4 * corner_free_brute(n) - rhs]


@identity("opposite-schur", "closedform", 1, 5)
def check_opposite_schur(n: int, seed: int = 0):
    """Opposite function at x = y = 1 as a Schur function at q = omega."""
    from .exactmath import OMEGA
    from .points import PointSampler
    from .sixvertex import double_staircase, schur_eval

    rng = PointSampler(seed * 1000 + n)
    z1, z2 = rng.distinct(2)
    opp = _unity(genfun.zopp(n)).evaluate({"z1": z1, "z2": z2})
    out = []
    for qv in (OMEGA, OMEGA.conjugate()):
        w = [(qv * z + 1) / (z + qv) for z in (z1, z2)]
        s = schur_eval(double_staircase(n), w + [1] * (2 * n - 2))
        rhs = (qv ** 2 * (z1 + qv) * (z2 + qv)) ** (n - 1) * s / Fraction(3) ** _half(n)
        out.append(rhs - opp)
    return out


@identity("tableau-count", "closedform", 1, 5)
def check_tableau_count(n: int):
    """SSYT count of the double staircase with entries up to 2n."""
    from .sixvertex import double_staircase, schur_eval

    return [schur_eval(double_staircase(n), [1] * (2 * n)) - 3 ** _half(n) * asm_number(n)]


@identity("kmatrix-determinants", "closedform", 1, 6)
def check_kmatrix(n: int):
    """K-matrix determinants for the opposite, single and unrefined functions."""
    return [kmatrix_formulas(n, "opp") - genfun.zopp(n),
            kmatrix_formulas(n, "single") - genfun.zsingle(n),
            kmatrix_formulas(n, "unrefined") - genfun.zunref(n)]


@identity("opposite-product", "closedform", 2, 6)
def check_opposite_product(n: int):
    """Opposite function times Z_(n-1) through singly refined functions."""
    s, sp = genfun.zsingle(n), genfun.zsingle(n - 1)
    lhs = (Z1 - Z2) * genfun.zopp(n) * genfun.zunref(n - 1)
    rhs = ((Z1 - 1) * Z2 * s.rename({"z": "z1"}) * sp.rename({"z": "z2"})
           - Z1 * (Z2 - 1) * sp.rename({"z": "z1"}) * s.rename({"z": "z2"}))
    return [lhs - rhs]


@identity("dpp-products", "closedform", 1, 6)
def check_dpp(n: int):
    """q-products: q = 1 values and the sum over k."""
    out = [dpp_qformula(n, q=1) - asm_number(n)]
    out += [dpp_qformula(n, k, q=1) - refined_number(n, k) for k in range(n)]
    total = sum((dpp_qformula(n, k) for k in range(n)), SparsePoly.constant(0, ()))
    out.append(total - dpp_qformula(n))
    return out
