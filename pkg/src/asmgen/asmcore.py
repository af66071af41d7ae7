"""Alternating sign matrices: validation, enumeration, statistics,
symmetries and the six-vertex correspondence.

Rows and columns are indexed from 0 in code.  Per-row and per-column
statistic vectors therefore hold row 1 of the usual 1-based convention at
index 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import kernels
from .errors import InvalidConfig, NotAlternating

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Asm:
    """A validated alternating sign matrix."""

    entries: Matrix

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def rows(self) -> Matrix:
        return self.entries

    def __str__(self) -> str:
        return format_asm(self)


@dataclass(frozen=True)
class AsmStats:
    nu: int
    mu: int
    rhoT: int
    rhoR: int
    rhoB: int
    rhoL: int
    nuRow: tuple[int, ...]
    nuCol: tuple[int, ...]
    muRow: tuple[int, ...]
    muCol: tuple[int, ...]
    corners: tuple[int, int, int, int]  # A11, A1n, Ann, An1


@dataclass(frozen=True)
class SixVertexConfig:
    """Vertex types (1..6) on the n x n grid with domain-wall boundary."""

    types: Matrix

    @property
    def n(self) -> int:
        return len(self.types)

    def count(self, kind: int) -> int:
        return sum(row.count(kind) for row in self.types)

    def row_count(self, i: int, kind: int) -> int:
        return self.types[i].count(kind)

    def col_count(self, j: int, kind: int) -> int:
        return sum(1 for row in self.types if row[j] == kind)


# validation and text format

def _partial_sums_ok(line: Sequence[int]) -> bool:
    s = 0
    for v in line:
        s += v
        if s not in (0, 1):
            return False
    return s == 1


def validate_asm(m: Iterable[Iterable[int]]) -> Asm:
    rows = tuple(tuple(int(v) for v in row) for row in m)
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise NotAlternating("matrix must be square and nonempty")
    for i, r in enumerate(rows):
        if any(v not in (-1, 0, 1) for v in r):
            raise NotAlternating(f"row {i + 1} has an entry outside {{-1, 0, 1}}")
        if not _partial_sums_ok(r):
            raise NotAlternating(f"row {i + 1} is not alternating with sum 1")
    for j in range(n):
        if not _partial_sums_ok([r[j] for r in rows]):
            raise NotAlternating(f"column {j + 1} is not alternating with sum 1")
    return Asm(rows)


def format_asm(a: Asm) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in a.entries)


def parse_asms(text: str) -> list[Asm]:
    """Parse blank-line separated matrices in the text format."""
    out, block = [], []
    for line in text.splitlines() + [""]:
        line = line.strip()
        if line:
            block.append([int(v) for v in line.split()])
        elif block:
            out.append(validate_asm(block))
            block = []
    return out


# enumeration

def enumerate_asms(n: int) -> Iterator[Asm]:
    """Yield every n x n ASM once.

    Order: depth-first over rows, where the candidates for each next row
    are taken in decreasing lexicographic order of the resulting partial
    column-sum vector (so the identity comes first and the anti-diagonal
    permutation matrix last among permutation matrices).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    for rows in kernels.iter_matrices(n):
        yield Asm(rows)


def count_asms(n: int) -> int:
    return kernels.count_asms(n)


def asm_product_formula(n: int) -> int:
    """prod_{i=0}^{n-1} (3i+1)! / (n+i)!"""
    from math import factorial

    num = den = 1
    for i in range(n):
        num *= factorial(3 * i + 1)
        den *= factorial(n + i)
    q, r = divmod(num, den)
    assert r == 0
    return q


# statistics

def _column_partials(e: Matrix) -> list[list[int]]:
    """c[i][j] = sum of column j over rows strictly above i."""
    n = len(e)
    c = [[0] * n for _ in range(n + 1)]
    for i in range(n):
        for j in range(n):
            c[i + 1][j] = c[i][j] + e[i][j]
    return c


def _row_partials(e: Matrix) -> list[list[int]]:
    """r[i][j] = sum of row i over columns up to and including j."""
    out = []
    for row in e:
        s, acc = 0, []
        for v in row:
            s += v
            acc.append(s)
        out.append(acc)
    return out


def asm_stats(a: Asm, check: bool = False) -> AsmStats:
    e = a.entries
    n = a.n
    c = _column_partials(e)
    r = _row_partials(e)
    nu = 0
    nu_row = [0] * n
    nu_col = [0] * n
    for i in range(n):
        for j in range(n):
            nu += c[i][j] * r[i][j]
            if c[i][j] == r[i][j]:
                nu_row[i] += 1
                nu_col[j] += 1
    mu_row = [row.count(-1) for row in e]
    mu_col = [sum(1 for row in e if row[j] == -1) for j in range(n)]
    top, bottom = e[0], e[n - 1]
    first_col = [row[0] for row in e]
    last_col = [row[n - 1] for row in e]
    stats = AsmStats(
        nu=nu,
        mu=sum(mu_row),
        rhoT=top.index(1),
        rhoR=n - 1 - last_col.index(1),
        rhoB=n - 1 - bottom.index(1),
        rhoL=first_col.index(1),
        nuRow=tuple(nu_row),
        nuCol=tuple(nu_col),
        muRow=tuple(mu_row),
        muCol=tuple(mu_col),
        corners=(e[0][0], e[0][n - 1], e[n - 1][n - 1], e[n - 1][0]),
    )
    if check:
        if stats.nu != nu_double_sum(e):
            raise AssertionError("nu disagrees with the double-sum definition")
        rows2, cols2 = nu_row_col_sums(e)
        if rows2 != stats.nuRow or cols2 != stats.nuCol:
            raise AssertionError("per-row/column nu disagrees with the product-sum form")
    return stats


def nu_double_sum(e: Matrix) -> int:
    """sum of A_ij A_i'j' over i < i' and j' <= j."""
    n = len(e)
    total = 0
    for i in range(n):
        for j in range(n):
            if e[i][j]:
                for i2 in range(i + 1, n):
                    for j2 in range(j + 1):
                        total += e[i][j] * e[i2][j2]
    return total


def nu_row_col_sums(e: Matrix) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Per-row and per-column nu via the product-sum expression

    f(i, j) = sum_{i'<i, j'<=j} A_i'j A_ij' + sum_{i'>=i, j'>j} A_i'j A_ij'
    """
    n = len(e)
    f = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            s = 0
            for i2 in range(i):
                for j2 in range(j + 1):
                    s += e[i2][j] * e[i][j2]
            for i2 in range(i, n):
                for j2 in range(j + 1, n):
                    s += e[i2][j] * e[i][j2]
            f[i][j] = s
    return (tuple(sum(row) for row in f), tuple(sum(f[i][j] for i in range(n)) for j in range(n)))


# symmetries

def transpose(a: Asm) -> Asm:
    return Asm(tuple(zip(*a.entries)))


def quarter_turn(a: Asm) -> Asm:
    """Anticlockwise quarter turn: (A^Q)_ij = A_{j, n+1-i} in 1-based terms."""
    n = a.n
    e = a.entries
    return Asm(tuple(tuple(e[j][n - 1 - i] for j in range(n)) for i in range(n)))


def asm_symmetry(a: Asm, op: str) -> Asm:
    if op == "transpose":
        return transpose(a)
    if op == "quarter_turn":
        return quarter_turn(a)
    raise ValueError(f"unknown symmetry {op!r}")


# corner bijections

def corner_reduce(a: Asm) -> Asm:
    """Delete the first row and column of an ASM with A_11 = 1."""
    if a.entries[0][0] != 1:
        raise ValueError("top-left entry is not 1")
    return Asm(tuple(row[1:] for row in a.entries[1:]))


def near_corner_reduce(a: Asm) -> Asm:
    """For A_21 = 1 and A_{1,k+1} = 1: add 1 to A_{2,k+1}, then delete the
    first row and column."""
    e = [list(row) for row in a.entries]
    if a.n < 2 or e[1][0] != 1:
        raise ValueError("entry (2,1) is not 1")
    k = e[0].index(1)
    e[1][k] += 1
    return validate_asm(row[1:] for row in e[1:])


# six-vertex correspondence

def asm_to_sixvertex(a: Asm) -> SixVertexConfig:
    e = a.entries
    n = a.n
    c = _column_partials(e)
    r = _row_partials(e)
    types = []
    for i in range(n):
        row = []
        for j in range(n):
            v = e[i][j]
            if v == 1:
                row.append(5)
            elif v == -1:
                row.append(6)
            else:
                up, left = c[i][j], r[i][j]
                if up == 0 and left == 0:
                    row.append(1)
                elif up == 1 and left == 1:
                    row.append(2)
                elif up == 0:
                    row.append(3)
                else:
                    row.append(4)
        types.append(tuple(row))
    return SixVertexConfig(tuple(types))


def sixvertex_to_asm(cfg: SixVertexConfig | Sequence[Sequence[int]]) -> Asm:
    types = cfg.types if isinstance(cfg, SixVertexConfig) else tuple(tuple(r) for r in cfg)
    n = len(types)
    if n == 0 or any(len(r) != n for r in types):
        raise InvalidConfig("vertex-type matrix must be square and nonempty")
    if any(t not in (1, 2, 3, 4, 5, 6) for r in types for t in r):
        raise InvalidConfig("vertex types must lie in 1..6")
    m = [[1 if t == 5 else -1 if t == 6 else 0 for t in r] for r in types]
    try:
        a = validate_asm(m)
    except NotAlternating as exc:
        raise InvalidConfig(f"arrows inconsistent: {exc}") from exc
    if asm_to_sixvertex(a).types != types:
        raise InvalidConfig("arrows on some edge are inconsistent")
    return a


def sixvertex_stats(cfg: SixVertexConfig) -> dict[str, int]:
    """Statistics read off the vertex types."""
    n = cfg.n
    return {
        "nu": cfg.count(1),
        "mu": cfg.count(6),
        "rhoT": cfg.row_count(0, 1),
        "rhoR": cfg.col_count(n - 1, 2),
        "rhoB": cfg.row_count(n - 1, 2),
        "rhoL": cfg.col_count(0, 1),
    }
