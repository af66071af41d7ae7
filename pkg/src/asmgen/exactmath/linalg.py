"""Exact determinants and minors.

Matrices are plain nested sequences.  Entries may be Python integers,
fractions, cyclotomic numbers or sparse polynomials; mixed input is promoted
to the widest type present.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import NonSquare
from .cyclotomic import CycNum
from .poly import SparsePoly, as_poly, divexact

Matrix = Sequence[Sequence]

CUTOFF = 4


def _check_square(m: Matrix) -> int:
    n = len(m)
    if any(len(row) != n for row in m):
        raise NonSquare(f"matrix is not square ({n} rows)")
    return n


def cofactor_det(m: Matrix):
    """Laplace expansion along the first row (reference implementation)."""
    n = _check_square(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for j in range(n):
        if not m[0][j]:
            continue
        sub = [row[:j] + row[j + 1:] for row in (list(r) for r in m[1:])]
        term = m[0][j] * cofactor_det(sub)
        total = total + term if j % 2 == 0 else total - term
    return total


def bareiss_det(m: Matrix):
    """Fraction-free elimination; every intermediate division is exact."""
    n = _check_square(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    poly = any(isinstance(v, SparsePoly) for row in a for v in row)
    if poly:
        a = [[as_poly(v) for v in row] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return SparsePoly.constant(0) if poly else 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            f = rowi[k]
            for j in range(k + 1, n):
                v = rowi[j] * piv - f * rowk[j]
                if poly:
                    rowi[j] = divexact(v, prev) if not (isinstance(prev, int) and prev == 1) else v
                elif isinstance(v, int) and isinstance(prev, int):
                    rowi[j] = v // prev
                else:
                    rowi[j] = v / prev
            rowi[k] = 0
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def gauss_det(m: Matrix):
    """Determinant over a field by elimination with division."""
    n = _check_square(m)
    a = [[Fraction(v) if isinstance(v, int) else v for v in row] for row in m]
    det = 1
    for k in range(n):
        piv_row = next((r for r in range(k, n) if a[r][k]), None)
        if piv_row is None:
            return 0
        if piv_row != k:
            a[k], a[piv_row] = a[piv_row], a[k]
            det = -det
        piv = a[k][k]
        det = det * piv
        inv = 1 / piv
        for i in range(k + 1, n):
            f = a[i][k]
            if f:
                f = f * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    if isinstance(det, Fraction) and det.denominator == 1:
        return det.numerator
    return det


def det_exact(m: Matrix):
    """Exact determinant of a square matrix of rationals, cyclotomic
    numbers or polynomials."""
    n = _check_square(m)
    if n <= CUTOFF:
        d = cofactor_det(m)
    elif any(isinstance(v, SparsePoly) for row in m for v in row):
        d = bareiss_det(m)
    elif any(isinstance(v, CycNum) for row in m for v in row):
        d = gauss_det(m)
    elif all(isinstance(v, int) for row in m for v in row):
        d = bareiss_det(m)
    else:
        d = gauss_det(m)
    if isinstance(d, Fraction) and d.denominator == 1:
        return d.numerator
    return d


def submatrix(m: Matrix, del_rows: Sequence[int] = (), del_cols: Sequence[int] = ()) -> list[list]:
    """Delete the listed (0-based) rows and columns."""
    dr, dc = set(del_rows), set(del_cols)
    return [[v for j, v in enumerate(row) if j not in dc]
            for i, row in enumerate(m) if i not in dr]


def condensation_minors(m: Matrix) -> dict[str, list[list]]:
    """The five minors of the Desnanot-Jacobi identity: central, top-left,
    top-right, bottom-left and bottom-right."""
    n = len(m)
    return {
        "C": submatrix(m, (0, n - 1), (0, n - 1)),
        "TL": submatrix(m, (n - 1,), (n - 1,)),
        "TR": submatrix(m, (n - 1,), (0,)),
        "BL": submatrix(m, (0,), (n - 1,)),
        "BR": submatrix(m, (0,), (0,)),
    }


def desnanot_jacobi_residual(m: Matrix):
    """det M det M_C - (det M_TL det M_BR - det M_TR det M_BL); zero always."""
    parts = condensation_minors(m)
    d = {k: det_exact(v) for k, v in parts.items()}
    return det_exact(m) * d["C"] - (d["TL"] * d["BR"] - d["TR"] * d["BL"])


def _minor_deleting(m: Matrix, rows: Sequence[int], cols: Sequence[int] = ()):
    return det_exact(submatrix(m, [r - 1 for r in rows], [c - 1 for c in cols]))


def partial_bazin_sides(m: Matrix, ks: Sequence[int], ls: Sequence[int], ps: Sequence[int]):
    """Both sides of the minor identity for an (n+m-1) x n matrix, with
    1-based deleted row lists ``ks`` (length m), ``ls`` and deleted column
    list ``ps`` (each length m-1)."""
    mm = len(ks)
    lhs = _minor_deleting(m, ls)
    for i in range(1, mm):
        lhs = lhs * _minor_deleting(m, list(ks) + list(ls[:i - 1]), ps[:i])
    entries = [[_minor_deleting(m, list(ks[:i]) + list(ks[i + 1:]) + list(ls[:j]), ps[:j])
                for j in range(mm)] for i in range(mm)]
    return lhs, det_exact(entries)


def polarized_bazin_sides(m: Matrix, ks: Sequence[int], ls: Sequence[int], qs: Sequence[int]):
    """Both sides of the polarized Bazin identity for an (n+2m-2) x n matrix."""
    mm = len(ks)
    lhs = _minor_deleting(m, list(ls) + list(qs))
    for i in range(1, mm):
        lhs = lhs * _minor_deleting(m, list(ks) + list(ls[:i - 1]) + list(qs[i:]))
    entries = [[_minor_deleting(m, list(ks[:i]) + list(ks[i + 1:]) + list(ls[:j]) + list(qs[j:]))
                for j in range(mm)] for i in range(mm)]
    return lhs, det_exact(entries)
