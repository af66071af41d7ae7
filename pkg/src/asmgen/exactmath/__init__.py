"""Exact arithmetic substrate: rationals, sparse polynomials, the 24th
cyclotomic field and fraction-free linear algebra."""

from fractions import Fraction
from math import comb, factorial

from .cyclotomic import I, OMEGA, SQRT3, SQRT_I, SQRT_OMEGA, ZETA, CycNum, cyc_arith
from .linalg import (
    bareiss_det,
    cofactor_det,
    condensation_minors,
    desnanot_jacobi_residual,
    det_exact,
    gauss_det,
    partial_bazin_sides,
    polarized_bazin_sides,
    submatrix,
)
from .poly import (
    SparsePoly,
    as_poly,
    divexact,
    divmod_poly,
    from_json_obj,
    poly_arith,
    poly_divexact,
    sort_vars,
    to_json_obj,
    var,
    var_key,
    variables,
)

BigRational = Fraction


def binom(a: int, b: int) -> int:
    """Binomial coefficient for all integers a, b.

    Uses the extension obtained as a limit of Gamma-function ratios:
    C(a, b) = 0 for b < 0 <= a, the falling factorial a(a-1)...(a-b+1)/b!
    for b >= 0 (so C(-1, 0) = 1), and (-1)^(a-b) C(-b-1, a-b) when
    b <= a < 0 (so C(-1, -1) = 1).
    """
    if b >= 0:
        if a >= 0:
            return comb(a, b) if b <= a else 0
        # C(a, b) = (-1)^b C(b - a - 1, b) for negative a
        return (-1) ** b * comb(b - a - 1, b)
    if a >= 0 or b > a:
        return 0
    return (-1) ** (a - b) * comb(-b - 1, a - b)


def falling(a, k: int):
    out = 1
    for i in range(k):
        out *= a - i
    return out


def rising(a, k: int):
    """Pochhammer symbol (a)_k."""
    out = 1
    for i in range(k):
        out *= a + i
    return out


__all__ = [
    "BigRational", "CycNum", "Fraction", "I", "OMEGA", "SQRT3", "SQRT_I", "SQRT_OMEGA",
    "SparsePoly", "ZETA", "as_poly", "bareiss_det", "binom", "cofactor_det",
    "condensation_minors", "cyc_arith", "desnanot_jacobi_residual", "det_exact",
    "divexact", "divmod_poly", "factorial", "falling", "from_json_obj", "gauss_det",
    "partial_bazin_sides", "poly_arith", "poly_divexact", "polarized_bazin_sides",
    "rising", "sort_vars", "submatrix", "to_json_obj", "var", "var_key", "variables",
]
