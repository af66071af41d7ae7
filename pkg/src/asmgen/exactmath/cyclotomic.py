"""Exact arithmetic in the field of 24th roots of unity.

An element is a rational combination of 1, z, ..., z^7 where z is a
primitive 24th root of unity, reduced with z^8 = z^4 - 1.  The field holds
i, the cube roots of unity and square roots of both, which is everything the
special-point evaluations need.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import DivisionByZero

DEGREE = 8
CONDUCTOR = 24


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _reduce(coeffs: list) -> tuple:
    # z^k = z^(k-4) - z^(k-8) for k >= 8
    c = list(coeffs)
    for k in range(len(c) - 1, DEGREE - 1, -1):
        v = c[k]
        if v:
            c[k - 4] += v
            c[k - 8] -= v
    c = c[:DEGREE] + [0] * (DEGREE - len(c))
    return tuple(_norm(v) for v in c)


class CycNum:
    """Element of Q(z) with z a primitive 24th root of unity."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence = (0,)):
        coords = list(coords)
        if len(coords) > DEGREE:
            self.coords = _reduce(coords)
        else:
            self.coords = tuple(_norm(Fraction(v)) if not isinstance(v, int) else v
                                for v in coords) + (0,) * (DEGREE - len(coords))

    @classmethod
    def _raw(cls, coords: tuple) -> "CycNum":
        n = object.__new__(cls)
        n.coords = coords
        return n

    @classmethod
    def rational(cls, r) -> "CycNum":
        return cls((r,))

    @classmethod
    def zeta_power(cls, k: int) -> "CycNum":
        k %= CONDUCTOR
        return cls._raw(_reduce([0] * k + [1]))

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def to_rational(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0]

    @staticmethod
    def _coerce(other):
        if isinstance(other, CycNum):
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum._raw((_norm(other),) + (0,) * (DEGREE - 1))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNum._raw(tuple(_norm(a + b) for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum._raw(tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNum._raw(tuple(_norm(a - b) for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNum._raw(tuple(_norm(a * other) for a in self.coords))
        if not isinstance(other, CycNum):
            return NotImplemented
        prod = [0] * (2 * DEGREE - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        prod[i + j] += a * b
        return CycNum._raw(_reduce(prod))

    __rmul__ = __mul__

    def _mult_matrix(self) -> list[list]:
        cols = []
        basis = CycNum._raw((1,) + (0,) * (DEGREE - 1))
        z = CycNum.zeta_power(1)
        for _ in range(DEGREE):
            cols.append((self * basis).coords)
            basis = basis * z
        return [[Fraction(cols[j][i]) for j in range(DEGREE)] for i in range(DEGREE)]

    def inverse(self) -> "CycNum":
        if not any(self.coords):
            raise DivisionByZero("inverse of zero in cyclotomic field")
        # solve (multiplication by self) v = 1 by Gauss-Jordan elimination
        m = self._mult_matrix()
        rhs = [Fraction(1)] + [Fraction(0)] * (DEGREE - 1)
        for col in range(DEGREE):
            piv = next(r for r in range(col, DEGREE) if m[r][col])
            m[col], m[piv] = m[piv], m[col]
            rhs[col], rhs[piv] = rhs[piv], rhs[col]
            inv = 1 / m[col][col]
            m[col] = [v * inv for v in m[col]]
            rhs[col] *= inv
            for r in range(DEGREE):
                if r != col and m[r][col]:
                    f = m[r][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[col])]
                    rhs[r] -= f * rhs[col]
        return CycNum._raw(tuple(_norm(v) for v in rhs))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DivisionByZero("division by zero")
            return CycNum._raw(tuple(_norm(Fraction(a) / other) for a in self.coords))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CycNum._raw((1,) + (0,) * (DEGREE - 1))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def conjugate(self) -> "CycNum":
        """Complex conjugation, the automorphism z -> z^-1."""
        out = CycNum._raw((0,) * DEGREE)
        for k, a in enumerate(self.coords):
            if a:
                out = out + CycNum.zeta_power(-k) * a
        return out

    def galois(self, k: int) -> "CycNum":
        """The automorphism z -> z^k for k coprime to 24."""
        out = CycNum._raw((0,) * DEGREE)
        for j, a in enumerate(self.coords):
            if a:
                out = out + CycNum.zeta_power(j * k) * a
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        parts = []
        for k, a in enumerate(self.coords):
            if a:
                parts.append(f"{a}" if k == 0 else f"({a})*z^{k}")
        return "CycNum(" + (" + ".join(parts) or "0") + ")"


ZETA = CycNum.zeta_power(1)
I = CycNum.zeta_power(6)
OMEGA = CycNum.zeta_power(8)
# square roots used for the spectral parameter q^(1/2)
SQRT_OMEGA = CycNum.zeta_power(4)
SQRT_I = CycNum.zeta_power(3)
SQRT3 = CycNum.zeta_power(2) + CycNum.zeta_power(-2)


def cyc_arith(op: str, a, b=None):
    """Dispatch field operations by name: add, sub, mul, div, neg, inv."""
    a = CycNum._coerce(a)
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    b = CycNum._coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown field operation {op!r}")
