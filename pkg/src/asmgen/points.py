"""Seeded generation of small exact rational sample points.

Draws come from ``random.Random(seed)``: numerator and denominator are
uniform on 1..13, the fraction is reduced, and a draw is rejected (and
redrawn) when it coincides with an earlier value of the same point or
when a caller-supplied predicate flags it as degenerate.  Every accepted
and rejected draw is appended to ``log`` so a run can be replayed.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Sequence

MAX_PART = 13


class PointSampler:
    def __init__(self, seed: int = 0):
        self.seed = seed
        self._rng = random.Random(seed)
        self.log: list[tuple[str, Fraction]] = []

    def rational(self, sign: bool = False) -> Fraction:
        p = self._rng.randint(1, MAX_PART)
        q = self._rng.randint(1, MAX_PART)
        v = Fraction(p, q)
        if sign and self._rng.random() < 0.5:
            v = -v
        return v

    def distinct(self, k: int, avoid: Sequence[Fraction] = (), sign: bool = False,
                 bad: Callable[[list[Fraction], Fraction], bool] | None = None,
                 max_tries: int = 10_000) -> list[Fraction]:
        """``k`` pairwise distinct values, none in ``avoid``, none flagged by ``bad``."""
        out: list[Fraction] = []
        tries = 0
        while len(out) < k:
            tries += 1
            if tries > max_tries:
                raise RuntimeError("could not find a nondegenerate point")
            v = self.rational(sign)
            if v in out or v in avoid or (bad is not None and bad(out, v)):
                self.log.append(("rejected", v))
                continue
            self.log.append(("accepted", v))
            out.append(v)
        return out
