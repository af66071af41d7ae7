"""Pure-Python enumeration kernel.

ASMs are generated row by row.  The state after i rows is the bitmask of
columns whose partial sum is 1; each row is a transition between two states
whose row word has partial sums in {0, 1} and total 1.  Transitions out of a
state are listed so that the new column-sum vector, read as a 0/1 word from
the left, decreases lexicographically.
"""

from __future__ import annotations

from functools import lru_cache

# transition record layout
NEW, ROW, NU, MU, NUROW, EQCOLS, NEGCOLS, ONEPOS = range(8)
COL_BITS = 8


@lru_cache(maxsize=None)
def transition_table(n: int) -> dict[int, tuple[tuple, ...]]:
    table: dict[int, list] = {}
    for s in range(1 << n):
        out: list = []
        old = [(s >> j) & 1 for j in range(n)]

        def extend(j: int, partial: int, row: list):
            if j == n:
                if partial == 1:
                    out.append(_record(n, old, row))
                return
            if old[j] == 0:
                if partial == 0:
                    extend(j + 1, 1, row + [1])
                extend(j + 1, partial, row + [0])
            else:
                extend(j + 1, partial, row + [0])
                if partial == 1:
                    extend(j + 1, 0, row + [-1])

        extend(0, 0, [])
        table[s] = tuple(out)
    return {s: tuple(v) for s, v in table.items()}


def _record(n: int, old: list[int], row: list[int]) -> tuple:
    new = 0
    nu = mu = nurow = eq = neg = 0
    partial = 0
    onepos = -1
    for j in range(n):
        partial += row[j]
        if old[j] + row[j]:
            new |= 1 << j
        nu += old[j] * partial
        if old[j] == partial:
            nurow += 1
            eq |= 1 << (COL_BITS * j)
        if row[j] == -1:
            mu += 1
            neg |= 1 << (COL_BITS * j)
        if row[j] == 1 and onepos < 0:
            onepos = j
    return (new, tuple(row), nu, mu, nurow, eq, neg, onepos)


def iter_matrices(n: int):
    """Yield each ASM of size n as a tuple of row tuples."""
    if n == 0:
        yield ()
        return
    table = transition_table(n)
    rows: list = [None] * n

    def rec(i: int, s: int):
        if i == n:
            yield tuple(rows)
            return
        for t in table[s]:
            rows[i] = t[ROW]
            yield from rec(i + 1, t[NEW])

    yield from rec(0, 0)


def count_asms(n: int) -> int:
    """Count by walking the full enumeration tree (no memoisation)."""
    if n == 0:
        return 1
    table = transition_table(n)
    last = n - 1

    def rec(i: int, s: int) -> int:
        if i == last:
            return len(table[s])
        return sum(rec(i + 1, t[NEW]) for t in table[s])

    return rec(0, 0)


def fold_boundary(n: int) -> dict[tuple, int]:
    """Histogram of (nu, mu, rhoT, rhoR, rhoB, rhoL, A11, A1n, Ann, An1)."""
    table = transition_table(n)
    hist: dict[tuple, int] = {}
    last = n - 1
    hibit = 1 << last

    def rec(i, s, nu, mu, rho_l, rho_r, top):
        for t in table[s]:
            new = t[NEW]
            nu2 = nu + t[NU]
            mu2 = mu + t[MU]
            rl = i if (new & 1) and not (s & 1) else rho_l
            rr = last - i if (new & hibit) and not (s & hibit) else rho_r
            if i == last:
                row = t[ROW]
                tp = top if top is not None else t
                trow = tp[ROW]
                key = (nu2, mu2, tp[ONEPOS], rr, last - t[ONEPOS], rl,
                       trow[0], trow[last], row[last], row[0])
                hist[key] = hist.get(key, 0) + 1
            else:
                rec(i + 1, new, nu2, mu2, rl, rr, t if top is None else top)

    rec(0, 0, 0, 0, -1, -1, None)
    return hist


def fold_full(n: int) -> dict[tuple, int]:
    """Histogram of the boundary statistics followed by the per-row and
    per-column vectors nuRow, muRow, nuCol, muCol (each of length n)."""
    table = transition_table(n)
    hist: dict[tuple, int] = {}
    last = n - 1
    hibit = 1 << last
    path: list = [None] * n
    mask = (1 << COL_BITS) - 1

    def rec(i, s, nu, mu, rho_l, rho_r, eq, neg):
        for t in table[s]:
            new = t[NEW]
            path[i] = t
            rl = i if (new & 1) and not (s & 1) else rho_l
            rr = last - i if (new & hibit) and not (s & hibit) else rho_r
            if i == last:
                eq2 = eq + t[EQCOLS]
                neg2 = neg + t[NEGCOLS]
                trow = path[0][ROW]
                row = t[ROW]
                key = (nu + t[NU], mu + t[MU], path[0][ONEPOS], rr, last - t[ONEPOS], rl,
                       trow[0], trow[last], row[last], row[0],
                       *(p[NUROW] for p in path), *(p[MU] for p in path),
                       *((eq2 >> (COL_BITS * j)) & mask for j in range(n)),
                       *((neg2 >> (COL_BITS * j)) & mask for j in range(n)))
                hist[key] = hist.get(key, 0) + 1
            else:
                rec(i + 1, new, nu + t[NU], mu + t[MU], rl, rr, eq + t[EQCOLS], neg + t[NEGCOLS])

    rec(0, 0, 0, 0, -1, -1, 0, 0)
    return hist
