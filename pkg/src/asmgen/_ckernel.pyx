# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel; same results as the pure-Python module."""

from libc.stdlib cimport malloc, free

from asmgen._kernel_py import transition_table

cdef enum:
    MAXN = 16

cdef struct Trans:
    int new
    int nu
    int mu
    int nurow
    int onepos
    int first
    int last
    int row[MAXN]


cdef struct Table:
    int n
    int *start      # start[s] .. start[s+1] indexes into trans
    Trans *trans


cdef Table build(int n) except *:
    cdef Table tb
    cdef dict table = transition_table(n)
    cdef int nstates = 1 << n
    cdef int total = sum(len(v) for v in table.values())
    cdef int s, k = 0, j
    tb.n = n
    tb.start = <int *> malloc((nstates + 1) * sizeof(int))
    tb.trans = <Trans *> malloc(max(total, 1) * sizeof(Trans))
    for s in range(nstates):
        tb.start[s] = k
        for t in table[s]:
            tb.trans[k].new = t[0]
            tb.trans[k].nu = t[2]
            tb.trans[k].mu = t[3]
            tb.trans[k].nurow = t[4]
            tb.trans[k].onepos = t[7]
            row = t[1]
            for j in range(n):
                tb.trans[k].row[j] = row[j]
            tb.trans[k].first = row[0]
            tb.trans[k].last = row[n - 1]
            k += 1
    tb.start[nstates] = k
    return tb


cdef void release(Table tb):
    free(tb.start)
    free(tb.trans)


def count_asms(int n):
    if n == 0:
        return 1
    if n > MAXN:
        raise ValueError("size too large for compiled kernel")
    cdef Table tb = build(n)
    cdef long long count = 0
    cdef int depth = 0
    cdef int idx[MAXN]
    cdef int state[MAXN + 1]
    state[0] = 0
    idx[0] = tb.start[0]
    while depth >= 0:
        if idx[depth] >= tb.start[state[depth] + 1]:
            depth -= 1
            if depth >= 0:
                idx[depth] += 1
            continue
        if depth == n - 1:
            count += tb.start[state[depth] + 1] - tb.start[state[depth]]
            depth -= 1
            if depth >= 0:
                idx[depth] += 1
            continue
        state[depth + 1] = tb.trans[idx[depth]].new
        depth += 1
        idx[depth] = tb.start[state[depth]]
    release(tb)
    return count


cdef object _fold(int n, bint full):
    cdef Table tb = build(n)
    cdef dict hist = {}
    cdef int depth = 0, i, j, last = n - 1
    cdef int idx[MAXN]
    cdef int state[MAXN + 1]
    cdef int nu[MAXN + 1]
    cdef int mu[MAXN + 1]
    cdef int rl[MAXN + 1]
    cdef int rr[MAXN + 1]
    cdef int nucol[MAXN]
    cdef int mucol[MAXN]
    cdef Trans *t
    cdef Trans *top
    cdef Trans *tt
    cdef int partial
    cdef int hibit = 1 << last
    cdef int s, new, r_l, r_r, p
    state[0] = 0
    nu[0] = 0
    mu[0] = 0
    rl[0] = -1
    rr[0] = -1
    idx[0] = tb.start[0]
    while depth >= 0:
        s = state[depth]
        if idx[depth] >= tb.start[s + 1]:
            depth -= 1
            if depth >= 0:
                idx[depth] += 1
            continue
        t = &tb.trans[idx[depth]]
        new = t.new
        r_l = depth if ((new & 1) and not (s & 1)) else rl[depth]
        r_r = last - depth if ((new & hibit) and not (s & hibit)) else rr[depth]
        if depth == last:
            top = &tb.trans[idx[0]]
            base = (nu[depth] + t.nu, mu[depth] + t.mu, top.onepos, r_r, last - t.onepos, r_l,
                    top.first, top.last, t.last, t.first)
            if full:
                for j in range(n):
                    nucol[j] = 0
                    mucol[j] = 0
                rows_nu = []
                rows_mu = []
                for i in range(n):
                    p = state[i]
                    tt = &tb.trans[idx[i]]
                    rows_nu.append(tt.nurow)
                    rows_mu.append(tt.mu)
                    # recompute column equality flags for this row
                    partial = 0
                    for j in range(n):
                        partial += tt.row[j]
                        if ((p >> j) & 1) == partial:
                            nucol[j] += 1
                        if tt.row[j] == -1:
                            mucol[j] += 1
                key = base + tuple(rows_nu) + tuple(rows_mu) \
                    + tuple([nucol[j] for j in range(n)]) + tuple([mucol[j] for j in range(n)])
            else:
                key = base
            hist[key] = hist.get(key, 0) + 1
            idx[depth] += 1
            continue
        state[depth + 1] = new
        nu[depth + 1] = nu[depth] + t.nu
        mu[depth + 1] = mu[depth] + t.mu
        rl[depth + 1] = r_l
        rr[depth + 1] = r_r
        depth += 1
        idx[depth] = tb.start[new]
    release(tb)
    return hist


def fold_boundary(int n):
    if n > MAXN:
        raise ValueError("size too large for compiled kernel")
    return _fold(n, False)


def fold_full(int n):
    if n > MAXN:
        raise ValueError("size too large for compiled kernel")
    return _fold(n, True)
