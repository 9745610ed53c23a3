# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: bitset closure, subset-level scans, Jacobi eigenvalues.

Semantics mirror ``_pycore`` exactly (same scan order, same combination
order, same rotation order); only the speed differs.  The closure kernels
are limited to n <= 64 (single machine word); ``kernels.py`` routes larger
graphs to the pure-Python fallback.
"""

from libc.math cimport fabs, sqrt
from libc.stdint cimport int64_t, uint64_t

import numpy as np

FOUND, EXHAUSTED, BUDGET_HIT = 1, 0, 2

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline uint64_t _closure(uint64_t* adj, uint64_t black, uint64_t full) nogil:
    cdef uint64_t scan, low, white
    cdef int changed
    while True:
        changed = 0
        scan = black
        while scan:
            low = scan & (~scan + 1)
            scan ^= low
            white = adj[__builtin_ctzll(low)] & ~black
            if white != 0 and (white & (white - 1)) == 0:
                black |= white
                changed = 1
        if changed == 0 or black == full:
            return black


cdef uint64_t _full_mask(int n):
    if n >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFFULL
    return (<uint64_t>1 << n) - 1


cdef int _load_adj(object adj, int n, uint64_t* out) except -1:
    cdef int v
    for v in range(n):
        out[v] = <uint64_t>adj[v]
    return 0


def closure_mask(adj, int n, black):
    """Single-word closure; same contract as ``_pycore.closure_mask``."""
    cdef uint64_t cadj[64]
    if n > 64:
        raise ValueError("compiled closure kernel requires n <= 64")
    _load_adj(adj, n, cadj)
    return int(_closure(cadj, <uint64_t>black, _full_mask(n)))


def find_forcing_subset(adj, int n, int k, long long budget):
    """Lexicographic scan of k-subsets; same contract as the pure kernel."""
    cdef uint64_t cadj[64]
    cdef int idx[64]
    cdef uint64_t full, mask
    cdef long long evals = 0
    cdef int i, j
    if n > 64:
        raise ValueError("compiled scan kernel requires n <= 64")
    if k < 0 or k > n:
        return EXHAUSTED, -1, 0
    _load_adj(adj, n, cadj)
    full = _full_mask(n)
    if k == 0:
        if budget <= 0:
            return BUDGET_HIT, -1, 0
        if _closure(cadj, 0, full) == full:
            return FOUND, 0, 1
        return EXHAUSTED, -1, 1
    for i in range(k):
        idx[i] = i
    while True:
        if evals >= budget:
            return BUDGET_HIT, -1, evals
        mask = 0
        for i in range(k):
            mask |= (<uint64_t>1) << idx[i]
        evals += 1
        if _closure(cadj, mask, full) == full:
            return FOUND, int(mask), evals
        i = k - 1
        while i >= 0 and idx[i] == n - k + i:
            i -= 1
        if i < 0:
            return EXHAUSTED, -1, evals
        idx[i] += 1
        for j in range(i + 1, k):
            idx[j] = idx[j - 1] + 1


def jacobi_eigvals(a, double tol_off, int max_sweeps):
    """Cyclic Jacobi, eigenvalues only; mirrors ``_pycore.jacobi_eigvals``."""
    arr = np.array(a, dtype=np.float64, copy=True, order="C")
    cdef double[:, ::1] m = arr
    cdef int n = arr.shape[0]
    cdef int p, q, i, sweeps = 0
    cdef double apq, theta, t, c, s, tmp_p, tmp_q, off, skip
    if n <= 1:
        return np.diag(arr).copy(), 0.0, 0
    # matches _pycore: entries below this cannot hold the off-norm over tol
    skip = tol_off / (2.0 * n)
    off = _off_norm(m, n)
    while off > tol_off and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p, q]
                if fabs(apq) <= skip:
                    continue
                theta = (m[q, q] - m[p, p]) / (2.0 * apq)
                t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                for i in range(n):
                    tmp_p = m[i, p]
                    tmp_q = m[i, q]
                    m[i, p] = c * tmp_p - s * tmp_q
                    m[i, q] = s * tmp_p + c * tmp_q
                for i in range(n):
                    tmp_p = m[p, i]
                    tmp_q = m[q, i]
                    m[p, i] = c * tmp_p - s * tmp_q
                    m[q, i] = s * tmp_p + c * tmp_q
                m[p, q] = 0.0
                m[q, p] = 0.0
        sweeps += 1
        off = _off_norm(m, n)
    vals = np.sort(np.diag(arr))[::-1].copy()
    return vals, off, sweeps


cdef double _off_norm(double[:, ::1] m, int n):
    cdef double acc = 0.0
    cdef int i, j
    for i in range(n):
        for j in range(n):
            if i != j:
                acc += m[i, j] * m[i, j]
    return sqrt(acc)
