"""Pure-Python reference kernels.

These implement exactly the same contracts as the compiled extension in
``_fastcore.pyx`` and are selected automatically when the extension is not
available (see ``kernels.py``).  Adjacency comes in as a sequence of Python
integer bitmasks, so these kernels work for any vertex count.
"""

from __future__ import annotations

import math
from itertools import combinations

import numpy as np

FOUND, EXHAUSTED, BUDGET_HIT = 1, 0, 2


def closure_mask(adj, n: int, black: int) -> int:
    """Fixed point of the colour-change rule starting from ``black``.

    Rounds scan the round-start black vertices in ascending index; a scanned
    vertex with exactly one white neighbour blackens it immediately.  The
    final set is order-independent, so this fixed scan is purely for
    reproducibility of intermediate states.
    """
    full = (1 << n) - 1
    while True:
        changed = False
        scan = black
        while scan:
            low = scan & -scan
            scan ^= low
            white = adj[low.bit_length() - 1] & ~black
            if white and not (white & (white - 1)):
                black |= white
                changed = True
        if not changed or black == full:
            return black


def find_forcing_subset(adj, n: int, k: int, budget: int):
    """First k-subset (lexicographic order) whose closure is everything.

    Returns ``(status, mask, evaluations)`` where status is FOUND /
    EXHAUSTED / BUDGET_HIT and ``evaluations`` counts closure runs.
    """
    full = (1 << n) - 1
    if k < 0 or k > n:
        return EXHAUSTED, -1, 0
    evals = 0
    for combo in combinations(range(n), k):
        if evals >= budget:
            return BUDGET_HIT, -1, evals
        mask = 0
        for v in combo:
            mask |= 1 << v
        evals += 1
        if closure_mask(adj, n, mask) == full:
            return FOUND, mask, evals
    return EXHAUSTED, -1, evals


def jacobi_eigvals(a: np.ndarray, tol_off: float, max_sweeps: int):
    """Cyclic Jacobi eigenvalue iteration for a symmetric matrix.

    Returns ``(eigenvalues_descending, off_norm, sweeps)`` where ``off_norm``
    is the Frobenius norm of the remaining off-diagonal part (an upper bound
    on every eigenvalue's error).  Convergence is up to the caller to check.
    """
    a = np.array(a, dtype=np.float64, copy=True)
    n = a.shape[0]
    if n <= 1:
        return np.diag(a).copy(), 0.0, 0
    # entries this small cannot keep the off-norm above tol_off even if
    # every one of them is skipped: n * (tol/2n) * sqrt(2) < tol
    skip = tol_off / (2.0 * n)
    sweeps = 0
    off = _off_norm(a)
    while off > tol_off and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - s * rowq
                a[q, :] = s * rowp + c * rowq
                a[p, q] = 0.0
                a[q, p] = 0.0
        sweeps += 1
        off = _off_norm(a)
    vals = np.sort(np.diag(a))[::-1].copy()
    return vals, off, sweeps


def _off_norm(a: np.ndarray) -> float:
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return math.sqrt(float(np.sum(off * off)))
