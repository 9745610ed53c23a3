"""Kernel backend selection: compiled extension with pure-Python fallback.

The compiled module is used when it imported successfully and the instance
fits its limits (closure kernels need n <= 64).  Setting the environment
variable ``ZEROFORCING_PURE_PYTHON=1`` before import forces the fallback,
which is how the benchmark and the equivalence tests compare backends.
"""

from __future__ import annotations

import os

import numpy as np

from . import _pycore

_fastcore = None
if os.environ.get("ZEROFORCING_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _fastcore  # type: ignore[no-redef]
    except ImportError:
        _fastcore = None

BACKEND = "compiled" if _fastcore is not None else "python"

FOUND = _pycore.FOUND
EXHAUSTED = _pycore.EXHAUSTED
BUDGET_HIT = _pycore.BUDGET_HIT


def closure_mask(adj, n: int, initial: int) -> int:
    if _fastcore is not None and n <= 64:
        return _fastcore.closure_mask(adj, n, initial)
    return _pycore.closure_mask(adj, n, initial)


def find_forcing_subset(adj, n: int, k: int, budget: int):
    if _fastcore is not None and n <= 64:
        return _fastcore.find_forcing_subset(adj, n, k, budget)
    return _pycore.find_forcing_subset(adj, n, k, budget)


def jacobi_eigvals(a: np.ndarray, tol_off: float, max_sweeps: int):
    if _fastcore is not None:
        return _fastcore.jacobi_eigvals(a, tol_off, max_sweeps)
    return _pycore.jacobi_eigvals(a, tol_off, max_sweeps)
