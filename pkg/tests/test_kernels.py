"""Compiled kernels and the pure-Python fallback must agree exactly."""

import os
import subprocess
import sys

import numpy as np
import pytest

from zeroforcing import _pycore, kernels
from zeroforcing.graph import gnp_sample, petersen_graph, random_regular_sample
from zeroforcing.rng import SplitMix64, hash_combine

fastcore = pytest.importorskip(
    "zeroforcing._fastcore",
    reason="compiled extension not built; fallback covered elsewhere")


def _random_cases(count, n_lo, n_hi, seed):
    rng = SplitMix64(seed)
    cases = []
    for i in range(count):
        n = n_lo + rng.below(n_hi - n_lo + 1)
        p = 0.1 + 0.8 * rng.below(1000) / 1000
        g = gnp_sample(n, p, hash_combine(seed, i))
        initial = rng.next_u64() & g.full_mask
        cases.append((g, initial))
    return cases


def test_closure_mask_backends_agree():
    for g, initial in _random_cases(120, 1, 24, seed=7):
        pure = _pycore.closure_mask(g.adj, g.n, initial)
        fast = fastcore.closure_mask(g.adj, g.n, initial)
        assert pure == fast


def test_find_forcing_subset_backends_agree():
    rng = SplitMix64(13)
    for g, _ in _random_cases(40, 2, 14, seed=29):
        k = rng.below(g.n + 1)
        pure = _pycore.find_forcing_subset(g.adj, g.n, k, 10**9)
        fast = fastcore.find_forcing_subset(g.adj, g.n, k, 10**9)
        assert pure == fast


def test_find_forcing_subset_budget_behaviour_matches():
    g = gnp_sample(12, 0.4, 5)
    for budget in (0, 1, 7, 50):
        pure = _pycore.find_forcing_subset(g.adj, g.n, 3, budget)
        fast = fastcore.find_forcing_subset(g.adj, g.n, 3, budget)
        assert pure == fast
    status, mask, evals = fastcore.find_forcing_subset(g.adj, g.n, 3, 2)
    assert status == kernels.BUDGET_HIT and mask == -1 and evals == 2


def test_find_forcing_subset_lexicographic_first():
    # path: {0} forces, and 0 is the lexicographically first 1-subset
    g = gnp_sample(0, 0.0, 0)
    from zeroforcing.graph import path_graph
    p5 = path_graph(5)
    status, mask, _ = fastcore.find_forcing_subset(p5.adj, 5, 1, 10**6)
    assert status == kernels.FOUND and mask == 1


def test_jacobi_backends_agree_and_match_lapack():
    for g in (petersen_graph(), gnp_sample(24, 0.35, 3),
              random_regular_sample(30, 4, 1)):
        a = g.adjacency_matrix()
        vp, offp, _ = _pycore.jacobi_eigvals(a, 1e-11, 60)
        vf, offf, _ = fastcore.jacobi_eigvals(a, 1e-11, 60)
        assert np.allclose(vp, vf, atol=1e-9)
        assert offp <= 1e-11 and offf <= 1e-11
        lapack = np.sort(np.linalg.eigvalsh(a))[::-1]
        assert np.allclose(vf, lapack, atol=1e-8)


def test_jacobi_trivial_sizes():
    one = np.zeros((1, 1))
    vals, off, sweeps = fastcore.jacobi_eigvals(one, 1e-12, 10)
    assert vals.shape == (1,) and off == 0.0 and sweeps == 0


def test_env_var_forces_pure_backend():
    code = ("import zeroforcing.kernels as k; print(k.BACKEND)")
    env = dict(os.environ, ZEROFORCING_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND == "compiled"


def test_kernels_route_large_graphs_to_pure():
    g = gnp_sample(70, 0.1, 9)
    full = kernels.closure_mask(g.adj, g.n, g.full_mask)
    assert full == g.full_mask
    with pytest.raises(ValueError):
        fastcore.closure_mask(g.adj, g.n, 0)
