import pytest

from zeroforcing.graph import gnp_sample
from zeroforcing.rng import hash_combine


def seeded_corpus(count, n_lo, n_hi, base_seed):
    """Reproducible mixed-density random graphs for property tests."""
    graphs = []
    for i in range(count):
        seed = hash_combine(base_seed, i)
        n = n_lo + seed % (n_hi - n_lo + 1)
        p = 0.15 + 0.7 * ((seed >> 16) % 1000) / 1000
        graphs.append(gnp_sample(n, p, seed))
    return graphs


@pytest.fixture(scope="session")
def small_corpus():
    """Graphs with n <= 8 for oracle comparisons."""
    return seeded_corpus(60, 1, 8, base_seed=101)


@pytest.fixture(scope="session")
def tiny_corpus():
    """Graphs with n <= 7 for full brute-force comparisons."""
    return seeded_corpus(60, 1, 7, base_seed=202)
