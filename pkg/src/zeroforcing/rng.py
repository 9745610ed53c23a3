"""Deterministic 64-bit randomness for every sampling operation.

Everything random in this package flows through SplitMix64, a tiny,
well-known generator with a public reference implementation.  Two usage
patterns are supported:

* a sequential stream (``SplitMix64``) for shuffles and rejection sampling;
* stateless "split-by-hash" draws (``mix64`` / ``pair_draw53``), where each
  logical object (a vertex pair, a sweep cell, a trial index) gets its own
  independent value derived from the seed by hashing.  This makes per-pair
  edge draws and per-trial seeds reproducible in isolation, on any platform.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def mix64(x: int) -> int:
    """SplitMix64 finalizer: a 64-bit bijective scrambler."""
    x = (x + _GAMMA) & MASK64
    x ^= x >> 30
    x = (x * _MIX1) & MASK64
    x ^= x >> 27
    x = (x * _MIX2) & MASK64
    x ^= x >> 31
    return x


def hash_combine(seed: int, *parts: int) -> int:
    """Derive an independent 64-bit value from a seed and integer labels."""
    h = mix64(seed & MASK64)
    for p in parts:
        h = mix64(h ^ (p & MASK64))
    return h


def pair_draw53(seed: int, u: int, v: int) -> int:
    """53-bit uniform draw attached to the unordered pair {u, v}."""
    if u > v:
        u, v = v, u
    return hash_combine(seed, (u << 32) | v) >> 11


def mix64_array(x: np.ndarray) -> np.ndarray:
    """Vectorized ``mix64`` over a uint64 array (bit-identical to scalar)."""
    with np.errstate(over="ignore"):
        x = x + np.uint64(_GAMMA)
        x = x ^ (x >> np.uint64(30))
        x = x * np.uint64(_MIX1)
        x = x ^ (x >> np.uint64(27))
        x = x * np.uint64(_MIX2)
        x = x ^ (x >> np.uint64(31))
    return x


class SplitMix64:
    """Sequential SplitMix64 stream with helpers for sampling."""

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & MASK64
        x = self._state
        x ^= x >> 30
        x = (x * _MIX1) & MASK64
        x ^= x >> 27
        x = (x * _MIX2) & MASK64
        x ^= x >> 31
        return x

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) via unbiased rejection sampling."""
        if n <= 0:
            raise ValueError("below() needs n >= 1")
        limit = MASK64 - (MASK64 + 1) % n
        while True:
            x = self.next_u64()
            if x <= limit:
                return x % n

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
