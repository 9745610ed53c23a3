"""Seeded random-graph sweeps: run, record, summarize.

Each (cell, trial) gets its own seed derived by hashing (seed base, cell
index, trial index), so any single record can be reproduced in isolation.
Records replay bit-identically except for the runtime field.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

from .bounds import gnp_forcing_formula
from .errors import InputError
from .forcing import zero_forcing_number_exact, zero_forcing_upper_heuristic
from .graph import gnp_sample
from .rng import hash_combine

CSV_SCHEMA = ("experiment,seed,n,p,method,z,n_minus_z,formula_n_minus_z,"
              "runtime_s,closures")
CSV_HEADER_COMMENT = ("# zeroforcing sweep records v1; columns: " + CSV_SCHEMA
                      + "; std in summaries is the population std dev")


@dataclass(frozen=True)
class TrialRecord:
    experiment: str
    seed: int
    n: int
    p: float
    method: str  # "exact" | "heuristic"
    z: int
    n_minus_z: int
    formula_n_minus_z: float  # nan when the formula's preconditions fail
    runtime_s: float
    closures: int

    def csv_row(self) -> str:
        return (f"{self.experiment},{self.seed},{self.n},{self.p!r},"
                f"{self.method},{self.z},{self.n_minus_z},"
                f"{self.formula_n_minus_z!r},{self.runtime_s:.6f},"
                f"{self.closures}")


@dataclass(frozen=True)
class SweepConfig:
    cells: tuple            # ((n, p), ...)
    trials: int
    seed_base: int
    budget: int = 10**9
    exact_cap: int = 22
    allow_heuristic: bool = False
    heuristic_restarts: int = 20
    experiment: str = "gnp-sweep"

    def __post_init__(self):
        if self.trials < 1:
            raise InputError("trials must be >= 1")
        if not self.cells:
            raise InputError("grid must be non-empty")
        for n, p in self.cells:
            if n > self.exact_cap and not self.allow_heuristic:
                raise InputError(
                    f"cell n={n} exceeds exact cap {self.exact_cap}; pass "
                    f"allow_heuristic to permit heuristic solving")


@dataclass(frozen=True)
class CellSummary:
    n: int
    p: float
    trials: int
    mean_n_minus_z: float
    std_n_minus_z: float
    formula_n_minus_z: float


def _formula_or_nan(n: int, p: float) -> float:
    try:
        return n - gnp_forcing_formula(n, p)
    except InputError:
        return float("nan")


def run_gnp_sweep(config: SweepConfig):
    """Execute the sweep; returns (records, cell summaries, spearman rho).

    The correlation is between n and the per-cell mean of n - Z, over cells
    sharing the same p (reported per distinct p value).
    """
    records = []
    summaries = []
    for cell_idx, (n, p) in enumerate(config.cells):
        values = []
        formula = _formula_or_nan(n, p)
        for trial_idx in range(config.trials):
            seed = hash_combine(config.seed_base, cell_idx, trial_idx)
            graph = gnp_sample(n, p, seed)
            start = time.perf_counter()
            if n <= config.exact_cap:
                result = zero_forcing_number_exact(graph, budget=config.budget)
                z, closures, method = result.z, result.stats.closures, "exact"
            else:
                size, _ = zero_forcing_upper_heuristic(
                    graph, restarts=config.heuristic_restarts, seed=seed)
                z, closures, method = size, 0, "heuristic"
            elapsed = time.perf_counter() - start
            records.append(TrialRecord(
                experiment=config.experiment, seed=seed, n=n, p=p,
                method=method, z=z, n_minus_z=n - z,
                formula_n_minus_z=formula, runtime_s=elapsed,
                closures=closures))
            values.append(n - z)
        summaries.append(CellSummary(
            n=n, p=p, trials=config.trials,
            mean_n_minus_z=statistics.fmean(values),
            std_n_minus_z=statistics.pstdev(values),
            formula_n_minus_z=formula))
    rho_by_p = {}
    for p in sorted({p for _, p in config.cells}):
        cells_p = [s for s in summaries if s.p == p]
        if len(cells_p) >= 2:
            rho_by_p[p] = spearman_rho(
                [s.n for s in cells_p], [s.mean_n_minus_z for s in cells_p])
    return records, summaries, rho_by_p


def records_to_csv(records) -> str:
    lines = [CSV_HEADER_COMMENT, CSV_SCHEMA]
    lines.extend(r.csv_row() for r in records)
    return "\n".join(lines) + "\n"


def _ranks(values) -> list:
    """Average ranks (1-based), ties shared."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        avg = (i + j) / 2 + 1
        for idx in order[i:j + 1]:
            ranks[idx] = avg
        i = j + 1
    return ranks


def spearman_rho(xs, ys) -> float:
    """Spearman rank correlation with average-rank tie handling."""
    if len(xs) != len(ys) or len(xs) < 2:
        raise InputError("need two sequences of equal length >= 2")
    rx, ry = _ranks(xs), _ranks(ys)
    mx = statistics.fmean(rx)
    my = statistics.fmean(ry)
    num = sum((a - mx) * (b - my) for a, b in zip(rx, ry))
    den = (sum((a - mx) ** 2 for a in rx) *
           sum((b - my) ** 2 for b in ry)) ** 0.5
    if den == 0:
        return 0.0
    return num / den
