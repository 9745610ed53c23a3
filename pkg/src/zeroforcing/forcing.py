"""The zero forcing process: closure, verification, exact and heuristic Z.

A vertex set is *forcing* when iterating the colour-change rule (a black
vertex with exactly one white neighbour blackens it) from that set ends with
every vertex black.  ``zero_forcing_number_exact`` finds the minimum size of
such a set by a bidirectional level search; ``zero_forcing_upper_heuristic``
produces verified upper bounds for graphs beyond exact range.

Note on the trivial lower bound: the pruning here uses Z(G) >= min_degree - 1.
That is deliberately the weaker published form; it is safe, and the stronger
structural bounds kick in through the girth formula when its preconditions
hold.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, comb, inf

from . import kernels
from .errors import BudgetExceededError, InputError
from .graph import Graph, bits, girth, min_degree
from .rng import SplitMix64


@dataclass(frozen=True)
class ForcingChronicle:
    """Ordered record of one closure run.

    ``steps`` lists (forcer, forced) pairs in application order; replaying
    them from ``initial`` is valid step by step and ends at ``final_black``.
    """

    initial: int
    steps: tuple
    final_black: int


@dataclass(frozen=True)
class SearchStats:
    closures: int
    strategy: str


@dataclass(frozen=True)
class ZfResult:
    z: int
    optimal_set: int
    chronicle: ForcingChronicle
    stats: SearchStats


def closure(g: Graph, initial: int) -> ForcingChronicle:
    """Run the colour-change rule to its unique fixed point, with a trace.

    Tie-break: each round scans the round-start black vertices in ascending
    index and applies every force that is valid at the moment it is
    examined.  The final black set does not depend on this choice; the
    recorded step order does, and is reproducible.
    """
    if initial & ~g.full_mask:
        raise InputError("initial set contains vertices outside the graph")
    black = initial
    steps = []
    while True:
        changed = False
        scan = black
        while scan:
            low = scan & -scan
            scan ^= low
            v = low.bit_length() - 1
            white = g.adj[v] & ~black
            if white and not (white & (white - 1)):
                steps.append((v, white.bit_length() - 1))
                black |= white
                changed = True
        if not changed:
            return ForcingChronicle(initial, tuple(steps), black)


def validate_chronicle(g: Graph, ch: ForcingChronicle) -> None:
    """Replay a chronicle, checking every rule application; raises on defect."""
    black = ch.initial
    seen = 0
    for forcer, forced in ch.steps:
        if (seen >> forced) & 1 or (ch.initial >> forced) & 1:
            raise InputError(f"vertex {forced} forced twice or initially black")
        if not (black >> forcer) & 1:
            raise InputError(f"forcer {forcer} is not black at its step")
        white = g.adj[forcer] & ~black
        if white != 1 << forced:
            raise InputError(
                f"forcer {forcer} does not have {forced} as its unique "
                f"white neighbour at its step")
        black |= 1 << forced
        seen |= 1 << forced
    if black != ch.final_black:
        raise InputError("final_black does not match the replayed steps")


def is_forcing_set(g: Graph, s: int) -> bool:
    if s & ~g.full_mask:
        raise InputError("set contains vertices outside the graph")
    return kernels.closure_mask(g.adj, g.n, s) == g.full_mask


def _structural_lower_bound(g: Graph) -> int:
    """Cheap sound lower bounds for pruning the exact search."""
    if g.n == 0:
        return 0
    delta = min_degree(g)
    lb = max(0, delta - 1)
    if delta >= 2:
        gi = girth(g)
        if gi != inf:
            from .bounds import girth_lower_bound
            sharp, _ = girth_lower_bound(delta, int(gi))
            lb = max(lb, ceil(sharp))
    return lb


def zero_forcing_number_exact(g: Graph, budget: int = 10**9) -> ZfResult:
    """Exact zero forcing number with a verified minimum certificate.

    Level search closes in on the threshold size from both ends: ascending
    from a sound lower bound (all smaller sizes get fully excluded) and
    descending from n (shrinking a verified forcing set).  At each step the
    direction whose next level has the smaller binomial count is scanned.
    The certificate returned is the lexicographically smallest forcing set
    of optimal size.  ``budget`` caps total closure evaluations; exhaustion
    raises ``BudgetExceededError`` carrying the best verified upper bound
    and the largest size fully ruled out.
    """
    if budget <= 0:
        raise InputError("budget must be positive")
    n = g.n
    chron = closure(g, g.full_mask)
    if n == 0:
        return ZfResult(0, 0, chron, SearchStats(0, "trivial"))
    lo = _structural_lower_bound(g)
    hi, hi_set = n, g.full_mask
    closures = 0
    trail = []

    def _bail(level_message):
        raise BudgetExceededError(
            f"closure budget exhausted while scanning {level_message}",
            best_upper=hi, best_upper_set=hi_set,
            excluded_below=lo - 1, evaluations=closures)

    while lo < hi:
        if comb(n, lo) <= comb(n, hi - 1):
            trail.append(f"A{lo}")
            status, mask, ev = kernels.find_forcing_subset(
                g.adj, n, lo, budget - closures)
            closures += ev
            if status == kernels.BUDGET_HIT:
                _bail(f"size {lo} (ascending)")
            if status == kernels.FOUND:
                hi, hi_set = lo, mask
                break
            lo += 1
        else:
            trail.append(f"B{hi - 1}")
            status, mask, ev = kernels.find_forcing_subset(
                g.adj, n, hi - 1, budget - closures)
            closures += ev
            if status == kernels.BUDGET_HIT:
                _bail(f"size {hi - 1} (descending)")
            if status == kernels.FOUND:
                hi, hi_set = hi - 1, mask
            else:
                lo = hi
    return ZfResult(hi, hi_set, closure(g, hi_set),
                    SearchStats(closures, " ".join(trail)))


def zero_forcing_upper_heuristic(g: Graph, restarts: int = 20,
                                 seed: int = 0) -> tuple:
    """Verified forcing set by randomized greedy removal from the full set.

    Each restart shuffles a removal order and repeatedly strips vertices
    whose removal keeps the set forcing, until no single removal survives.
    Returns ``(size, set)``; the set always passes ``is_forcing_set``.
    """
    if restarts < 1:
        raise InputError("restarts must be >= 1")
    n, full = g.n, g.full_mask
    best = full
    rng = SplitMix64(seed)
    for _ in range(restarts):
        order = list(range(n))
        rng.shuffle(order)
        cur = full
        improved = True
        while improved:
            improved = False
            for v in order:
                if not (cur >> v) & 1:
                    continue
                cand = cur & ~(1 << v)
                if kernels.closure_mask(g.adj, n, cand) == full:
                    cur = cand
                    improved = True
        if cur.bit_count() < best.bit_count():
            best = cur
    return best.bit_count(), best
