"""Independent oracles used to cross-check the library.

Everything here is deliberately written against the *definitions*, not the
library's algorithms: set-based single-step closure, full-subset brute force
for Z, edge-removal BFS for the girth, exhaustive bipartite-subgraph search,
and exact rational rank for eigenvalue multiplicities.  Keep these naive.
"""

from fractions import Fraction
from itertools import combinations


def adj_sets(g):
    return [set(_bits(row)) for row in g.adj]


def _bits(mask):
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def naive_closure(neighbours, black, rng=None):
    """One force at a time; optional rng picks among valid forces randomly."""
    black = set(black)
    while True:
        options = []
        for v in sorted(black):
            white = neighbours[v] - black
            if len(white) == 1:
                options.append(next(iter(white)))
        if not options:
            return black
        if rng is None:
            black.add(options[0])
        else:
            black.add(options[rng.below(len(options))])


def is_forcing_naive(g, vertices):
    nbrs = adj_sets(g)
    return naive_closure(nbrs, set(vertices)) == set(range(g.n))


def brute_force_z(g):
    """Minimum forcing-set size by scanning all subsets, smallest first."""
    nbrs = adj_sets(g)
    everything = set(range(g.n))
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            if naive_closure(nbrs, set(combo)) == everything:
                return size
    raise AssertionError("the full vertex set must force")


def brute_force_min_certificate(g):
    """Lexicographically smallest forcing set of minimum size."""
    nbrs = adj_sets(g)
    everything = set(range(g.n))
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            if naive_closure(nbrs, set(combo)) == everything:
                return combo
    raise AssertionError("the full vertex set must force")


def girth_by_edge_removal(g):
    """Shortest cycle via per-edge removal + BFS between the endpoints."""
    best = float("inf")
    nbrs = adj_sets(g)
    for u in range(g.n):
        for v in sorted(nbrs[u]):
            if v < u:
                continue
            dist = {u: 0}
            frontier = [u]
            while frontier and v not in dist:
                nxt = []
                for x in frontier:
                    for y in nbrs[x]:
                        if (x, y) in ((u, v), (v, u)):
                            continue
                        if y not in dist:
                            dist[y] = dist[x] + 1
                            nxt.append(y)
                frontier = nxt
            if v in dist:
                best = min(best, dist[v] + 1)
    return best


def contains_kab_naive(g, a, b):
    """Exhaustive disjoint (A, B) search for a complete bipartite subgraph."""
    nbrs = adj_sets(g)
    for aset in combinations(range(g.n), a):
        rest = [v for v in range(g.n) if v not in aset]
        for bset in combinations(rest, b):
            if all(y in nbrs[x] for x in aset for y in bset):
                return True
    return False


def rational_rank(matrix):
    """Exact rank over the rationals by fraction Gaussian elimination."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    rank = 0
    cols = len(rows[0]) if rows else 0
    pivot_row = 0
    for col in range(cols):
        sel = None
        for r in range(pivot_row, len(rows)):
            if rows[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        rows[pivot_row], rows[sel] = rows[sel], rows[pivot_row]
        pv = rows[pivot_row][col]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col] != 0:
                factor = rows[r][col] / pv
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        rank += 1
        if pivot_row == len(rows):
            break
    return rank


def eigenvalue_multiplicity(g, value):
    """dim ker(A - value*I) via exact rank, for integer candidate values."""
    n = g.n
    mat = [[(1 if (g.adj[u] >> v) & 1 else 0) - (value if u == v else 0)
            for v in range(n)] for u in range(n)]
    return n - rational_rank(mat)


def is_connected(g):
    if g.n == 0:
        return True
    seen = {0}
    frontier = [0]
    nbrs = adj_sets(g)
    while frontier:
        nxt = []
        for x in frontier:
            for y in nbrs[x]:
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen) == g.n
