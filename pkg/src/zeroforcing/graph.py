"""Graph representation, generators, and structural queries.

Graphs are simple and undirected on vertices ``0..n-1``.  Adjacency is stored
as one Python integer bitmask per vertex, which keeps the propagation loops
and subset searches elsewhere in the package fast and allocation-free.
Vertex sets throughout the package are plain integer bitmasks as well
(bit ``v`` set means vertex ``v`` is in the set).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

import numpy as np

from .errors import InputError, ResourceError
from .rng import SplitMix64, hash_combine, mix64, mix64_array


def mask_from(vertices: Iterable[int]) -> int:
    """Build a vertex-set bitmask from an iterable of vertex indices."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Iterate the set bits of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with bitmask adjacency rows."""

    n: int
    adj: tuple  # adj[v] = bitmask of neighbours of v
    edge_count: int

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise InputError("adjacency length must equal vertex count")
        total = 0
        for v, row in enumerate(self.adj):
            if row >> self.n:
                raise InputError(f"adjacency row {v} has bits beyond n")
            if (row >> v) & 1:
                raise InputError(f"self-loop at vertex {v}")
            total += row.bit_count()
        if total != 2 * self.edge_count:
            raise InputError("edge_count inconsistent with adjacency bits")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> Iterator[tuple]:
        for u in range(self.n):
            for off in bits(self.adj[u] >> (u + 1)):
                yield (u, u + 1 + off)

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix as float64 (for eigensolves)."""
        a = np.zeros((self.n, self.n), dtype=np.float64)
        for u in range(self.n):
            for v in bits(self.adj[u]):
                a[u, v] = 1.0
        return a


def check_graph_invariants(g: Graph) -> None:
    """Exhaustive bit-level validation: symmetry, irreflexivity, edge count.

    Constructors keep these invariants by construction; this is the
    independent re-check used by the test suite on every generator output.
    """
    total = 0
    for u in range(g.n):
        row = g.adj[u]
        if row >> g.n:
            raise AssertionError(f"row {u} out of range")
        if (row >> u) & 1:
            raise AssertionError(f"self-loop at {u}")
        total += row.bit_count()
        for v in bits(row):
            if not (g.adj[v] >> u) & 1:
                raise AssertionError(f"asymmetric pair ({u},{v})")
    if total != 2 * g.edge_count:
        raise AssertionError("edge count mismatch")


def _graph_from_adj(adj: list) -> Graph:
    total = sum(row.bit_count() for row in adj)
    return Graph(n=len(adj), adj=tuple(adj), edge_count=total // 2)


def graph_from_edge_list(n: int, edges: Iterable[tuple]) -> Graph:
    """Build a graph from (u, v) pairs; duplicate edges collapse."""
    if n < 0:
        raise InputError("vertex count must be >= 0")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise InputError(f"self-loop ({u},{v}) not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return _graph_from_adj(adj)


def _graph_from_bool_matrix(m: np.ndarray) -> Graph:
    """Internal: adjacency from a symmetric boolean matrix (not validated)."""
    n = m.shape[0]
    adj = []
    for v in range(n):
        packed = np.packbits(m[v], bitorder="little").tobytes()
        adj.append(int.from_bytes(packed, "little"))
    return _graph_from_adj(adj)


# ---------------------------------------------------------------------------
# Deterministic generators


def path_graph(n: int) -> Graph:
    return graph_from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs n >= 3")
    return graph_from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return graph_from_edge_list(n, combinations(range(n), 2))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise InputError("part sizes must be >= 0")
    return graph_from_edge_list(
        a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]            # outer cycle
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]   # inner pentagram
    edges += [(i, i + 5) for i in range(5)]                 # spokes
    return graph_from_edge_list(10, edges)


def circulant_graph(n: int, offsets: Iterable[int]) -> Graph:
    """Circulant graph: i is joined to i +/- d (mod n) for each offset d."""
    if n < 1:
        raise InputError("circulant needs n >= 1")
    canon = set()
    for d in offsets:
        d = d % n
        if d == 0:
            raise InputError("offset 0 (mod n) would create self-loops")
        canon.add(min(d, n - d))
    edges = []
    for d in canon:
        for i in range(n):
            edges.append((i, (i + d) % n))
    return graph_from_edge_list(n, edges)


def standard_graph(kind: str, **params) -> Graph:
    """Dispatch to a named generator; used by the CLI's ``generate``."""
    try:
        if kind == "path":
            return path_graph(params.pop("n"))
        if kind == "cycle":
            return cycle_graph(params.pop("n"))
        if kind == "complete":
            return complete_graph(params.pop("n"))
        if kind == "complete_bipartite":
            return complete_bipartite_graph(params.pop("a"), params.pop("b"))
        if kind == "petersen":
            return petersen_graph()
        if kind == "circulant":
            return circulant_graph(params.pop("n"), params.pop("offsets"))
    except KeyError as exc:
        raise InputError(f"missing parameter {exc} for kind '{kind}'")
    raise InputError(f"unknown graph kind '{kind}'")


def line_graph(g: Graph) -> tuple:
    """Line graph of ``g`` plus the edge -> new-vertex index map.

    Vertices of the output are the edges of ``g`` in sorted (u < v) order;
    two are adjacent when the underlying edges share an endpoint.
    """
    if g.edge_count < 1:
        raise InputError("line graph needs at least one edge")
    edge_list = sorted(g.edges())
    index = {e: i for i, e in enumerate(edge_list)}
    adj = [0] * len(edge_list)
    incident = [[] for _ in range(g.n)]
    for e, i in index.items():
        incident[e[0]].append(i)
        incident[e[1]].append(i)
    for around in incident:
        for i, j in combinations(around, 2):
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return _graph_from_adj(adj), index


@dataclass(frozen=True)
class Gf2Matrix:
    """Bit-packed matrix over GF(2): ``rows[i]`` holds row i, LSB = column 0."""

    rows: tuple
    width: int

    def __post_init__(self):
        for r in self.rows:
            if r >> self.width:
                raise InputError("row has bits beyond declared width")


def gf2_rank(mat: Gf2Matrix) -> int:
    """Rank over GF(2) by bitwise Gaussian elimination."""
    basis = []
    for row in mat.rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
    return len(basis)


def odd_inner_product_graph(m: int) -> tuple:
    """Graph on odd-weight binary m-vectors (all-ones excluded), m odd.

    Two distinct vertices are adjacent exactly when the GF(2) inner product
    of their label vectors is 1.  The graph has ``2**(m-1) - 1`` vertices and
    is regular of degree ``(n - 3) / 2``.  Returns the graph together with
    the label vectors as a ``Gf2Matrix`` (row v = label of vertex v).
    """
    if m < 3 or m % 2 == 0:
        raise InputError("label length must be odd and >= 3")
    all_ones = (1 << m) - 1
    labels = [x for x in range(1, 1 << m)
              if x.bit_count() % 2 == 1 and x != all_ones]
    n = len(labels)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if (labels[i] & labels[j]).bit_count() & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return _graph_from_adj(adj), Gf2Matrix(rows=tuple(labels), width=m)


# ---------------------------------------------------------------------------
# Structural queries


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise InputError("degree of empty graph undefined")
    return min(g.degrees())


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise InputError("degree of empty graph undefined")
    return max(g.degrees())


def is_regular(g: Graph) -> Optional[int]:
    """The common degree if the graph is regular, else None."""
    if g.n == 0:
        return 0
    degs = g.degrees()
    d = degs[0]
    return d if all(x == d for x in degs) else None


def girth(g: Graph):
    """Length of the shortest cycle, or ``math.inf`` for forests.

    Runs a BFS from every vertex; a non-tree edge closing at distances
    (dx, dy) witnesses a cycle of length dx + dy + 1.  The minimum over all
    start vertices is exact.
    """
    best = math.inf
    for src in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[src] = 0
        frontier = [src]
        while frontier:
            nxt = []
            for x in frontier:
                if 2 * dist[x] >= best:
                    continue
                for y in bits(g.adj[x]):
                    if dist[y] < 0:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        nxt.append(y)
                    elif parent[x] != y:
                        cand = dist[x] + dist[y] + 1
                        if cand < best:
                            best = cand
            frontier = nxt
        if best == 3:
            break
    return best


def contains_kab(g: Graph, a: int, b: int) -> Optional[tuple]:
    """Find a complete bipartite K_{a,b} subgraph, or None if the graph is free of it.

    Enumerates all a-subsets A and checks for >= b common neighbours outside
    A.  Exponential in ``a`` by design; intended for a <= 3 and n <= 60.
    Returns ``(A, B)`` as vertex tuples when found.
    """
    if not (1 <= a <= b):
        raise InputError("need 1 <= a <= b")
    if a > g.n:
        return None
    for combo in combinations(range(g.n), a):
        common = g.full_mask
        for v in combo:
            common &= g.adj[v]
        common &= ~mask_from(combo)
        if common.bit_count() >= b:
            picked = []
            for v in bits(common):
                picked.append(v)
                if len(picked) == b:
                    break
            return combo, tuple(picked)
    return None


# ---------------------------------------------------------------------------
# Random samplers (seeded, reproducible)


def gnp_sample(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi sample: each pair is an edge independently with prob. p.

    Each unordered pair {u, v} receives its own 53-bit uniform draw obtained
    by SplitMix64-hashing (seed, u, v); the pair is an edge when the draw is
    below ``round(p * 2**53)``.  Identical (n, p, seed) therefore reproduce
    the identical graph on any platform, and no draw depends on any other.
    """
    if not 0.0 <= p <= 1.0:
        raise InputError("p must lie in [0, 1]")
    if n < 0:
        raise InputError("n must be >= 0")
    if n <= 1:
        return graph_from_edge_list(n, [])
    threshold = round(p * (1 << 53))
    iu, iv = np.triu_indices(n, k=1)
    keys = (iu.astype(np.uint64) << np.uint64(32)) | iv.astype(np.uint64)
    h0 = np.uint64(mix64(seed & ((1 << 64) - 1)))
    draws = mix64_array(h0 ^ keys) >> np.uint64(11)
    picked = draws < np.uint64(threshold)
    m = np.zeros((n, n), dtype=bool)
    m[iu[picked], iv[picked]] = True
    m |= m.T
    return _graph_from_bool_matrix(m)


def random_regular_sample(n: int, d: int, seed: int,
                          restart_cap: int = 10_000) -> Graph:
    """Random simple d-regular graph via configuration-model stub pairing.

    Stubs are paired one edge at a time with uniform random stub picks;
    picks that would create a loop or parallel edge are rejected and redrawn.
    If the remaining stubs admit no valid pair the attempt restarts from
    scratch (``restart_cap`` attempts, then ``ResourceError``).  The sampler
    is deterministic per seed.  The distribution is approximately uniform,
    not exactly uniform, which is sufficient for generating typical
    instances.
    """
    if d < 0 or d >= max(n, 1):
        raise InputError("need 0 <= d < n")
    if (n * d) % 2 != 0:
        raise InputError("n*d must be even")
    if d == 0:
        return graph_from_edge_list(n, [])
    rng = SplitMix64(hash_combine(seed, n, d))
    for _ in range(restart_cap):
        stubs = [v for v in range(n) for _ in range(d)]
        adj = [0] * n
        stuck = False
        rejects = 0
        while stubs and not stuck:
            m = len(stubs)
            i = rng.below(m)
            j = rng.below(m)
            u, v = stubs[i], stubs[j]
            if u == v or (adj[u] >> v) & 1:
                rejects += 1
                if rejects >= 64 + 2 * m:
                    remaining = set(stubs)
                    if not any(not (adj[x] >> y) & 1
                               for x in remaining for y in remaining if x < y):
                        stuck = True
                    rejects = 0
                continue
            rejects = 0
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            for k in sorted((i, j), reverse=True):
                stubs[k] = stubs[-1]
                stubs.pop()
        if not stuck and not stubs:
            return _graph_from_adj(adj)
    raise ResourceError(
        f"regular sampler exceeded {restart_cap} restarts for n={n}, d={d}")


# ---------------------------------------------------------------------------
# Edge-list file format: first line "n m", then m lines "u v"; '#' comments.


def parse_edge_list(text: str) -> Graph:
    """Parse the canonical edge-list text format.

    Raises ``InputError`` whose message cites the offending 1-based line.
    """
    header = None
    edges = []
    expected = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected two integers")
        try:
            x, y = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"line {lineno}: expected two integers")
        if header is None:
            header = (x, y)
            expected = y
            if x < 0 or y < 0:
                raise InputError(f"line {lineno}: negative header values")
            continue
        if len(edges) >= expected:
            raise InputError(f"line {lineno}: more edges than declared")
        if not (0 <= x < header[0] and 0 <= y < header[0]):
            raise InputError(f"line {lineno}: vertex out of range")
        if x == y:
            raise InputError(f"line {lineno}: self-loop")
        edges.append((x, y))
    if header is None:
        raise InputError("line 1: missing 'n m' header")
    if len(edges) != expected:
        raise InputError(
            f"declared {expected} edges but found {len(edges)}")
    return graph_from_edge_list(header[0], edges)


def read_edge_list(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges()))
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))
