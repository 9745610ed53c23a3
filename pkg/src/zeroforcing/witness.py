"""Witness-family certificates for forcing sets, and their searches.

A *witness* of order k is a pair of vertex tuples (s, t), each of length k,
with s_i adjacent to t_i (diagonal pairs) and s_i non-adjacent to t_j for
i < j (superdiagonal pairs).  Witnesses with disjoint tuple images certify
Z(G) <= n - k, and every forcing run yields one; the two directions together
sandwich n - Z(G) between the best disjoint and best unrestricted orders.

The t-entries of a witness are necessarily pairwise distinct even though
only s-distinctness is part of the definition: if t_i = t_j with i < j, the
diagonal pair (s_i, t_i) and the superdiagonal pair (s_i, t_j) would demand
the same edge to be both present and absent.  The checker enforces this
derived invariant explicitly for clearer diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import sqrt
from typing import Callable, Optional

from .errors import BudgetExceededError, InputError, SoundnessError
from .forcing import ForcingChronicle, is_forcing_set, validate_chronicle
from .graph import Gf2Matrix, Graph, bits, gf2_rank, mask_from


@dataclass(frozen=True)
class Witness:
    s: tuple
    t: tuple

    @property
    def order(self) -> int:
        return len(self.s)


def check_witness(g: Graph, s: tuple, t: tuple):
    """Validate the witness conditions; returns (ok, first_violation).

    Checks run in a fixed order: entry ranges, duplicate s, duplicate t,
    missing diagonal edges, illegal s_i = t_j overlaps with i <= j, and
    present superdiagonal edges.
    """
    if len(s) != len(t):
        raise InputError("s and t must have equal length")
    k = len(s)
    for name, tup in (("s", s), ("t", t)):
        for v in tup:
            if not 0 <= v < g.n:
                return False, f"{name} entry {v} outside vertex range"
    if len(set(s)) != k:
        return False, "duplicate entry in s"
    if len(set(t)) != k:
        return False, "duplicate entry in t"
    for i in range(k):
        if not g.has_edge(s[i], t[i]):
            return False, f"missing diagonal edge (s_{i+1}, t_{i+1})"
    for i in range(k):
        for j in range(i, k):
            if s[i] == t[j]:
                return False, (f"s_{i+1} = t_{j+1} is only permitted for "
                               f"s-index > t-index")
    for i in range(k):
        for j in range(i + 1, k):
            if g.has_edge(s[i], t[j]):
                return False, f"superdiagonal edge (s_{i+1}, t_{j+1}) present"
    return True, None


def is_divided(s: tuple, t: tuple, v1: int, v2: int, n: int) -> bool:
    """True when every s_i lies in part v1 and every t_i in part v2.

    ``v1`` and ``v2`` must partition the vertex set 0..n-1 (as bitmasks).
    """
    full = (1 << n) - 1
    if (v1 & v2) or (v1 | v2) != full:
        raise InputError("v1 and v2 must partition the vertex set")
    return (all((v1 >> x) & 1 for x in s)
            and all((v2 >> x) & 1 for x in t))


def witness_from_forcing(g: Graph, chronicle: ForcingChronicle) -> Witness:
    """Read a witness off a forcing run: t = forced order, s = the forcers."""
    validate_chronicle(g, chronicle)
    s = tuple(forcer for forcer, _ in chronicle.steps)
    t = tuple(forced for _, forced in chronicle.steps)
    ok, why = check_witness(g, s, t)
    if not ok:
        raise SoundnessError(f"chronicle produced an invalid witness: {why}")
    return Witness(s=s, t=t)


def forcing_set_from_witness(g: Graph, w: Witness) -> int:
    """Complement of the t-image; valid for witnesses with disjoint images."""
    ok, why = check_witness(g, w.s, w.t)
    if not ok:
        raise InputError(f"invalid witness: {why}")
    if set(w.s) & set(w.t):
        raise InputError("witness tuple images overlap; the reverse "
                         "direction needs disjoint images")
    fset = g.full_mask & ~mask_from(w.t)
    if not is_forcing_set(g, fset):
        raise SoundnessError("complement of a disjoint witness failed to force")
    return fset


def max_witness_order(g: Graph, disjoint_only: bool = False,
                      budget: Optional[int] = None,
                      observer: Optional[Callable] = None):
    """Largest witness order by backtracking, with the witness found.

    Pairs (s_i, t_i) are chosen in interleaved ascending-index order.  The
    key pruning state is the pool of vertices still usable as future t's:
    every chosen s removes its whole neighbourhood from that pool, so
    ``depth + |pool|`` bounds any completion and cuts the branch when it
    cannot beat the best order found.  With ``disjoint_only`` the s-entries
    also avoid all previous t-entries, giving the certificate direction.

    ``observer``, when given, is called as observer(s_tuple, t_tuple) for
    every witness the search visits (each search node is one).  ``budget``
    caps visited nodes; exhaustion raises ``BudgetExceededError`` whose
    payload carries the best (order, witness) found so far.
    """
    n, adj, full = g.n, g.adj, g.full_mask
    best_k = 0
    best_pair = ((), ())
    nodes = 0
    path_s: list = []
    path_t: list = []

    def visit(used_s: int, used_t: int, pool: int):
        nonlocal best_k, best_pair, nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceededError(
                "witness search budget exhausted",
                evaluations=nodes,
                payload=(best_k, Witness(s=best_pair[0], t=best_pair[1])))
        if observer is not None:
            observer(tuple(path_s), tuple(path_t))
        depth = len(path_s)
        if depth > best_k:
            best_k = depth
            best_pair = (tuple(path_s), tuple(path_t))
        if depth + pool.bit_count() <= best_k:
            return
        s_pool = full & ~used_s
        if disjoint_only:
            s_pool &= ~used_t
        for s in bits(s_pool):
            t_cands = adj[s] & pool
            if not t_cands:
                continue
            shrunk = pool & ~adj[s] & ~(1 << s)
            for t in bits(t_cands):
                path_s.append(s)
                path_t.append(t)
                visit(used_s | (1 << s), used_t | (1 << t),
                      shrunk & ~(1 << t))
                path_s.pop()
                path_t.pop()

    visit(0, 0, full)
    return best_k, Witness(s=best_pair[0], t=best_pair[1])


# ---------------------------------------------------------------------------
# Loose subwitnesses: block relaxation of a witness


@dataclass(frozen=True)
class LooseSubwitness:
    """Blocks S_0..S_m / T_0..T_m with per-block matchings f_1..f_m.

    ``s_blocks`` and ``t_blocks`` are bitmasks of length m+1; ``matchings``
    holds m tuples of (u, f(u)) pairs.  Within a matched block, edges other
    than the matching are deliberately unconstrained.
    """

    k: int
    ell: int
    m: int
    s_blocks: tuple
    t_blocks: tuple
    matchings: tuple


def _edge_between(g: Graph, amask: int, bmask: int) -> Optional[tuple]:
    for v in bits(amask):
        hit = g.adj[v] & bmask
        if hit:
            return v, (hit & -hit).bit_length() - 1
    return None


def check_loose_subwitness(g: Graph, cand: LooseSubwitness):
    """Validate all loose-subwitness conditions; returns (ok, violation)."""
    m = cand.m
    if len(cand.s_blocks) != m + 1 or len(cand.t_blocks) != m + 1:
        return False, "expected m+1 blocks on each side"
    if len(cand.matchings) != m:
        return False, "expected m matchings"
    seen_s = seen_t = 0
    for i in range(m + 1):
        if cand.s_blocks[i] & seen_s:
            return False, f"S_{i} overlaps an earlier S-block"
        if cand.t_blocks[i] & seen_t:
            return False, f"T_{i} overlaps an earlier T-block"
        seen_s |= cand.s_blocks[i]
        seen_t |= cand.t_blocks[i]
    if seen_s.bit_count() != cand.ell or seen_t.bit_count() != cand.ell:
        return False, "united block sizes must equal ell"
    if cand.s_blocks[0].bit_count() != cand.k - cand.ell:
        return False, "S_0 must have k - ell vertices"
    sizes = [cand.s_blocks[i].bit_count() for i in range(1, m + 1)]
    tsizes = [cand.t_blocks[i].bit_count() for i in range(1, m + 1)]
    if sizes != tsizes:
        return False, "matched S/T blocks must have equal sizes"
    if any(sizes[i] < sizes[i + 1] for i in range(len(sizes) - 1)):
        return False, "matched block sizes must be non-increasing"
    if sizes and max(sizes) - min(sizes) > 1:
        return False, "matched block sizes must differ by at most 1"
    if _edge_between(g, cand.s_blocks[0], seen_t):
        return False, "edge between S_0 and T"
    if _edge_between(g, cand.t_blocks[0], seen_s):
        return False, "edge between T_0 and S"
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            hit = _edge_between(g, cand.s_blocks[i], cand.t_blocks[j])
            if hit:
                return False, f"edge between S_{i} and T_{j}"
    for i in range(1, m + 1):
        pairs = cand.matchings[i - 1]
        dom = mask_from(u for u, _ in pairs)
        img = mask_from(v for _, v in pairs)
        if len(pairs) != cand.s_blocks[i].bit_count():
            return False, f"matching {i} size differs from its block"
        if dom != cand.s_blocks[i] or img != cand.t_blocks[i]:
            return False, f"matching {i} is not a bijection S_{i} -> T_{i}"
        for u, v in pairs:
            if not g.has_edge(u, v):
                return False, f"matching {i} pair ({u},{v}) is not an edge"
    return True, None


def loose_subwitness_from_witness(g: Graph, w: Witness, ell: int,
                                  m: int) -> LooseSubwitness:
    """Extract the block relaxation of a witness.

    S_0 takes the first k - ell s-entries, T_0 the last k - ell t-entries;
    the middle s-entries split into m equitable consecutive blocks whose
    t-columns and diagonal pairs become the matched blocks.
    """
    ok, why = check_witness(g, w.s, w.t)
    if not ok:
        raise InputError(f"invalid witness: {why}")
    k = w.order
    if not 0 <= k - ell:
        raise InputError("need ell <= k")
    r = 2 * ell - k
    if not 1 <= m <= r:
        raise InputError("need 1 <= m <= 2*ell - k")
    s0 = mask_from(w.s[:k - ell])
    t0 = mask_from(w.t[ell:])
    q, rem = divmod(r, m)
    s_blocks, t_blocks, matchings = [s0], [t0], []
    pos = k - ell
    for j in range(m):
        size = q + 1 if j < rem else q
        block = list(range(pos, pos + size))
        pos += size
        s_blocks.append(mask_from(w.s[i] for i in block))
        t_blocks.append(mask_from(w.t[i] for i in block))
        matchings.append(tuple((w.s[i], w.t[i]) for i in block))
    cand = LooseSubwitness(k=k, ell=ell, m=m, s_blocks=tuple(s_blocks),
                           t_blocks=tuple(t_blocks),
                           matchings=tuple(matchings))
    ok, why = check_loose_subwitness(g, cand)
    if not ok:
        raise SoundnessError(f"extracted loose subwitness invalid: {why}")
    return cand


# ---------------------------------------------------------------------------
# Superdiagonal pair density over index sets


@dataclass(frozen=True)
class SuperdiagonalMax:
    """Exact maximum of |{(i,j) in A x B : i < j}| with an argmax pair.

    Index sets live in {1..k} (1-based, matching the witness indexing).
    """

    k: int
    a: int
    b: int
    value: int
    argmax: tuple  # (A, B) as 1-based tuples


def max_superdiagonal_pairs(k: int, a: int, b: int) -> SuperdiagonalMax:
    """Brute force over all (A, B) pairs; exhaustive, capped at k <= 12."""
    if not (1 <= a <= k and 1 <= b <= k):
        raise InputError("need 1 <= a, b <= k")
    if k > 12:
        raise InputError("exhaustive search is capped at k <= 12")
    bcombos = list(combinations(range(k), b))
    best = -1
    arg = None
    for acombo in combinations(range(k), a):
        cnt = [0] * (k + 1)
        run = 0
        inset = set(acombo)
        for i in range(k):
            cnt[i] = run
            if i in inset:
                run += 1
        cnt[k] = run
        for bcombo in bcombos:
            val = 0
            for j in bcombo:
                val += cnt[j]
            if val > best:
                best = val
                arg = (acombo, bcombo)
    return SuperdiagonalMax(
        k=k, a=a, b=b, value=best,
        argmax=(tuple(i + 1 for i in arg[0]), tuple(j + 1 for j in arg[1])))


def superdiagonal_pairs_bound(k: int, a: int, b: int) -> int:
    """Closed-form upper bound a*b - g(g+1)/2 with g = max(0, a+b-k)."""
    if not (1 <= a <= k and 1 <= b <= k):
        raise InputError("need 1 <= a, b <= k")
    g = max(0, a + b - k)
    return a * b - (g + 1) * g // 2


_RATIO_CAP = 1 - sqrt(2) / 2  # ~0.2928932


def _ratio_within_cap(value: int, k: int, a: int, b: int) -> bool:
    """Exact integer test of value/(k(a+b)) <= 1 - sqrt(2)/2.

    Equivalent to 2*(k(a+b) - value)^2 >= (k(a+b))^2 with a nonnegative
    difference, so no floating point is involved.
    """
    m = k * (a + b)
    d = m - value
    return d >= 0 and 2 * d * d >= m * m


@dataclass(frozen=True)
class SuperdiagonalRatioScan:
    k: int
    rows: tuple          # (a, b, value, ratio) for all 1 <= a, b <= k
    max_ratio: float
    argmax: tuple        # (a, b) attaining the maximum ratio
    balanced_point: int  # round(sqrt(2) * k / 2), where the max concentrates


def superdiagonal_ratio_table(k: int) -> SuperdiagonalRatioScan:
    """Full table of max superdiagonal pairs over k(a+b), with its maximum.

    Verifies the 1 - sqrt(2)/2 cap exactly for every cell (integer
    arithmetic); a violation would falsify a proven inequality and raises
    ``SoundnessError``.  The argmax lands near a = b = round(sqrt(2)k/2);
    that proximity is reported, not asserted, since it is an asymptotic
    statement.
    """
    rows = []
    best_ratio = -1.0
    best_ab = (0, 0)
    for a in range(1, k + 1):
        for b in range(1, k + 1):
            value = max_superdiagonal_pairs(k, a, b).value
            if not _ratio_within_cap(value, k, a, b):
                raise SoundnessError(
                    f"superdiagonal ratio cap violated at k={k}, a={a}, b={b}")
            ratio = value / (k * (a + b))
            rows.append((a, b, value, ratio))
            if ratio > best_ratio:
                best_ratio = ratio
                best_ab = (a, b)
    return SuperdiagonalRatioScan(
        k=k, rows=tuple(rows), max_ratio=best_ratio, argmax=best_ab,
        balanced_point=round(sqrt(2) * k / 2))


def witness_labels_independent(labels: Gf2Matrix, w: Witness) -> bool:
    """True when the GF(2) label vectors of t_1..t_k are independent."""
    for v in w.t:
        if not 0 <= v < len(labels.rows):
            raise InputError(f"witness vertex {v} has no label row")
    sub = Gf2Matrix(rows=tuple(labels.rows[v] for v in w.t),
                    width=labels.width)
    return gf2_rank(sub) == w.order


# ---------------------------------------------------------------------------
# One-line witness serialization for CLI round trips


def format_witness(w: Witness) -> str:
    return (f"{w.order}; s: {' '.join(map(str, w.s))}; "
            f"t: {' '.join(map(str, w.t))}")


def parse_witness(text: str) -> Witness:
    try:
        header, spart, tpart = [part.strip() for part in text.split(";")]
        k = int(header)
        if not spart.startswith("s:") or not tpart.startswith("t:"):
            raise ValueError
        s = tuple(int(x) for x in spart[2:].split())
        t = tuple(int(x) for x in tpart[2:].split())
    except ValueError:
        raise InputError(f"malformed witness line: {text!r}")
    if len(s) != k or len(t) != k:
        raise InputError(f"witness line declares order {k} but has "
                         f"{len(s)} s-entries and {len(t)} t-entries")
    return Witness(s=s, t=t)
