"""Digraph core: reachability, transitive closure/reduction, SCC condensation,
and the k-TC-spanner validity checker every other module tests against.

Vertices are dense 0-based integers.  Reachability rows are bit-packed into
Python ints (bit v of row u set iff u reaches v by a nonempty path), which
keeps verification O(m * n/64) word operations and lets the checker stream
over column blocks so n ~ 2^16 instances stay within memory.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import NotADag

# Full reach matrices are cached on the digraph below this vertex count;
# larger graphs are verified in column blocks instead.
REACH_CACHE_LIMIT = 4096
_BLOCK_COLS = 4096


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set-bit indices of ``mask`` in increasing order."""
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


class Digraph:
    """Immutable simple digraph on vertices 0..n-1.

    No self-loops, no duplicate edges.  Safe for concurrent readers; the
    reachability cache is computed once on first use.
    """

    __slots__ = ("n", "edges", "_out", "_in", "_reach", "_is_dag", "_topo")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        es = sorted(set((int(u), int(v)) for u, v in edges))
        for u, v in es:
            if u == v:
                raise ValueError(f"self-loop ({u},{u}) not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(es)
        self._out: tuple[tuple[int, ...], ...] | None = None
        self._in: tuple[tuple[int, ...], ...] | None = None
        self._reach: ReachMatrix | None = None
        self._is_dag: bool | None = None
        self._topo: tuple[int, ...] | None = None

    # -- basic accessors -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def out_adj(self) -> tuple[tuple[int, ...], ...]:
        if self._out is None:
            out: list[list[int]] = [[] for _ in range(self.n)]
            for u, v in self.edges:
                out[u].append(v)
            self._out = tuple(tuple(a) for a in out)
        return self._out

    @property
    def in_adj(self) -> tuple[tuple[int, ...], ...]:
        if self._in is None:
            inc: list[list[int]] = [[] for _ in range(self.n)]
            for u, v in self.edges:
                inc[v].append(u)
            self._in = tuple(tuple(sorted(a)) for a in inc)
        return self._in

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"

    # -- structure -------------------------------------------------------

    def topological_order(self) -> tuple[int, ...]:
        """Kahn topological order (smallest vertex first among ready ones).

        Raises NotADag on cyclic input.
        """
        if self._topo is not None:
            return self._topo
        import heapq

        indeg = [0] * self.n
        for _, v in self.edges:
            indeg[v] += 1
        heap = [v for v in range(self.n) if indeg[v] == 0]
        heapq.heapify(heap)
        order: list[int] = []
        out = self.out_adj
        while heap:
            u = heapq.heappop(heap)
            order.append(u)
            for w in out[u]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    heapq.heappush(heap, w)
        if len(order) != self.n:
            raise NotADag("digraph contains a directed cycle")
        self._topo = tuple(order)
        self._is_dag = True
        return self._topo

    @property
    def is_dag(self) -> bool:
        if self._is_dag is None:
            try:
                self.topological_order()
            except NotADag:
                self._is_dag = False
        return self._is_dag

    def reach(self) -> "ReachMatrix":
        """Cached full reachability matrix (graphs up to REACH_CACHE_LIMIT)."""
        if self._reach is None:
            if self.n > REACH_CACHE_LIMIT:
                raise MemoryError(
                    f"n={self.n} exceeds the full reach-matrix cache limit; "
                    "use the blocked helpers instead"
                )
            rows = next(_reach_blocks(self, self.n))[2]
            self._reach = ReachMatrix(self.n, rows)
        return self._reach


@dataclass(frozen=True)
class ReachMatrix:
    """Bit-packed reachability: bit v of rows[u] iff u ~> v by a nonempty path.

    Diagonal bits are set exactly for vertices on a directed cycle.
    """

    n: int
    rows: tuple[int, ...]

    def has(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def pair_count(self) -> int:
        """Number of ordered reachable pairs, self-pairs excluded."""
        total = 0
        for u, row in enumerate(self.rows):
            total += (row & ~(1 << u)).bit_count()
        return total

    def comparable_pairs(self) -> Iterator[tuple[int, int]]:
        """Ordered pairs (u, v), u != v, with u ~> v; lexicographic order."""
        for u, row in enumerate(self.rows):
            for v in iter_bits(row & ~(1 << u)):
                yield (u, v)

    def is_transitive(self) -> bool:
        for u in range(self.n):
            acc = 0
            for v in iter_bits(self.rows[u]):
                acc |= self.rows[v]
            if acc & ~self.rows[u]:
                return False
        return True


def strongly_connected_components(G: Digraph) -> list[list[int]]:
    """Iterative Tarjan SCC; components in reverse topological discovery order,
    each sorted ascending."""
    n = G.n
    out = G.out_adj
    index = [-1] * n
    low = [0] * n
    on_stack = bytearray(n)
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = 1
            advanced = False
            adj = out[v]
            while pi < len(adj):
                w = adj[pi]
                pi += 1
                if index[w] == -1:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = 0
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comps


def condense_scc(G: Digraph) -> tuple[Digraph, list[int]]:
    """Condensation DAG plus the vertex -> component-id mapping.

    Component ids follow a topological order of the condensation, and within
    that constraint components are numbered deterministically.
    """
    comps = strongly_connected_components(G)
    # Tarjan emits components in reverse topological order of the condensation.
    comps.reverse()
    comp_of = [0] * G.n
    for cid, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = cid
    cedges = set()
    for u, v in G.edges:
        cu, cv = comp_of[u], comp_of[v]
        if cu != cv:
            cedges.add((cu, cv))
    return Digraph(len(comps), cedges), comp_of


def _reach_blocks(
    G: Digraph, block_cols: int = _BLOCK_COLS
) -> Iterator[tuple[int, int, list[int]]]:
    """Yield (lo, hi, rows) reachability blocks: bit (v-lo) of rows[u] set iff
    u ~> v for lo <= v < hi.  Handles cycles via SCC condensation."""
    n = G.n
    if G.is_dag:
        order = G.topological_order()
        out = G.out_adj
        for lo in range(0, max(n, 1), block_cols):
            hi = min(lo + block_cols, n)
            rows = [0] * n
            for u in reversed(order):
                acc = 0
                for w in out[u]:
                    acc |= rows[w]
                    if lo <= w < hi:
                        acc |= 1 << (w - lo)
                rows[u] = acc
            yield lo, hi, rows
    else:
        C, comp_of = condense_scc(G)
        members: list[list[int]] = [[] for _ in range(C.n)]
        for v in range(n):
            members[comp_of[v]].append(v)
        corder = C.topological_order()
        cout = C.out_adj
        for lo in range(0, max(n, 1), block_cols):
            hi = min(lo + block_cols, n)
            member_mask = [0] * C.n
            for c, mem in enumerate(members):
                msk = 0
                for v in mem:
                    if lo <= v < hi:
                        msk |= 1 << (v - lo)
                member_mask[c] = msk
            creach = [0] * C.n
            for c in reversed(corder):
                acc = 0
                for d in cout[c]:
                    acc |= member_mask[d] | creach[d]
                creach[c] = acc
            rows = [0] * n
            for v in range(n):
                c = comp_of[v]
                r = creach[c]
                if len(members[c]) > 1:
                    r |= member_mask[c]
                rows[v] = r
            yield lo, hi, rows


def transitive_closure(G: Digraph) -> ReachMatrix:
    """Reachability by nonempty paths; cached on the digraph."""
    return G.reach()


def transitive_closure_graph(G: Digraph) -> Digraph:
    """TC(G) as a digraph (self-pairs from cycles are dropped: no self-loops)."""
    R = G.reach()
    edges = [(u, v) for u in range(G.n) for v in iter_bits(R.rows[u] & ~(1 << u))]
    return Digraph(G.n, edges)


def transitive_reduction(G: Digraph) -> Digraph:
    """Unique transitive reduction of a DAG.

    Edge (u,v) survives iff no other out-neighbor of u reaches v.
    Raises NotADag on cyclic input.
    """
    if not G.is_dag:
        raise NotADag("transitive reduction is unique only for DAGs")
    R = G.reach()
    rows = R.rows
    keep: list[tuple[int, int]] = []
    out = G.out_adj
    for u in range(G.n):
        children = out[u]
        d = len(children)
        if d == 0:
            continue
        if d == 1:
            keep.append((u, children[0]))
            continue
        closed = [rows[w] | (1 << w) for w in children]
        prefix = [0] * (d + 1)
        for i in range(d):
            prefix[i + 1] = prefix[i] | closed[i]
        suffix = 0
        for i in range(d - 1, -1, -1):
            v = children[i]
            if not ((prefix[i] | suffix) >> v) & 1:
                keep.append((u, v))
            suffix |= closed[i]
    return Digraph(G.n, keep)


def all_pairs_distances(G: Digraph) -> np.ndarray:
    """BFS-exact unweighted distance matrix; np.inf for unreachable pairs.

    Desk-scale helper (dense n x n output); verification of large spanners
    goes through verify_spanner's blocked path instead.
    """
    from collections import deque

    n = G.n
    out = G.out_adj
    dist = np.full((n, n), np.inf)
    for s in range(n):
        row = dist[s]
        row[s] = 0
        dq = deque([s])
        while dq:
            u = dq.popleft()
            du = row[u]
            for w in out[u]:
                if row[w] == np.inf:
                    row[w] = du + 1
                    dq.append(w)
    np.fill_diagonal(dist, 0.0)
    return dist


@dataclass(frozen=True)
class VerifyResult:
    """Outcome of verify_spanner: valid, or the first (lex-smallest) failure."""

    valid: bool
    kind: str | None = None  # "foreign" | "distance"
    pair: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.valid

    def describe(self) -> str:
        if self.valid:
            return "valid"
        if self.kind == "foreign":
            return f"foreign edge {self.pair} not in TC(G)"
        return f"pair {self.pair} has spanner distance > k"


def verify_spanner(
    G: Digraph, H: Iterable[tuple[int, int]] | Digraph, k: int
) -> VerifyResult:
    """Check that H is a k-TC-spanner of G.

    Valid iff (a) every H edge lies in TC(G) and (b) every ordered comparable
    pair (u, v), u != v, has d_H(u, v) <= k.  Failures are reported, not
    raised; the lexicographically smallest offending edge/pair is returned.
    Self-reachability pairs (u, u) arising from cycles impose no requirement.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    h_edges = H.edges if isinstance(H, Digraph) else sorted(set(H))
    n = G.n
    out_h: list[list[int]] = [[] for _ in range(n)]
    for u, v in h_edges:
        if u == v or not (0 <= u < n and 0 <= v < n):
            return VerifyResult(False, "foreign", (u, v))
        out_h[u].append(v)

    # Bucket H edges by head-column block so each block scan is O(bucket).
    by_block: dict[int, list[tuple[int, int]]] = {}
    for u, v in h_edges:
        by_block.setdefault(v // _BLOCK_COLS, []).append((u, v))

    foreign: tuple[int, int] | None = None
    distance_bad: tuple[int, int] | None = None
    for lo, hi, rows in _reach_blocks(G):
        bucket = by_block.get(lo // _BLOCK_COLS, [])
        # (a) foreign edges with head in this block
        for u, v in bucket:
            if not (rows[u] >> (v - lo)) & 1:
                cand = (u, v)
                if foreign is None or cand < foreign:
                    foreign = cand
        # (b) distance <= k coverage over this block
        cover = [0] * n
        for u, v in bucket:
            cover[u] |= 1 << (v - lo)
        base = list(cover)
        for _ in range(k - 1):
            changed = False
            new = [0] * n
            for u in range(n):
                acc = base[u]
                for w in out_h[u]:
                    acc |= cover[w]
                if acc != cover[u]:
                    changed = True
                new[u] = acc
            cover = new
            if not changed:
                break
        for u in range(n):
            need = rows[u]
            if lo <= u < hi:
                need &= ~(1 << (u - lo))
            missing = need & ~cover[u]
            if missing:
                v = lo + (missing & -missing).bit_length() - 1
                cand = (u, v)
                if distance_bad is None or cand < distance_bad:
                    distance_bad = cand
    if foreign is not None:
        return VerifyResult(False, "foreign", foreign)
    if distance_bad is not None:
        return VerifyResult(False, "distance", distance_bad)
    return VerifyResult(True)


@dataclass
class SpannerResult:
    """Edge set claimed to be a k-TC-spanner of ``base``, plus provenance.

    ``stats`` records at least: size, shortcut_count, algorithm, and the seed
    when randomness was involved.
    """

    base: Digraph
    k: int
    spanner_edges: tuple[tuple[int, int], ...]
    stats: dict = field(default_factory=dict)

    @classmethod
    def build(
        cls,
        base: Digraph,
        k: int,
        edges: Iterable[tuple[int, int]],
        algorithm: str,
        **extra,
    ) -> "SpannerResult":
        es = tuple(sorted(set(edges)))
        stats = {
            "size": len(es),
            "shortcut_count": len(set(es) - set(base.edges)),
            "algorithm": algorithm,
        }
        stats.update(extra)
        return cls(base=base, k=k, spanner_edges=es, stats=stats)

    @property
    def size(self) -> int:
        return len(self.spanner_edges)

    def verify(self) -> VerifyResult:
        return verify_spanner(self.base, self.spanner_edges, self.k)


def line_digraph(n: int) -> Digraph:
    """Directed line L_n: edges (i, i+1) for 0 <= i < n-1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Digraph(n, [(i, i + 1) for i in range(n - 1)])


def distances_from(G: Digraph, source: int) -> list[float]:
    """Single-source BFS distances (math.inf when unreachable)."""
    import math
    from collections import deque

    out = G.out_adj
    dist = [math.inf] * G.n
    dist[source] = 0
    dq = deque([source])
    while dq:
        u = dq.popleft()
        for w in out[u]:
            if dist[w] == math.inf:
                dist[w] = dist[u] + 1
                dq.append(w)
    return dist
