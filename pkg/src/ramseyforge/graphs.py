"""Labeled simple graphs with bit-packed adjacency.

Vertices are dense integers 0..n-1. Each adjacency row is one Python int
used as a bitset, which keeps clique recursion at machine speed (bitwise
AND + popcount) while staying exact at any n. Graph values are immutable
after construction; concurrent reads are safe.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence, TextIO

import numpy as np


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus one bitmask row per vertex."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.rows) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & (1 << v):
                raise ValueError(f"loop at vertex {v}")
            if row & ~full:
                raise ValueError(f"row {v} references vertices >= {self.n}")

    def validate(self) -> None:
        """Full O(n + m) symmetry check; constructors in this module always pass."""
        for v in range(self.n):
            for u in _bits(self.rows[v]):
                if not (self.rows[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({v},{u})")

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, lexicographic."""
        out = []
        for u in range(self.n):
            m = self.rows[u] >> (u + 1)
            while m:
                low = m & -m
                out.append((u, u + 1 + low.bit_length() - 1))
                m ^= low
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2


@dataclass(frozen=True)
class CliqueSet:
    """All r-cliques of some source graph, each as a sorted vertex tuple."""

    r: int
    members: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.members)


def _bits(mask: int):
    """Yield set bit positions of an int bitmask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_multipartite(part_sizes: Sequence[int]) -> Graph:
    """K_{m1,...,mr}: parts are consecutive label blocks, all cross edges."""
    n = sum(part_sizes)
    full = (1 << n) - 1
    rows = []
    start = 0
    for size in part_sizes:
        part_mask = ((1 << size) - 1) << start
        rows.extend([full ^ part_mask] * size)
        start += size
    return Graph(n, tuple(rows))


def sample_gnp_half(n: int, seed: int) -> Graph:
    """Sample G(n, 1/2) reproducibly.

    Edge bits come from a Philox counter-based stream keyed by the seed:
    the bit for pair index p (pairs in lexicographic order) is bit p of the
    raw stream, so the result is independent of iteration order, thread
    count, and platform.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    m = n * (n - 1) // 2
    if m == 0:
        return empty_graph(n)
    bitgen = np.random.Philox(key=np.uint64(seed & 0xFFFFFFFFFFFFFFFF))
    words = np.atleast_1d(bitgen.random_raw((m + 63) // 64)).astype(np.uint64)
    bits = np.unpackbits(words.view(np.uint8), bitorder="little")[:m]
    adj = np.zeros((n, n), dtype=np.uint8)
    iu = np.triu_indices(n, 1)
    adj[iu] = bits
    adj |= adj.T
    rows = tuple(
        int.from_bytes(np.packbits(adj[v], bitorder="little").tobytes(), "little")
        for v in range(n)
    )
    return Graph(n, rows)


def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    return Graph(G.n, tuple((full ^ row) & ~(1 << v) & full for v, row in enumerate(G.rows)))


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on the given vertices, relabeled 0..|S|-1 by sorted order."""
    sub = sorted(set(vertices))
    for v in sub:
        if not (0 <= v < G.n):
            raise ValueError(f"vertex {v} out of range for n={G.n}")
    index = {v: i for i, v in enumerate(sub)}
    rows = [0] * len(sub)
    for v in sub:
        for u in _bits(G.rows[v]):
            if u in index:
                rows[index[v]] |= 1 << index[u]
    return Graph(len(sub), tuple(rows))


def _degeneracy_order(G: Graph) -> list[int]:
    """Vertices in degeneracy order (repeatedly remove a minimum-degree vertex)."""
    n = G.n
    alive = (1 << n) - 1
    deg = [G.rows[v].bit_count() for v in range(n)]
    order = []
    for _ in range(n):
        v = min((u for u in range(n) if (alive >> u) & 1), key=deg.__getitem__)
        order.append(v)
        alive ^= 1 << v
        for u in _bits(G.rows[v] & alive):
            deg[u] -= 1
    return order


def _count_in(adj: Sequence[int], mask: int, t: int) -> int:
    """Count t-cliques inside `mask` (all members mutually adjacent), ascending labels."""
    if t == 0:
        return 1
    if t == 1:
        return mask.bit_count()
    if mask.bit_count() < t:
        return 0
    total = 0
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        # only labels above v survive, so each clique is counted once
        total += _count_in(adj, m & adj[v], t - 1)
    return total


def count_cliques(G: Graph, r: int, threads: Optional[int] = None) -> int:
    """Number of r-cliques, without materializing them.

    Vertices are processed in degeneracy order, which keeps candidate masks
    small on dense graphs. With threads > 1 the root-vertex range is
    partitioned into fixed chunks whose counts are summed, so the result is
    independent of the partitioning.
    """
    if r < 0:
        raise ValueError("clique size must be nonnegative")
    if r == 0:
        return 1
    if r > G.n:
        return 0
    if r == 1:
        return G.n
    order = _degeneracy_order(G)
    pos = {v: i for i, v in enumerate(order)}
    # relabel so "later in degeneracy order" == "higher label"
    adj = [0] * G.n
    for v in range(G.n):
        for u in _bits(G.rows[v]):
            adj[pos[v]] |= 1 << pos[u]

    def count_range(lo: int, hi: int) -> int:
        above = ~((1 << (lo + 1)) - 1)
        total = 0
        for v in range(lo, hi):
            total += _count_in(adj, adj[v] & above, r - 1)
            above &= ~(1 << (v + 1))
        return total

    nthreads = threads or 1
    if nthreads <= 1:
        return count_range(0, G.n)
    chunk = max(1, (G.n + 15) // 16)
    spans = [(lo, min(lo + chunk, G.n)) for lo in range(0, G.n, chunk)]
    with ThreadPoolExecutor(max_workers=nthreads) as pool:
        return sum(pool.map(lambda span: count_range(*span), spans))


def enumerate_cliques(G: Graph, r: int) -> CliqueSet:
    """All r-cliques exactly once, as sorted tuples in original labels."""
    if r < 0:
        raise ValueError("clique size must be nonnegative")
    if r == 0:
        return CliqueSet(0, ((),))
    if r > G.n:
        return CliqueSet(r, ())
    out: list[tuple[int, ...]] = []
    adj = G.rows

    def extend(prefix: list[int], mask: int, t: int):
        if t == 0:
            out.append(tuple(prefix))
            return
        if mask.bit_count() < t:
            return
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            prefix.append(v)
            extend(prefix, m & adj[v], t - 1)
            prefix.pop()

    extend([], (1 << G.n) - 1, r)
    return CliqueSet(r, tuple(out))


def contains_balanced_multipartite(
    G: Graph, l: int, r: int
) -> tuple[bool, Optional[list[tuple[int, ...]]]]:
    """Exact test for a complete r-partite subgraph with all parts of size l.

    The pattern need not be induced: intra-part edges of G are ignored, all
    cross-part pairs must be edges. Backtracking with symmetry pruning
    (parts ordered by smallest member, members picked ascending). Exact but
    exponential; intended for l*r <= 18 or so.

    Returns (found, parts) where parts lists r sorted l-tuples, or None.
    """
    if l < 1 or r < 1:
        raise ValueError("part size and part count must be positive")
    if l * r > G.n:
        return False, None
    adj = G.rows
    need_deg = l * (r - 1)

    # every pattern vertex sees l*(r-1) others; iterate the filter to a fixpoint
    cand = (1 << G.n) - 1
    while True:
        drop = 0
        for v in _bits(cand):
            if (adj[v] & cand).bit_count() < need_deg:
                drop |= 1 << v
        if not drop:
            break
        cand ^= drop
    if cand.bit_count() < l * r:
        return False, None

    parts: list[tuple[int, ...]] = []

    def find_parts(pool: int, remaining: int, min_first: int) -> bool:
        """Pick `remaining` more parts from `pool`, first members strictly increasing."""
        if remaining == 0:
            return True
        if pool.bit_count() < l * remaining:
            return False

        def choose(m: int, picked: list[int], future: int) -> bool:
            # m: pool vertices above the last picked member; future: pool ∩ adj of picked
            if len(picked) == l:
                parts.append(tuple(picked))
                if find_parts(future, remaining - 1, picked[0]):
                    return True
                parts.pop()
                return False
            while m:
                if m.bit_count() < l - len(picked):
                    return False
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                picked.append(v)
                if choose(m, picked, future & adj[v]):
                    return True
                picked.pop()
            return False

        first = pool & ~((1 << (min_first + 1)) - 1)
        return choose(first, [], pool)

    if find_parts(cand, r, -1):
        return True, parts
    return False, None


# -- edge-list text format ---------------------------------------------------
#
# First line "n m", then m lines "u v" with 0-based labels, LF endings.
# Duplicate edges and loops are rejected.


def parse_edge_list(stream: TextIO) -> Graph:
    header = stream.readline().split()
    if len(header) != 2:
        raise ValueError("edge list must start with a 'n m' header line")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ValueError("edge list header must contain two integers") from exc
    if n < 0 or m < 0:
        raise ValueError("edge list header values must be nonnegative")
    seen = set()
    edges = []
    for lineno in range(m):
        fields = stream.readline().split()
        if len(fields) != 2:
            raise ValueError(f"edge line {lineno + 2}: expected 'u v'")
        u, v = int(fields[0]), int(fields[1])
        if u == v:
            raise ValueError(f"edge line {lineno + 2}: loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge line {lineno + 2}: vertex out of range")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"edge line {lineno + 2}: duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    return from_edges(n, edges)


def read_edge_list(path: str) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_edge_list(fh)


def format_edge_list(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def write_edge_list(G: Graph, path: str) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_edge_list(G))


def brute_force_clique_count(G: Graph, r: int) -> int:
    """Oracle: check all C(n,r) vertex subsets directly. Desk scale only."""
    if r == 0:
        return 1
    return sum(
        1
        for subset in combinations(range(G.n), r)
        if all(G.has_edge(u, v) for u, v in combinations(subset, 2))
    )
