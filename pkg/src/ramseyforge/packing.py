"""Edge-disjoint clique packings on a complete ground set.

A packing is a family of k-element subsets of {0..s-1} that pairwise share
at most one vertex (two k-sets sharing two vertices would share an edge).
The exact solver finds a true maximum; the greedy solver produces a maximal
packing close to the s^2/(k(k-1)) asymptote and reports how close it got.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional, Sequence, TextIO

import numpy as np

EXACT_CAPS = {3: 13, 4: 15, 5: 13}
EXACT_CAP_DEFAULT = 15  # k >= 6: per-clique edge count is large, search stays small


@dataclass(frozen=True)
class CliquePacking:
    """Pairwise edge-disjoint k-cliques on ground set {0..s-1}."""

    s: int
    k: int
    cliques: tuple[tuple[int, ...], ...]
    mode: str  # "exact" | "greedy"
    delta_report: Optional[float] = None  # greedy shortfall vs s^2/(k(k-1))

    def __len__(self) -> int:
        return len(self.cliques)


def packing_cap(s: int, k: int) -> int:
    """Counting bound: floor(C(s,2) / C(k,2))."""
    return comb(s, 2) // comb(k, 2)


def is_edge_disjoint(packing: CliquePacking) -> bool:
    """Exhaustive pairwise check: any two members share at most one vertex."""
    seen = set()
    for c in packing.cliques:
        for pair in combinations(sorted(c), 2):
            if pair in seen:
                return False
            seen.add(pair)
    return True


def rodl_ratio(packing: CliquePacking) -> float:
    """Packing size relative to the s^2/(k(k-1)) asymptote."""
    return len(packing.cliques) * packing.k * (packing.k - 1) / packing.s**2


def _exact_cap_for(k: int) -> int:
    return EXACT_CAPS.get(k, EXACT_CAP_DEFAULT)


def pack_exact(s: int, k: int) -> CliquePacking:
    """True maximum edge-disjoint k-clique packing of K_s, deterministic.

    Branch and bound over the lexicographically smallest free pair: either
    some chosen clique covers it (candidates ascending) or it is declared
    permanently uncovered. Pruning combines the fractional edge bound, a
    per-vertex degree bound (a vertex hosts at most floor(free_deg/(k-1))
    more cliques), and for odd k a leave-parity bound: cliques remove an
    even number of edges at each member, so free-degree parities are
    invariant and force a minimum leave size.

    Ground sizes are capped (13 for k=3 and k=5, 15 otherwise); beyond
    that use pack_greedy.
    """
    if k < 2:
        raise ValueError("clique size must be at least 2")
    cap_s = _exact_cap_for(k)
    if s > cap_s:
        raise ValueError(
            f"s={s} exceeds the exact-search cap {cap_s} for k={k}; use pack_greedy"
        )
    if s < k:
        return CliquePacking(s, k, (), "exact")

    npairs = comb(s, 2)
    per = comb(k, 2)
    pair_uv = []
    pair_index = {}
    for u in range(s):
        for v in range(u + 1, s):
            pair_index[(u, v)] = len(pair_uv)
            pair_uv.append((u, v))

    def clique_mask(c: Sequence[int]) -> int:
        m = 0
        for a, b in combinations(c, 2):
            m |= 1 << pair_index[(a, b)]
        return m

    parity_invariant = k % 2 == 1
    fd = [s - 1] * s

    def max_extra(free_cnt: int) -> int:
        x = min(free_cnt // per, sum(d // (k - 1) for d in fd) // k)
        if parity_invariant:
            odd = sum(d & 1 for d in fd)
            while x >= 0:
                leave = free_cnt - per * x
                # leave graph needs >= odd/2 edges; an all-even leave has 0 or >= 3
                if leave >= (odd + 1) // 2 and not (odd == 0 and leave in (1, 2)):
                    break
                x -= 1
        return x

    overall_cap = max_extra(npairs)
    full = (1 << npairs) - 1
    chosen: list[tuple[int, ...]] = []
    best: list[tuple[int, ...]] = []
    best_n = 0

    def dfs(used: int, declared: int, free_cnt: int) -> bool:
        nonlocal best, best_n
        if len(chosen) > best_n:
            best, best_n = list(chosen), len(chosen)
            if best_n >= overall_cap:
                return True
        if len(chosen) + max_extra(free_cnt) <= best_n:
            return False
        free = full & ~(used | declared)
        if not free:
            return False
        low = free & -free
        u, v = pair_uv[low.bit_length() - 1]
        others = [w for w in range(s) if w != u and w != v]
        blocked = used | declared

        def cover(ws: list[int], start: int) -> bool:
            if len(ws) == k - 2:
                c = tuple(sorted([u, v] + ws))
                m = clique_mask(c)
                if m & blocked:
                    return False
                chosen.append(c)
                for x in c:
                    fd[x] -= k - 1
                ok = dfs(used | m, declared, free_cnt - per)
                for x in c:
                    fd[x] += k - 1
                chosen.pop()
                return ok
            for i in range(start, len(others)):
                w = others[i]
                if all(
                    not (blocked >> pair_index[(min(x, w), max(x, w))]) & 1
                    for x in [u, v] + ws
                ):
                    if cover(ws + [w], i + 1):
                        return True
            return False

        if cover([], 0):
            return True
        fd[u] -= 1
        fd[v] -= 1
        ok = dfs(used, declared | low, free_cnt - 1)
        fd[u] += 1
        fd[v] += 1
        return ok

    # some maximum packing contains {0..k-1}: K_s is vertex-transitive
    first = tuple(range(k))
    chosen.append(first)
    for x in first:
        fd[x] -= k - 1
    best, best_n = [first], 1
    dfs(clique_mask(first), 0, npairs - per)

    return CliquePacking(s, k, tuple(sorted(best)), "exact")


def _pair_edges(c: Sequence[int]) -> list[tuple[int, int]]:
    return [(u, v) for u, v in combinations(sorted(c), 2)]


def pack_greedy(s: int, k: int, seed: int) -> CliquePacking:
    """Maximal edge-disjoint packing via seeded greedy plus local swaps.

    A shuffled first-fit pass builds a maximal packing; 1-out-2-in swaps
    (remove one member, insert two) then improve it until a fixpoint or the
    10*s^2 attempt cap; a final scan restores maximality. The delta_report
    field gives the relative shortfall against s^2/(k(k-1)).
    """
    if k < 2:
        raise ValueError("clique size must be at least 2")
    if s < k:
        raise ValueError(f"ground size {s} smaller than clique size {k}")
    rng = np.random.Generator(
        np.random.Philox(key=np.array([seed & 0xFFFFFFFFFFFFFFFF, 0x9A], dtype=np.uint64))
    )
    cands = list(combinations(range(s), k))
    used = bytearray(s * s)

    def is_free(c) -> bool:
        return all(not used[u * s + v] for u, v in combinations(c, 2))

    def mark(c, val: int) -> None:
        for u, v in combinations(c, 2):
            used[u * s + v] = val
            used[v * s + u] = val

    members: list[tuple[int, ...]] = []
    for idx in rng.permutation(len(cands)):
        c = cands[idx]
        if is_free(c):
            mark(c, 1)
            members.append(c)

    attempts = 0
    attempt_cap = 10 * s * s
    improved = True
    while improved and attempts < attempt_cap:
        improved = False
        for mi in rng.permutation(len(members)):
            if attempts >= attempt_cap:
                break
            attempts += 1
            mi = int(mi)
            if mi >= len(members):
                continue
            c = members[mi]
            mark(c, 0)
            adds = _addable_after_removal(s, k, c, used, rng)
            swap_in = _two_disjoint(adds)
            if swap_in is not None:
                members.pop(mi)
                for t in swap_in:
                    mark(t, 1)
                    members.append(t)
                improved = True
            else:
                mark(c, 1)

    for c in cands:  # maximality guarantee after swapping
        if is_free(c):
            mark(c, 1)
            members.append(c)

    count = len(members)
    target = s * s / (k * (k - 1))
    delta = max(0.0, 1.0 - count / target)
    return CliquePacking(s, k, tuple(sorted(members)), "greedy", delta_report=delta)


def _addable_after_removal(
    s: int, k: int, removed: Sequence[int], used: bytearray, rng: np.random.Generator
) -> list[tuple[int, ...]]:
    """Cliques that became insertable when `removed` was taken out.

    Any such clique uses at least one freed edge. For k=3 the scan is
    exhaustive; for larger k each freed edge is greedily completed in a few
    seeded vertex orders, which is enough for the swap heuristic.
    """
    freed = _pair_edges(removed)
    adds: list[tuple[int, ...]] = []
    if k == 3:
        for u, v in freed:
            for w in range(s):
                if w == u or w == v:
                    continue
                if not used[u * s + w] and not used[v * s + w]:
                    t = tuple(sorted((u, v, w)))
                    if t != tuple(removed):
                        adds.append(t)
        return adds
    for u, v in freed:
        for _ in range(3):
            current = [u, v]
            for w in rng.permutation(s):
                w = int(w)
                if w in current:
                    continue
                if all(not used[x * s + w] for x in current):
                    current.append(w)
                    if len(current) == k:
                        break
            if len(current) == k:
                t = tuple(sorted(current))
                if t != tuple(removed) and t not in adds:
                    adds.append(t)
    return adds


def _two_disjoint(adds: list[tuple[int, ...]]) -> Optional[tuple[tuple[int, ...], ...]]:
    """First pair of mutually edge-disjoint cliques from the candidate list."""
    for i in range(len(adds)):
        ei = set(_pair_edges(adds[i]))
        for j in range(i + 1, len(adds)):
            if not ei & set(_pair_edges(adds[j])):
                return (adds[i], adds[j])
    return None


# -- packing file format -------------------------------------------------------
#
# Header "s k count mode", then one line of k vertex labels per clique.


def format_packing(packing: CliquePacking) -> str:
    lines = [f"{packing.s} {packing.k} {len(packing.cliques)} {packing.mode}"]
    lines.extend(" ".join(str(v) for v in c) for c in packing.cliques)
    return "\n".join(lines) + "\n"


def parse_packing(stream: TextIO) -> CliquePacking:
    header = stream.readline().split()
    if len(header) != 4:
        raise ValueError("packing file must start with 's k count mode'")
    s, k, count = int(header[0]), int(header[1]), int(header[2])
    mode = header[3]
    if mode not in ("exact", "greedy"):
        raise ValueError(f"unknown packing mode {mode!r}")
    cliques = []
    for i in range(count):
        fields = stream.readline().split()
        if len(fields) != k:
            raise ValueError(f"clique line {i + 2}: expected {k} labels")
        c = tuple(int(x) for x in fields)
        if len(set(c)) != k or not all(0 <= v < s for v in c):
            raise ValueError(f"clique line {i + 2}: invalid member {c}")
        cliques.append(tuple(sorted(c)))
    p = CliquePacking(s, k, tuple(cliques), mode)
    if not is_edge_disjoint(p):
        raise ValueError("packing file violates edge-disjointness")
    return p


def read_packing(path: str) -> CliquePacking:
    with open(path, "r", encoding="ascii") as fh:
        return parse_packing(fh)


def write_packing(packing: CliquePacking, path: str) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_packing(packing))
