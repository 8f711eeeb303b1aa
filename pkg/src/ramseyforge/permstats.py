"""Permutation statistics of cliques landing inside an edge-disjoint packing.

For a graph H on the same ground set as a packing, a permutation sigma of
the vertices, and a clique size l, the central statistic is the number of
l-cliques of H whose sigma-image lies inside some packing member. Its
expectation over a uniform sigma has an exact closed form in rational
arithmetic; the Monte Carlo estimator here is the empirical side of the
same quantity, and the tail helpers evaluate the binomial-style bounds
on the lower tail that drive the distance-Ramsey estimates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import comb, factorial
from typing import Optional, Sequence

import numpy as np

from ramseyforge.graphs import Graph, enumerate_cliques
from ramseyforge.packing import CliquePacking

BRUTE_FORCE_MAX_S = 9
_BATCH = 4096


@dataclass(frozen=True)
class PermutationStatReport:
    """Exact and empirical expectation of the packed-clique statistic."""

    s: int
    k: int
    l: int
    exact_expectation: Fraction
    asymptotic_prediction: float
    ratio: float  # exact / prediction: the measured correction factor
    samples: int
    empirical_mean: float
    empirical_variance: float

    CSV_HEADER = "s,k,l,exact,prediction,ratio,samples,mean,variance"

    def csv_row(self) -> str:
        return (
            f"{self.s},{self.k},{self.l},{self.exact_expectation},"
            f"{self.asymptotic_prediction!r},{self.ratio!r},{self.samples},"
            f"{self.empirical_mean!r},{self.empirical_variance!r}"
        )


def _check_args(H: Graph, packing: CliquePacking, l: int) -> None:
    if H.n != packing.s:
        raise ValueError(f"graph has {H.n} vertices but packing ground set is {packing.s}")
    if not (2 <= l <= packing.k):
        raise ValueError(f"clique size l={l} must satisfy 2 <= l <= k={packing.k}")


def _member_subsets(packing: CliquePacking, l: int) -> frozenset:
    """All l-subsets of packing members. Distinct for l >= 2 (edge-disjointness)."""
    subs = set()
    for member in packing.cliques:
        for sub in combinations(sorted(member), l):
            subs.add(sub)
    return frozenset(subs)


def stat_F(H: Graph, packing: CliquePacking, sigma: Sequence[int], l: int) -> int:
    """Number of l-cliques of H that sigma maps inside some packing member."""
    _check_args(H, packing, l)
    if len(sigma) != H.n or sorted(sigma) != list(range(H.n)):
        raise ValueError("sigma must be a permutation of 0..s-1")
    targets = _member_subsets(packing, l)
    count = 0
    for clique in enumerate_cliques(H, l).members:
        if tuple(sorted(sigma[v] for v in clique)) in targets:
            count += 1
    return count


def exact_expectation(H: Graph, packing: CliquePacking, l: int) -> Fraction:
    """Expectation of the packed-clique statistic over a uniform permutation.

    For each l-clique of H and each packing member there are
    k(k-1)...(k-l+1) * (s-l)! permutations placing the clique inside the
    member, and no image lies in two members, so

        E = cl(H,l) * |packing| * k(k-1)...(k-l+1) * (s-l)! / s!

    computed exactly.
    """
    _check_args(H, packing, l)
    s, k = packing.s, packing.k
    cl = len(enumerate_cliques(H, l).members)
    falling = 1
    for i in range(l):
        falling *= k - i
    return Fraction(cl * len(packing.cliques) * falling * factorial(s - l), factorial(s))


def asymptotic_prediction(H: Graph, packing: CliquePacking, l: int) -> float:
    """Large-s prediction (k-2)...(k-l+1) * cl(H,l) / s^(l-2).

    This is the closed form with |packing| replaced by the s^2/(k(k-1))
    packing asymptote; the exact/prediction ratio measures the finite-size
    correction.
    """
    _check_args(H, packing, l)
    s, k = packing.s, packing.k
    cl = len(enumerate_cliques(H, l).members)
    coeff = 1.0
    for i in range(2, l):
        coeff *= k - i
    return coeff * cl / s ** (l - 2)


def brute_force_expectation(H: Graph, packing: CliquePacking, l: int) -> Fraction:
    """Oracle: average stat over every one of the s! permutations, exactly."""
    _check_args(H, packing, l)
    s = packing.s
    if s > BRUTE_FORCE_MAX_S:
        raise ValueError(f"s={s} too large for the {BRUTE_FORCE_MAX_S}! permutation sweep")
    targets = _member_subsets(packing, l)
    cliques = enumerate_cliques(H, l).members
    total = 0
    for sigma in permutations(range(s)):
        for clique in cliques:
            if tuple(sorted(sigma[v] for v in clique)) in targets:
                total += 1
    return Fraction(total, factorial(s))


def sample_permutations(s: int, samples: int, seed: int, offset: int = 0) -> np.ndarray:
    """Seeded batch of uniform permutations, one per row.

    Sample index i always draws from the Philox stream keyed by
    (seed, i // batch), independent of how callers schedule batches.
    """
    out = np.empty((samples, s), dtype=np.int32)
    lo = 0
    while lo < samples:
        batch_index = (offset + lo) // _BATCH
        base = batch_index * _BATCH
        width = min(_BATCH - ((offset + lo) - base), samples - lo)
        rng = np.random.Generator(
            np.random.Philox(
                key=np.array([seed & 0xFFFFFFFFFFFFFFFF, batch_index], dtype=np.uint64)
            )
        )
        block = rng.permuted(
            np.tile(np.arange(s, dtype=np.int32), (_BATCH, 1)), axis=1
        )
        start = (offset + lo) - base
        out[lo : lo + width] = block[start : start + width]
        lo += width
    return out


def _batched_stats(
    H: Graph, packing: CliquePacking, l: int, samples: int, seed: int
) -> np.ndarray:
    """Per-sample packed-clique counts, vectorized over permutations.

    Each permutation row P gives inverse images of every member; the count
    equals the number of l-cliques of H inside those preimages, summed over
    members (edge-disjointness makes the sum overlap-free for l >= 2).
    """
    s, k = packing.s, packing.k
    members = np.array(packing.cliques, dtype=np.int32).reshape(len(packing.cliques), k)
    adj = np.zeros((s, s), dtype=bool)
    for u, v in H.edges():
        adj[u, v] = adj[v, u] = True
    position_subsets = list(combinations(range(k), l))
    values = np.empty(samples, dtype=np.int64)
    done = 0
    while done < samples:
        width = min(_BATCH, samples - done)
        P = sample_permutations(s, width, seed, offset=done)
        inv = np.argsort(P, axis=1).astype(np.int32)
        if len(packing.cliques) == 0:
            values[done : done + width] = 0
            done += width
            continue
        Y = inv[:, members]  # (width, a, k) preimage vertices per member
        counts = np.zeros((width, members.shape[0]), dtype=np.int64)
        for combo in position_subsets:
            ok = np.ones((width, members.shape[0]), dtype=bool)
            for a, b in combinations(combo, 2):
                ok &= adj[Y[:, :, a], Y[:, :, b]]
            counts += ok
        values[done : done + width] = counts.sum(axis=1)
        done += width
    return values


def monte_carlo_expectation(
    H: Graph, packing: CliquePacking, l: int, samples: int, seed: int
) -> PermutationStatReport:
    """Empirical mean/variance of the statistic over seeded random permutations."""
    _check_args(H, packing, l)
    if samples < 1:
        raise ValueError("need at least one sample")
    values = _batched_stats(H, packing, l, samples, seed)
    exact = exact_expectation(H, packing, l)
    prediction = asymptotic_prediction(H, packing, l)
    ratio = float(exact) / prediction if prediction > 0 else math.nan
    return PermutationStatReport(
        s=packing.s,
        k=packing.k,
        l=l,
        exact_expectation=exact,
        asymptotic_prediction=prediction,
        ratio=ratio,
        samples=samples,
        empirical_mean=float(values.mean()),
        empirical_variance=float(values.var()),
    )


# -- lower-tail bounds --------------------------------------------------------


def _miss_probability(k: int) -> Fraction:
    """Probability that a fixed packing member is not hit.

    For k=3: a fixed triple of G(n,1/2) is not a triangle (7/8). For k>=4:
    the member's induced random graph has no triangle, P(k,3) from the
    exact avoidance enumeration.
    """
    if k == 3:
        return Fraction(7, 8)
    from ramseyforge.bounds import avoidance_probability_exact

    prob = avoidance_probability_exact(k, 3)
    return Fraction(prob.count, 1 << comb(k, 2))


def closed_form_tail_log2(a: int, z: int, miss: Fraction, count_exponent: int) -> float:
    """log2 of the closed-form tail bound (z+1)^count_exponent * a^z * miss^a."""
    q = math.log2(miss.numerator) - math.log2(miss.denominator)
    return a * q + z * math.log2(a) + count_exponent * math.log2(z + 1)


def exact_tail_log2(a: int, z: int, miss: Fraction, count_exponent: int) -> float:
    """log2 of the exact tail sum the closed form relaxes.

    count_exponent 1: sum_{i<=z} C(a,i) (1-q)^i q^(a-i).
    count_exponent 2: the double sum over i<=z, j<=i, i.e. the single sum
    with each term j weighted by (z-j+1).
    """
    hit = 1 - miss
    total = Fraction(0)
    for j in range(z + 1):
        term = comb(a, j) * hit**j * miss ** (a - j)
        total += (z - j + 1) * term if count_exponent == 2 else term
    return math.log2(total.numerator) - math.log2(total.denominator)


def tail_probability_bound(
    s: int,
    k: int,
    epsilon: float,
    a: int,
    ratio: float = 0.0,
    form: str = "loose",
    miss: Optional[Fraction] = None,
) -> float:
    """log2 of the bound on P(at most z packing members are hit).

    The threshold is z = floor((k-2) * s^(2-epsilon) * (1+ratio)). Each of
    the `a` edge-disjoint members is hit independently (its edges are
    disjoint from every other member's, and edges of G(n,1/2) are
    independent), missing with probability `miss`. Requires a > 2z.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    z = math.floor((k - 2) * s ** (2 - epsilon) * (1 + ratio))
    if a <= 2 * z:
        raise ValueError(f"a={a} must exceed 2z={2 * z} for the tail bound to apply")
    if miss is None:
        miss = _miss_probability(k)
    count_exponent = 1 if k == 3 else 2
    if form == "loose":
        return closed_form_tail_log2(a, z, miss, count_exponent)
    if form == "exact":
        return exact_tail_log2(a, z, miss, count_exponent)
    raise ValueError(f"unknown form {form!r}")
