"""Brute-force reference implementations for desk-scale validation.

Nothing in here touches the flow network: terminal cuts are found by
scanning subsets, and minimum k-cut-sets by scanning every k-partition.
"""

from __future__ import annotations

import time
from typing import Iterable, Iterator

from .core import CutSet, Hypergraph, InvalidArgument, from_mask, to_mask
from .enumerate import EnumerationReport, EnumerationStats

MAX_PARTITION_VERTICES = 12
MAX_SUBSET_VERTICES = 16


class SizeGuardError(InvalidArgument):
    """The instance is too large for exhaustive enumeration."""


def k_partition_labels(n: int, k: int) -> Iterator[list[int]]:
    """Restricted-growth strings of length ``n`` using exactly ``k`` blocks.

    ``labels[v]`` is the block of vertex ``v``; vertex 0 is always in block 0
    and each new block index appears in increasing order, so each unordered
    partition is produced once.
    """
    if n == 0 or k > n:
        return
    labels = [0] * n

    def rec(i: int, used: int) -> Iterator[list[int]]:
        if i == n:
            if used == k:
                yield labels
            return
        # enough vertices left to open the missing blocks
        if used + (n - i) < k:
            return
        for b in range(min(used + 1, k)):
            labels[i] = b
            yield from rec(i + 1, max(used, b + 1))

    labels[0] = 0
    yield from rec(1, 1)


def _crossing_from_labels(G: Hypergraph, labels: list[int]) -> int:
    mask = 0
    for i, e in enumerate(G.edges):
        first = labels[e[0]]
        for v in e[1:]:
            if labels[v] != first:
                mask |= 1 << i
                break
    return mask


def brute_force_min_k_cutsets(G: Hypergraph, k: int) -> EnumerationReport:
    """All minimum k-cut-sets, by scanning every partition of V into k blocks.

    Stats reuse the report fields: ``candidate_sets`` counts partitions
    scanned and ``candidate_cutsets`` counts distinct crossing sets.
    """
    if not isinstance(k, int) or k < 2 or k > G.n:
        raise InvalidArgument(f"k must satisfy 2 <= k <= n={G.n}, got {k!r}")
    if G.n > MAX_PARTITION_VERTICES:
        raise SizeGuardError(f"brute force limited to n <= {MAX_PARTITION_VERTICES}, got n={G.n}")
    start = time.perf_counter()
    costs = G.costs
    seen: dict[int, int] = {}
    scanned = 0
    for labels in k_partition_labels(G.n, k):
        scanned += 1
        mask = _crossing_from_labels(G, labels)
        if mask not in seen:
            seen[mask] = sum(costs[i] for i in range(G.m) if mask >> i & 1)
    # positive costs: a minimum k-cut-set is always the crossing set of some
    # k-partition, so the empty set is already present when G has >= k components
    opt = min(seen.values())
    family = sorted(CutSet.from_edge_mask(G, m) for m, c in seen.items() if c == opt)
    stats = EnumerationStats(
        terminal_cut_calls=0,
        candidate_sets=scanned,
        candidate_cutsets=len(seen),
        millis=int((time.perf_counter() - start) * 1000),
    )
    return EnumerationReport(k=k, opt_value=opt, family=family, stats=stats)


def brute_force_all_min_terminal_cuts(
    G: Hypergraph, S: Iterable[int], T: Iterable[int]
) -> list[frozenset[int]]:
    """Every optimal source side ``U`` with ``S <= U <= V - T``, by exhaustive scan."""
    S, T = list(S), list(T)
    if G.n > MAX_SUBSET_VERTICES:
        raise SizeGuardError(f"brute force limited to n <= {MAX_SUBSET_VERTICES}, got n={G.n}")
    for v in S + T:
        if not isinstance(v, int) or not 0 <= v < G.n:
            raise InvalidArgument(f"vertex {v!r} outside 0..{G.n - 1}")
    s_mask, t_mask = to_mask(S), to_mask(T)
    if not s_mask or not t_mask or s_mask & t_mask:
        raise InvalidArgument("S and T must be non-empty and disjoint")
    free = [v for v in range(G.n) if not (s_mask | t_mask) >> v & 1]
    best = None
    winners: list[int] = []
    for bits in range(1 << len(free)):
        U = s_mask
        for j, v in enumerate(free):
            if bits >> j & 1:
                U |= 1 << v
        value = 0
        for em, c in zip(G.edge_masks, G.costs):
            # per-edge test: meets U and meets the complement
            if em & U and em & ~U:
                value += c
        if best is None or value < best:
            best, winners = value, [U]
        elif value == best:
            winners.append(U)
    return sorted((from_mask(U) for U in winners), key=lambda s: sorted(s))


def brute_force_min_terminal_value(G: Hypergraph, S: Iterable[int], T: Iterable[int]) -> int:
    sides = brute_force_all_min_terminal_cuts(G, S, T)
    U = to_mask(sides[0])
    return sum(c for em, c in zip(G.edge_masks, G.costs) if em & U and em & ~U)


def all_cut_values(G: Hypergraph) -> dict[int, int]:
    """Cut value of every non-empty proper vertex subset, keyed by bitmask."""
    if G.n > MAX_SUBSET_VERTICES:
        raise SizeGuardError(f"brute force limited to n <= {MAX_SUBSET_VERTICES}, got n={G.n}")
    full = (1 << G.n) - 1
    out = {}
    for U in range(1, full):
        out[U] = sum(c for em, c in zip(G.edge_masks, G.costs) if em & U and em & (full ^ U))
    return out


def minimum_k_partitions(G: Hypergraph, k: int) -> tuple[int, list[tuple[int, ...]]]:
    """(OPT_k, every minimum k-partition as a tuple of vertex bitmasks).

    Parts are listed in order of their minimum vertex.
    """
    if G.n > MAX_PARTITION_VERTICES:
        raise SizeGuardError(f"brute force limited to n <= {MAX_PARTITION_VERTICES}, got n={G.n}")
    best = None
    out: list[tuple[int, ...]] = []
    for labels in k_partition_labels(G.n, k):
        mask = _crossing_from_labels(G, labels)
        cost = sum(G.costs[i] for i in range(G.m) if mask >> i & 1)
        if best is None or cost < best:
            best, out = cost, []
        if cost == best:
            parts = [0] * k
            for v, b in enumerate(labels):
                parts[b] |= 1 << v
            out.append(tuple(parts))
    return best, out
