"""Deterministic enumeration of all minimum k-cut-sets of a hypergraph.

The general routine computes the source-minimal minimum (S,T)-terminal cut
for every disjoint pair of vertex sets with ``|S|, |T| <= 2k-1``. A cut whose
crossing set already splits G into k components is a candidate cut-set;
otherwise its source side becomes a candidate part, and every k-partition
assembled from candidate parts contributes its crossing set. The cheapest
k-cut-sets among the candidates are returned.

For k = 2 a faster routine fixes a sink vertex and only needs source sets of
size at most two, i.e. ``n(n-1)/2`` terminal-cut computations.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .core import (
    CutSet,
    Hypergraph,
    InvalidArgument,
    count_components,
    cut_edges_mask,
    partition_edges_mask,
    to_mask,
)
from .flow import source_minimal_mask


@dataclass
class EnumerationStats:
    terminal_cut_calls: int = 0
    candidate_sets: int = 0
    candidate_cutsets: int = 0
    millis: int = 0


@dataclass
class EnumerationReport:
    k: int
    opt_value: int
    family: list[CutSet]
    stats: EnumerationStats = field(default_factory=EnumerationStats)

    def cut_set_ids(self) -> list[tuple[int, ...]]:
        return [c.edge_ids for c in self.family]


def _sorted_subsets(vertices: Sequence[int], max_size: int) -> list[tuple[int, ...]]:
    subsets = []
    for size in range(1, min(max_size, len(vertices)) + 1):
        subsets.extend(itertools.combinations(vertices, size))
    subsets.sort()
    return subsets


def _chunks(items: list, parts: int) -> list[list]:
    if parts <= 1 or len(items) <= 1:
        return [items]
    size = -(-len(items) // parts)
    return [items[i : i + size] for i in range(0, len(items), size)]


def _run_chunks(worker, G: Hypergraph, chunks: list[list], extra, threads: int) -> list:
    if threads <= 1 or len(chunks) == 1:
        return [worker(G, c, extra) for c in chunks]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(worker, [G] * len(chunks), chunks, [extra] * len(chunks)))


@dataclass
class _PairScan:
    pairs: int = 0
    flows: int = 0
    cutsets: set[int] = field(default_factory=set)
    parts: set[int] = field(default_factory=set)


def _scan_pairs(G: Hypergraph, sources: list[tuple[int, ...]], extra) -> _PairScan:
    """Resolve every pair (S, T) with S in ``sources`` and T a disjoint target.

    Pairs are visited by increasing set sizes so a pair can
    reuse an earlier answer U for (S - x, T) or (S, T - y): when S <= U and
    U misses T, U is also the source-minimal minimum (S, T)-terminal cut
    (U stays feasible, the optimum cannot drop, and any optimal (S, T) side
    is optimal for the smaller pair so it contains U).
    """
    targets, k = extra
    target_info = sorted((len(T), to_mask(T)) for T in targets)
    source_info = sorted((len(S), to_mask(S)) for S in sources)
    known: dict[int, tuple[int, bool]] = {}
    solved: dict[int, dict[int, int]] = {}
    scan = _PairScan()
    level = 0
    for s_size, s_mask in source_info:
        if s_size != level:
            # only answers for sources one smaller are ever consulted
            solved = {m: d for m, d in solved.items() if m.bit_count() == s_size - 1}
            level = s_size
        by_target: dict[int, int] = {}
        solved[s_mask] = by_target
        below = []
        if s_size > 1:
            rest = s_mask
            while rest:
                low = rest & -rest
                rest ^= low
                prev = solved.get(s_mask ^ low)
                if prev is not None:
                    below.append(prev)
        for t_size, t_mask in target_info:
            if s_mask & t_mask:
                continue
            U = -1
            for prev in below:
                W = prev[t_mask]
                if W & s_mask == s_mask:
                    U = W
                    break
            if U < 0 and t_size > 1:
                rest = t_mask
                while rest:
                    low = rest & -rest
                    rest ^= low
                    W = by_target[t_mask ^ low]
                    if not W & t_mask:
                        U = W
                        break
            scan.pairs += 1
            if U < 0:
                _, U = source_minimal_mask(G, s_mask, t_mask)
                scan.flows += 1
            by_target[t_mask] = U
            if U not in known:
                delta = cut_edges_mask(G, U)
                splits = count_components(G, delta) >= k
                known[U] = (delta, splits)
                if splits:
                    scan.cutsets.add(delta)
                else:
                    scan.parts.add(U)
    return scan


def _edge_cost(G: Hypergraph, mask: int) -> int:
    return sum(c for i, c in enumerate(G.costs) if mask >> i & 1)


def _degenerate(G: Hypergraph, k: int, start: float) -> EnumerationReport | None:
    if count_components(G) >= k:
        stats = EnumerationStats(millis=int((time.perf_counter() - start) * 1000))
        return EnumerationReport(k=k, opt_value=0, family=[CutSet((), 0)], stats=stats)
    return None


def _partitions_from_candidates(candidates: list[int], full: int, k: int) -> list[tuple[int, ...]]:
    """Unordered k-partitions of V whose parts are all candidate sets."""
    index = {U: i for i, U in enumerate(candidates)}
    found = []
    chosen: list[int] = []

    def rec(start: int, union: int) -> None:
        if len(chosen) == k - 1:
            rest = full ^ union
            j = index.get(rest)
            # the complement must come last in index order to count each partition once
            if j is not None and j >= start:
                found.append(tuple(chosen) + (rest,))
            return
        for i in range(start, len(candidates)):
            U = candidates[i]
            if U & union:
                continue
            chosen.append(U)
            rec(i + 1, union | U)
            chosen.pop()

    rec(0, 0)
    return found


def enum_min_k_cutsets(G: Hypergraph, k: int, threads: int = 1) -> EnumerationReport:
    """Enumerate all minimum k-cut-sets of ``G`` via terminal cuts."""
    if not isinstance(k, int) or k < 2 or k > G.n:
        raise InvalidArgument(f"k must satisfy 2 <= k <= n={G.n}, got {k!r}")
    start = time.perf_counter()
    early = _degenerate(G, k, start)
    if early is not None:
        return early

    subsets = _sorted_subsets(range(G.n), 2 * k - 1)
    results = _run_chunks(_scan_pairs, G, _chunks(subsets, 4 * threads), (subsets, k), threads)

    calls = 0
    cutsets: set[int] = set()
    parts: set[int] = set()
    for scan in results:
        calls += scan.pairs
        cutsets |= scan.cutsets
        parts |= scan.parts

    full = G.full_mask
    candidates = sorted(parts)
    for P in _partitions_from_candidates(candidates, full, k):
        cutsets.add(partition_edges_mask(G, P))

    opt = None
    best: list[int] = []
    for delta in cutsets:
        if count_components(G, delta) < k:
            continue
        cost = _edge_cost(G, delta)
        if opt is None or cost < opt:
            opt, best = cost, [delta]
        elif cost == opt:
            best.append(delta)
    if opt is None:
        raise RuntimeError("no k-cut-set among the candidates")

    stats = EnumerationStats(
        terminal_cut_calls=calls,
        candidate_sets=len(parts),
        candidate_cutsets=len(cutsets),
        millis=int((time.perf_counter() - start) * 1000),
    )
    family = sorted(CutSet.from_edge_mask(G, d) for d in best)
    return EnumerationReport(k=k, opt_value=opt, family=family, stats=stats)


def _scan_sources(G: Hypergraph, sources: list[tuple[int, ...]], t_mask: int) -> list[tuple[int, int]]:
    out = []
    for S in sources:
        value, U = source_minimal_mask(G, to_mask(S), t_mask)
        out.append((value, cut_edges_mask(G, U)))
    return out


def enum_min_cutsets_k2(G: Hypergraph, threads: int = 1) -> EnumerationReport:
    """All minimum cut-sets using at most ``n(n-1)/2`` terminal-cut computations.

    Vertex 0 is the fixed sink; every source set of size one or two drawn from
    the remaining vertices is tried.
    """
    if G.n < 2:
        raise InvalidArgument(f"need at least 2 vertices, got n={G.n}")
    start = time.perf_counter()
    early = _degenerate(G, 2, start)
    if early is not None:
        return early

    sink = 0
    sources = _sorted_subsets(range(1, G.n), 2)
    results = _run_chunks(_scan_sources, G, _chunks(sources, 4 * threads), 1 << sink, threads)

    calls = 0
    by_delta: dict[int, int] = {}
    for chunk in results:
        calls += len(chunk)
        for value, delta in chunk:
            by_delta[delta] = value
    opt = min(by_delta.values())
    family = sorted(CutSet.from_edge_mask(G, d) for d, v in by_delta.items() if v == opt)
    stats = EnumerationStats(
        terminal_cut_calls=calls,
        candidate_sets=0,
        candidate_cutsets=len(by_delta),
        millis=int((time.perf_counter() - start) * 1000),
    )
    return EnumerationReport(k=2, opt_value=opt, family=family, stats=stats)


def min_k_cut_value(G: Hypergraph, k: int) -> int:
    return enum_min_k_cutsets(G, k).opt_value
