"""Executable checks of the structural facts behind the enumeration algorithm.

Two families of tools live here:

* constructive uncrossing: build the partition ``(Y_1..Y_p, W, Z)`` from a
  family of terminal cuts, evaluate its sigma-value, and aggregate it into a
  cheap k-partition;
* witness searches: small terminal sets whose optimal terminal cut recovers a
  given cut, cut-set or part.

All costs are cost-weighted (each hyperedge counts with its cost); with unit
costs this is plain hyperedge counting.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import oracle
from .core import (
    Hypergraph,
    InvalidArgument,
    VertexPartition,
    cut_edges_mask,
    cut_mask_value,
    from_mask,
    mask_members,
    partition_edges_mask,
    proper_mask,
    to_mask,
    validate_partition,
)
from .flow import source_minimal_mask, terminal_cut_masks


@dataclass(frozen=True)
class UncrossedPartition:
    """``(Y_1, ..., Y_p, W, Z)``; Y parts may be empty."""

    Y: tuple[frozenset[int], ...]
    W: frozenset[int]
    Z: frozenset[int]

    @property
    def p(self) -> int:
        return len(self.Y)

    def masks(self) -> tuple[list[int], int, int]:
        return [to_mask(y) for y in self.Y], to_mask(self.W), to_mask(self.Z)


@dataclass(frozen=True)
class SigmaBreakdown:
    cost_partition: int
    cost_wz: int
    alpha: int
    beta: int

    @property
    def sigma(self) -> int:
        return self.cost_partition + self.cost_wz + self.alpha + self.beta


@dataclass(frozen=True)
class UncrossingVerdict:
    hypothesis_holds: bool
    inequality_holds: bool | None
    # None when p != 2 or the hypothesis fails
    equality_when_p2: bool | None
    sigma: SigmaBreakdown | None = None
    bound: int | None = None

    @property
    def ok(self) -> bool:
        return self.inequality_holds is not False and self.equality_when_p2 is not False


@dataclass(frozen=True)
class Aggregation:
    indices: tuple[int, ...]
    parts: tuple[frozenset[int], ...]
    cost: int
    bound: int
    holds: bool


@dataclass(frozen=True)
class UncrossingTheoremVerdict:
    hypothesis_holds: bool
    partition: tuple[frozenset[int], ...] | None = None
    cost: int | None = None
    min_pair: int | None = None
    bound_holds: bool | None = None
    contains_sink_strictly: bool | None = None
    strict_required: bool | None = None
    strict_holds: bool | None = None

    @property
    def ok(self) -> bool:
        return (
            self.bound_holds is not False
            and self.contains_sink_strictly is not False
            and self.strict_holds is not False
        )


@dataclass(frozen=True)
class UniqueWitnessVerdict:
    found: bool
    S: tuple[int, ...] | None = None
    T: tuple[int, ...] | None = None


@dataclass(frozen=True)
class ContainmentVerdict:
    source_side: frozenset[int]
    contained: bool
    optimal_for_complement: bool

    @property
    def ok(self) -> bool:
        return self.contained and self.optimal_for_complement


def _subsets(vertices: Sequence[int], max_size: int, min_size: int = 1) -> list[tuple[int, ...]]:
    out = []
    for size in range(min_size, min(max_size, len(vertices)) + 1):
        out.extend(itertools.combinations(vertices, size))
    return out


# ---------------------------------------------------------------- uncrossing


def uncross(G: Hypergraph, U: Iterable[int], sink_sides: Sequence[Iterable[int]]) -> UncrossedPartition:
    """Uncross sink sides ``A_1..A_p`` (each containing ``V - U``).

    ``Z`` is what no ``A_i`` covers, ``W`` what at least two cover, and ``Y_i``
    what only ``A_i`` covers.
    """
    u_mask = proper_mask(G, U)
    sides = [to_mask(A) for A in sink_sides]
    if len(sides) < 2:
        raise InvalidArgument(f"need at least 2 cuts, got {len(sides)}")
    outside = G.full_mask ^ u_mask
    for i, A in enumerate(sides):
        if A & ~G.full_mask:
            raise InvalidArgument(f"sink side {i} has vertices outside V")
        if A & outside != outside:
            raise InvalidArgument(f"sink side {i} does not contain the complement of U")
    covered = 0
    W = 0
    for A in sides:
        W |= covered & A
        covered |= A
    Z = G.full_mask ^ covered
    Y = tuple(from_mask(A & ~W) for A in sides)
    return UncrossedPartition(Y, from_mask(W), from_mask(Z))


def sigma(G: Hypergraph, P: UncrossedPartition) -> SigmaBreakdown:
    ys, W, Z = P.masks()
    parts = [y for y in ys if y] + [m for m in (W, Z) if m]
    cost_partition = cost_wz = alpha = beta = 0
    for em, c in zip(G.edge_masks, G.costs):
        touched = sum(1 for m in parts if em & m)
        if touched >= 2:
            cost_partition += c
        y_hits = sum(1 for y in ys if em & y)
        if em & Z:
            if y_hits + (1 if em & W else 0) >= 2:
                alpha += c
            if em & W and not em & ~(W | Z):
                cost_wz += c
        elif y_hits >= 2:
            beta += c
    return SigmaBreakdown(cost_partition, cost_wz, alpha, beta)


def lemma_sink_sides(G: Hypergraph, U: Iterable[int], R: Iterable[int], S: Sequence[int]) -> list[frozenset[int]]:
    """Sink sides of the source-minimal minimum ``((S + R) - u_i, V - U)`` cuts."""
    u_mask = proper_mask(G, U)
    r_mask, s_mask = to_mask(R), to_mask(S)
    sink = G.full_mask ^ u_mask
    out = []
    for u in S:
        src = (s_mask | r_mask) & ~(1 << u)
        _, lo = source_minimal_mask(G, src, sink)
        out.append(from_mask(G.full_mask ^ lo))
    return out


def _check_lemma_shape(G: Hypergraph, U, R, S) -> tuple[int, int, list[int]]:
    u_mask = proper_mask(G, U)
    r_mask = to_mask(R)
    S = list(S)
    if not r_mask or r_mask & ~u_mask or r_mask == u_mask:
        raise InvalidArgument("R must be a non-empty proper subset of U")
    if len(set(S)) != len(S) or to_mask(S) & ~u_mask or to_mask(S) & r_mask:
        raise InvalidArgument("S must be distinct vertices of U outside R")
    return u_mask, r_mask, S


def _hypothesis(sides: list[int], S: list[int]) -> bool:
    for i, u in enumerate(S):
        bit = 1 << u
        if not sides[i] & bit:
            return False
        if any(sides[j] & bit for j in range(len(sides)) if j != i):
            return False
    return True


def check_uncrossing_lemma(
    G: Hypergraph,
    U: Iterable[int],
    R: Iterable[int],
    S: Sequence[int],
    sink_sides: Sequence[Iterable[int]],
) -> UncrossingVerdict:
    """Sigma of the uncrossed partition against the cheapest pair of cuts.

    ``sink_sides[i]`` must be the sink side of a minimum
    ``((S + R) - S[i], V - U)``-terminal cut; that is the caller's job.
    """
    _check_lemma_shape(G, U, R, S)
    sides = [to_mask(A) for A in sink_sides]
    S = list(S)
    if len(sides) != len(S) or len(S) < 2:
        raise InvalidArgument("need one sink side per vertex of S, and |S| >= 2")
    if not _hypothesis(sides, S):
        return UncrossingVerdict(False, None, None)
    P = uncross(G, U, sink_sides)
    br = sigma(G, P)
    values = [cut_mask_value(G, A) for A in sides]
    bound = min(values[i] + values[j] for i, j in itertools.combinations(range(len(values)), 2))
    equality = (br.sigma == bound) if len(S) == 2 else None
    return UncrossingVerdict(True, br.sigma <= bound, equality, br, bound)


def aggregate(G: Hypergraph, P: UncrossedPartition, k: int) -> Aggregation:
    """First (k-1)-subset of the Y parts whose aggregated k-partition is cheap enough.

    The aggregated partition is ``(Y_i1, ..., Y_i(k-1), everything else)``;
    it qualifies when twice its cost is at most ``cost + alpha + beta`` of
    ``P``. Subsets made only of non-empty Y parts are scanned first.
    """
    if not isinstance(k, int) or k < 2:
        raise InvalidArgument(f"k must be >= 2, got {k!r}")
    if P.p < 2 * k - 2:
        raise InvalidArgument(f"need p >= 2k-2 = {2 * k - 2}, got p={P.p}")
    ys, _, _ = P.masks()
    br = sigma(G, P)
    bound = br.cost_partition + br.alpha + br.beta
    nonempty = [i for i, y in enumerate(ys) if y]
    pools = [nonempty] if len(nonempty) >= k - 1 else []
    pools.append(list(range(P.p)))
    first = None
    for pool in pools:
        for idx in itertools.combinations(pool, k - 1):
            chosen = [ys[i] for i in idx]
            rest = G.full_mask
            for y in chosen:
                rest &= ~y
            parts = chosen + [rest]
            cost = sum(G.costs[i] for i in mask_members(partition_edges_mask(G, [m for m in parts if m])))
            if first is None:
                first = (idx, parts, cost)
            if 2 * cost <= bound:
                return Aggregation(idx, tuple(from_mask(m) for m in parts), cost, bound, True)
    idx, parts, cost = first
    return Aggregation(idx, tuple(from_mask(m) for m in parts), cost, bound, False)


def check_uncrossing_theorem(
    G: Hypergraph,
    U: Iterable[int],
    R: Iterable[int],
    S: Sequence[int],
    sink_sides: Sequence[Iterable[int]],
    k: int,
) -> UncrossingTheoremVerdict:
    """Build the cheap k-partition promised by uncrossing plus aggregation.

    Checks that twice its cost is at most the cheapest pair ``d(A_i) + d(A_j)``,
    that its last part strictly contains ``V - U``, and that the bound is
    strict whenever some hyperedge lies inside ``W + Z`` and meets both.
    """
    u_mask, _, S = _check_lemma_shape(G, U, R, S)
    sides = [to_mask(A) for A in sink_sides]
    if len(sides) != len(S):
        raise InvalidArgument("need one sink side per vertex of S")
    if len(S) < 2 * k - 2 or len(S) < 2:
        raise InvalidArgument(f"need |S| >= max(2, 2k-2), got {len(S)}")
    if not _hypothesis(sides, S):
        return UncrossingTheoremVerdict(False)
    P = uncross(G, U, sink_sides)
    agg = aggregate(G, P, k)
    values = [cut_mask_value(G, A) for A in sides]
    min_pair = min(values[i] + values[j] for i, j in itertools.combinations(range(len(values)), 2))
    sink = G.full_mask ^ u_mask
    last = to_mask(agg.parts[-1])
    strict_required = sigma(G, P).cost_wz > 0
    return UncrossingTheoremVerdict(
        True,
        agg.parts,
        agg.cost,
        min_pair,
        bound_holds=2 * agg.cost <= min_pair,
        contains_sink_strictly=(last & sink == sink) and last != sink,
        strict_required=strict_required,
        strict_holds=(2 * agg.cost < min_pair) if strict_required else None,
    )


# ----------------------------------------------------------------- witnesses


def _witness_scan(G: Hypergraph, v1: int, t_mask: int, max_size: int) -> tuple[int, ...] | None:
    target = cut_edges_mask(G, v1)
    for S in _subsets(mask_members(v1), max_size):
        _, A = source_minimal_mask(G, to_mask(S), t_mask)
        if A & ~v1 == 0 and cut_edges_mask(G, A) == target:
            return S
    return None


def find_witness_k2(G: Hypergraph, V1: Iterable[int], T: Iterable[int]) -> tuple[int, ...] | None:
    """Smallest-first scan for ``S`` in ``V1``, ``|S| <= 2``, whose source-minimal
    minimum (S,T)-terminal cut ``A`` lies in ``V1`` and crosses the same
    hyperedges as ``V1``. Returns None if there is none.

    ``(V1, V - V1)`` is expected to be a minimum cut; that is not checked.
    """
    v1 = proper_mask(G, V1)
    t_mask = to_mask(T)
    if not t_mask or t_mask & v1 or t_mask & ~G.full_mask:
        raise InvalidArgument("T must be a non-empty subset of the complement of V1")
    return _witness_scan(G, v1, t_mask, 2)


def _check_partition_hypothesis(G: Hypergraph, P: VertexPartition, T: Iterable[int]) -> tuple[list[int], int]:
    masks = validate_partition(G, P.parts)
    t_mask = to_mask(T)
    if t_mask & masks[0] or t_mask & ~G.full_mask:
        raise InvalidArgument("T must lie outside the first part")
    for j, m in enumerate(masks[1:], start=2):
        if not t_mask & m:
            raise InvalidArgument(f"T misses part {j}")
    if partition_edges_mask(G, masks) != cut_edges_mask(G, masks[0]):
        raise InvalidArgument("the first part does not carry the whole crossing set")
    return masks, t_mask


def find_witness_general(G: Hypergraph, P: VertexPartition, T: Iterable[int]) -> tuple[int, ...] | None:
    """Scan ``S`` in the first part of ``P`` with ``|S| <= 2k-1`` (k = number of parts)
    for a source-minimal minimum (S,T)-terminal cut that lies in the first part
    and crosses exactly the partition's hyperedges.

    ``P`` is expected to be a minimum k-partition; that is not checked.
    """
    masks, t_mask = _check_partition_hypothesis(G, P, T)
    return _witness_scan(G, masks[0], t_mask, 2 * P.k - 1)


def check_unique_terminal_witness(
    G: Hypergraph, U: Iterable[int], k: int, opt: int | None = None
) -> UniqueWitnessVerdict:
    """Look for small ``S``, ``T`` making ``(U, V - U)`` the unique minimum
    ``(S + s, T + t)``-terminal cut, with ``s = min(U)``, ``t = min(V - U)``
    and ``|S|, |T| <= 2k-3``.

    Requires ``d(U) < OPT_k``; ``opt`` defaults to the brute-force optimum.
    """
    u_mask = proper_mask(G, U)
    if opt is None:
        opt = oracle.brute_force_min_k_cutsets(G, k).opt_value
    if cut_mask_value(G, u_mask) >= opt:
        raise InvalidArgument(f"need d(U) < OPT_{k} = {opt}")
    inside = mask_members(u_mask)
    outside = mask_members(G.full_mask ^ u_mask)
    s, t = inside[0], outside[0]
    extra_s = _subsets(inside[1:], 2 * k - 3, min_size=0)
    extra_t = _subsets(outside[1:], 2 * k - 3, min_size=0)
    for S in extra_s:
        s_mask = to_mask(S) | 1 << s
        for T in extra_t:
            t_mask = to_mask(T) | 1 << t
            _, lo, hi = terminal_cut_masks(G, s_mask, t_mask)
            if not lo == hi == u_mask:
                continue
            full_S, full_T = (s, *S), (t, *T)
            if G.n <= oracle.MAX_SUBSET_VERTICES:
                sides = oracle.brute_force_all_min_terminal_cuts(G, full_S, full_T)
                if sides != [from_mask(u_mask)]:
                    continue
            return UniqueWitnessVerdict(True, full_S, full_T)
    return UniqueWitnessVerdict(False)


def check_containment_lemma(
    G: Hypergraph, P: VertexPartition, S: Iterable[int], T: Iterable[int]
) -> ContainmentVerdict:
    """The source-minimal minimum (S,T)-terminal cut stays inside the first part
    of ``P`` and is optimal against the whole complement of that part."""
    masks, t_mask = _check_partition_hypothesis(G, P, T)
    v1 = masks[0]
    s_mask = to_mask(S)
    if not s_mask or s_mask & ~v1:
        raise InvalidArgument("S must be a non-empty subset of the first part")
    value, U = source_minimal_mask(G, s_mask, t_mask)
    against_rest, _ = source_minimal_mask(G, s_mask, G.full_mask ^ v1)
    return ContainmentVerdict(
        from_mask(U),
        contained=U & ~v1 == 0,
        optimal_for_complement=cut_mask_value(G, U) == against_rest,
    )
