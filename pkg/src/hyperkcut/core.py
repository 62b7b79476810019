"""Hypergraph data model and cut-function primitives.

Vertices are the dense integers ``0..n-1``. Internally vertex sets and
hyperedge sets are carried as integer bitmasks; the public functions accept
any iterable of ints and return frozensets / :class:`CutSet` objects.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class InvalidArgument(ValueError):
    """Raised when an operation's precondition is violated."""


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def mask_members(mask: int) -> list[int]:
    """Sorted members of a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Hypergraph:
    """Immutable hypergraph with strictly positive integer hyperedge costs.

    Parameters
    ----------
    n:
        Number of vertices; vertices are ``0..n-1``.
    edges:
        Hyperedges in identifier order. Each is an iterable of distinct
        vertices of size at least 2.
    costs:
        Optional per-edge positive integer costs (unit costs if omitted).
    """

    __slots__ = ("_n", "_edges", "_costs", "_masks", "_incidence", "_flow_cache")

    def __init__(
        self,
        n: int,
        edges: Iterable[Iterable[int]],
        costs: Sequence[int] | None = None,
    ) -> None:
        if not isinstance(n, int) or n < 1:
            raise InvalidArgument(f"vertex count must be a positive integer, got {n!r}")
        edge_list: list[tuple[int, ...]] = []
        for idx, e in enumerate(edges):
            verts = tuple(e)
            if len(set(verts)) != len(verts):
                raise InvalidArgument(f"hyperedge {idx} repeats a vertex: {verts}")
            if len(verts) < 2:
                raise InvalidArgument(f"hyperedge {idx} has size {len(verts)} (< 2)")
            for v in verts:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise InvalidArgument(f"hyperedge {idx} has vertex {v!r} outside 0..{n - 1}")
            edge_list.append(tuple(sorted(verts)))
        if costs is None:
            cost_list = [1] * len(edge_list)
        else:
            cost_list = list(costs)
            if len(cost_list) != len(edge_list):
                raise InvalidArgument(
                    f"{len(cost_list)} costs given for {len(edge_list)} hyperedges"
                )
            for idx, c in enumerate(cost_list):
                if not isinstance(c, int) or isinstance(c, bool) or c < 1:
                    raise InvalidArgument(f"hyperedge {idx} has non-positive or non-integer cost {c!r}")
        self._n = n
        self._edges = tuple(edge_list)
        self._costs = tuple(cost_list)
        self._masks = tuple(to_mask(e) for e in edge_list)
        incidence: list[list[int]] = [[] for _ in range(n)]
        for idx, e in enumerate(edge_list):
            for v in e:
                incidence[v].append(idx)
        self._incidence = tuple(tuple(x) for x in incidence)
        self._flow_cache = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, ...], ...]:
        return self._edges

    @property
    def costs(self) -> tuple[int, ...]:
        return self._costs

    @property
    def edge_masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge identifiers incident to each vertex."""
        return self._incidence

    @property
    def p(self) -> int:
        """Representation size: total of hyperedge sizes."""
        return sum(len(e) for e in self._edges)

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    @property
    def total_cost(self) -> int:
        return sum(self._costs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self._n, self._edges, self._costs) == (other._n, other._edges, other._costs)

    def __hash__(self) -> int:
        return hash((self._n, self._edges, self._costs))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self._n}, edges={list(self._edges)}, costs={list(self._costs)})"

    def __getstate__(self):
        return (self._n, self._edges, self._costs)

    def __setstate__(self, state) -> None:
        n, edges, costs = state
        self.__init__(n, edges, costs)


@dataclass(frozen=True, order=True)
class CutSet:
    """Canonical set of hyperedge identifiers with its total cost.

    Equality and ordering only look at ``edge_ids``.
    """

    edge_ids: tuple[int, ...]
    total_cost: int = field(compare=False)

    @classmethod
    def from_ids(cls, G: Hypergraph, ids: Iterable[int]) -> "CutSet":
        canon = tuple(sorted(set(ids)))
        for i in canon:
            if not 0 <= i < G.m:
                raise InvalidArgument(f"unknown edge id {i}")
        return cls(canon, sum(G.costs[i] for i in canon))

    @classmethod
    def from_edge_mask(cls, G: Hypergraph, mask: int) -> "CutSet":
        ids = tuple(mask_members(mask))
        return cls(ids, sum(G.costs[i] for i in ids))

    def __len__(self) -> int:
        return len(self.edge_ids)

    def __iter__(self):
        return iter(self.edge_ids)


@dataclass(frozen=True)
class VertexPartition:
    """Ordered tuple of k >= 2 pairwise disjoint, non-empty vertex sets covering V."""

    parts: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, G: Hypergraph, parts: Iterable[Iterable[int]]) -> "VertexPartition":
        frozen = tuple(frozenset(p) for p in parts)
        validate_partition(G, frozen)
        return cls(frozen)

    @property
    def k(self) -> int:
        return len(self.parts)

    def masks(self) -> list[int]:
        return [to_mask(p) for p in self.parts]


def validate_partition(G: Hypergraph, parts: Sequence[Iterable[int]]) -> list[int]:
    if len(parts) < 2:
        raise InvalidArgument(f"a partition needs at least 2 parts, got {len(parts)}")
    masks = []
    seen = 0
    for i, part in enumerate(parts):
        mask = _vertex_mask(G, part)
        if not mask:
            raise InvalidArgument(f"part {i} is empty")
        if mask & seen:
            raise InvalidArgument(f"part {i} overlaps an earlier part")
        seen |= mask
        masks.append(mask)
    if seen != G.full_mask:
        raise InvalidArgument("parts do not cover every vertex")
    return masks


def _vertex_mask(G: Hypergraph, U: Iterable[int]) -> int:
    mask = 0
    for v in U:
        if not isinstance(v, int) or not 0 <= v < G.n:
            raise InvalidArgument(f"vertex {v!r} outside 0..{G.n - 1}")
        mask |= 1 << v
    return mask


def proper_mask(G: Hypergraph, U: Iterable[int]) -> int:
    """Bitmask of ``U``, rejecting the empty set and the full vertex set."""
    mask = _vertex_mask(G, U)
    if mask == 0 or mask == G.full_mask:
        raise InvalidArgument("vertex set must be non-empty and a proper subset of V")
    return mask


def cut_mask_value(G: Hypergraph, mask: int) -> int:
    """Cost of hyperedges crossing (mask, complement). No validation."""
    total = 0
    for em, c in zip(G.edge_masks, G.costs):
        inside = em & mask
        if inside and inside != em:
            total += c
    return total


def cut_edges_mask(G: Hypergraph, mask: int) -> int:
    """Bitmask over edge ids of hyperedges crossing (mask, complement)."""
    out = 0
    for i, em in enumerate(G.edge_masks):
        inside = em & mask
        if inside and inside != em:
            out |= 1 << i
    return out


def partition_edges_mask(G: Hypergraph, part_masks: Sequence[int]) -> int:
    """Bitmask of hyperedges meeting at least two of the given (disjoint) parts."""
    out = 0
    for i, em in enumerate(G.edge_masks):
        for pm in part_masks:
            if em & pm:
                if em & ~pm:
                    out |= 1 << i
                break
    return out


def cut_value(G: Hypergraph, U: Iterable[int]) -> int:
    """Total cost of hyperedges with a vertex on both sides of (U, V minus U)."""
    return cut_mask_value(G, proper_mask(G, U))


def crossing_set(G: Hypergraph, P: VertexPartition | Sequence[Iterable[int]]) -> CutSet:
    """Hyperedges intersecting at least two parts of ``P``."""
    parts = P.parts if isinstance(P, VertexPartition) else P
    masks = validate_partition(G, parts)
    return CutSet.from_edge_mask(G, partition_edges_mask(G, masks))


def component_masks(G: Hypergraph, removed: int = 0) -> list[int]:
    """Connected components (as vertex bitmasks) after deleting edges in ``removed``.

    Union-find over the remaining hyperedges; sorted by minimum vertex.
    """
    parent = list(range(G.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, e in enumerate(G.edges):
        if removed >> i & 1:
            continue
        root = find(e[0])
        for v in e[1:]:
            r = find(v)
            if r != root:
                if r < root:
                    root, r = r, root
                parent[r] = root
    comps: dict[int, int] = {}
    for v in range(G.n):
        r = find(v)
        comps[r] = comps.get(r, 0) | (1 << v)
    # roots are minimum members, so key order is minimum-vertex order
    return [comps[r] for r in sorted(comps)]


def count_components(G: Hypergraph, removed: int = 0) -> int:
    return len(component_masks(G, removed))


def components_after_removal(G: Hypergraph, F: CutSet | Iterable[int]) -> list[frozenset[int]]:
    """Connected components of ``G - F``, sorted by minimum vertex."""
    ids = F.edge_ids if isinstance(F, CutSet) else tuple(F)
    removed = 0
    for i in ids:
        if not isinstance(i, int) or not 0 <= i < G.m:
            raise InvalidArgument(f"unknown edge id {i!r}")
        removed |= 1 << i
    return [from_mask(c) for c in component_masks(G, removed)]


def is_k_cut_set(G: Hypergraph, F: CutSet | Iterable[int], k: int) -> bool:
    return len(components_after_removal(G, F)) >= k


@dataclass(frozen=True)
class InducedSubhypergraph:
    graph: Hypergraph
    # new vertex index -> original vertex
    vertex_map: tuple[int, ...]
    # new edge id -> original edge id
    edge_map: tuple[int, ...]


def induced_subhypergraph(G: Hypergraph, U: Iterable[int]) -> InducedSubhypergraph:
    """G[V minus U]: drop ``U`` and every hyperedge meeting it, relabel densely."""
    mask = proper_mask(G, U)
    keep = [v for v in range(G.n) if not mask >> v & 1]
    relabel = {v: i for i, v in enumerate(keep)}
    edges, costs, emap = [], [], []
    for i, (e, em) in enumerate(zip(G.edges, G.edge_masks)):
        if em & mask:
            continue
        edges.append([relabel[v] for v in e])
        costs.append(G.costs[i])
        emap.append(i)
    return InducedSubhypergraph(Hypergraph(len(keep), edges, costs), tuple(keep), tuple(emap))
