"""Exact minimum (S,T)-terminal cuts in a hypergraph via max-flow.

Each hyperedge ``e`` is split into two flow nodes ``e_in -> e_out`` joined by
an arc of capacity ``cost(e)``; each member vertex ``v`` gets infinite arcs
``v -> e_in`` and ``e_out -> v`` (infinity is ``1 + total cost``). A finite
(S,T)-cut in this network is exactly a set of split arcs, i.e. a set of
hyperedges separating S from T.

S and T are attached through infinite super-source / super-sink arcs, which
the search realises implicitly: each BFS is seeded with every vertex of S and
stops at the first vertex of T. One max-flow yields both answers: the
source-minimal side is what S still reaches in the residual network, the
source-maximal side is everything that cannot reach T.

The augmenting-path kernel is written against plain indexable buffers so the
same source runs either as pure Python over lists or compiled by numba over
numpy arrays. Set ``HYPERKCUT_NO_JIT=1`` to force the pure-Python path.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable

from .core import Hypergraph, InvalidArgument, from_mask, to_mask

try:  # pragma: no cover - exercised implicitly
    import numba
    import numpy as np
except ImportError:  # pragma: no cover
    numba = None
    np = None

# bitmask results must fit a signed 64-bit integer in compiled mode
JIT_MAX_VERTICES = 62


@dataclass(frozen=True)
class TerminalCutResult:
    value: int
    source_minimal: frozenset[int]
    source_maximal: frozenset[int]


def _flow_kernel(head, cap0, adj_ptr, adj, n, s_mask, t_mask, want_max, cap, seen, parent, queue, is_sink):
    """Edmonds-Karp from vertex set ``s_mask`` to vertex set ``t_mask``.

    Returns ``(value, source_minimal_mask, source_maximal_mask)``; the last is
    0 unless ``want_max``. ``cap``, ``seen``, ``parent``, ``queue`` and
    ``is_sink`` are scratch buffers sized to the network.
    """
    size = len(adj_ptr) - 1
    for a in range(len(cap0)):
        cap[a] = cap0[a]
    for x in range(size):
        is_sink[x] = 0
    for v in range(n):
        if (t_mask >> v) & 1:
            is_sink[v] = 1
    flow = 0
    while True:
        for x in range(size):
            seen[x] = 0
            parent[x] = -1
        qlen = 0
        for v in range(n):
            if (s_mask >> v) & 1:
                seen[v] = 1
                queue[qlen] = v
                qlen += 1
        found = -1
        qi = 0
        while qi < qlen and found < 0:
            x = queue[qi]
            qi += 1
            for idx in range(adj_ptr[x], adj_ptr[x + 1]):
                a = adj[idx]
                if cap[a] > 0:
                    y = head[a]
                    if seen[y] == 0:
                        seen[y] = 1
                        parent[y] = a
                        if is_sink[y] == 1:
                            found = y
                            break
                        queue[qlen] = y
                        qlen += 1
        if found < 0:
            break
        bottleneck = -1
        y = found
        while parent[y] >= 0:
            a = parent[y]
            if bottleneck < 0 or cap[a] < bottleneck:
                bottleneck = cap[a]
            y = head[a ^ 1]
        y = found
        while parent[y] >= 0:
            a = parent[y]
            cap[a] -= bottleneck
            cap[a ^ 1] += bottleneck
            y = head[a ^ 1]
        flow += bottleneck

    lo = 0
    for v in range(n):
        if seen[v] == 1:
            lo |= 1 << v
    hi = 0
    if want_max:
        # reverse search: x reaches T if some arc x -> y has residual capacity
        for x in range(size):
            seen[x] = 0
        top = 0
        for v in range(n):
            if (t_mask >> v) & 1:
                seen[v] = 1
                queue[top] = v
                top += 1
        while top > 0:
            top -= 1
            y = queue[top]
            for idx in range(adj_ptr[y], adj_ptr[y + 1]):
                b = adj[idx]
                x = head[b]
                if seen[x] == 0 and cap[b ^ 1] > 0:
                    seen[x] = 1
                    queue[top] = x
                    top += 1
        for v in range(n):
            if seen[v] == 0:
                hi |= 1 << v
    return flow, lo, hi


_jit_kernel = None


def _compiled_kernel():
    global _jit_kernel
    if _jit_kernel is None:
        _jit_kernel = numba.njit(cache=True, nogil=True)(_flow_kernel)
    return _jit_kernel


def jit_enabled() -> bool:
    return numba is not None and os.environ.get("HYPERKCUT_NO_JIT", "") in ("", "0")


class _Network:
    """Split network of a hypergraph in CSR form, built once per instance."""

    __slots__ = ("n", "size", "head", "cap", "adj_ptr", "adj", "arrays")

    def __init__(self, G: Hypergraph) -> None:
        n = G.n
        inf = 1 + G.total_cost
        size = n + 2 * G.m
        head: list[int] = []
        cap: list[int] = []
        out: list[list[int]] = [[] for _ in range(size)]

        def arc(x: int, y: int, c: int) -> None:
            out[x].append(len(head))
            head.append(y)
            cap.append(c)
            out[y].append(len(head))
            head.append(x)
            cap.append(0)

        for i, (e, c) in enumerate(zip(G.edges, G.costs)):
            e_in, e_out = n + 2 * i, n + 2 * i + 1
            arc(e_in, e_out, c)
            for v in e:
                arc(v, e_in, inf)
                arc(e_out, v, inf)
        adj_ptr = [0]
        adj: list[int] = []
        for arcs in out:
            adj.extend(arcs)
            adj_ptr.append(len(adj))
        self.n = n
        self.size = size
        self.head = head
        self.cap = cap
        self.adj_ptr = adj_ptr
        self.adj = adj
        self.arrays = None
        if jit_enabled() and n <= JIT_MAX_VERTICES:
            self.arrays = tuple(np.asarray(x, dtype=np.int64) for x in (head, cap, adj_ptr, adj))

    def run(self, s_mask: int, t_mask: int, want_max: bool) -> tuple[int, int, int]:
        if self.arrays is not None:
            head, cap0, adj_ptr, adj = self.arrays
            value, lo, hi = _compiled_kernel()(
                head, cap0, adj_ptr, adj, self.n, s_mask, t_mask, want_max,
                np.empty(len(cap0), np.int64),
                np.empty(self.size, np.int8),
                np.empty(self.size, np.int64),
                np.empty(self.size, np.int64),
                np.empty(self.size, np.int8),
            )
            return int(value), int(lo), int(hi)
        size = self.size
        return _flow_kernel(
            self.head, self.cap, self.adj_ptr, self.adj, self.n, s_mask, t_mask, want_max,
            [0] * len(self.cap), bytearray(size), [-1] * size, [0] * size, bytearray(size),
        )


def _network(G: Hypergraph) -> _Network:
    net = G._flow_cache
    if net is None:
        net = _Network(G)
        G._flow_cache = net
    return net


def _terminal_mask(G: Hypergraph, X: Iterable[int], name: str) -> int:
    X = list(X)
    for v in X:
        if not isinstance(v, int) or not 0 <= v < G.n:
            raise InvalidArgument(f"{name} contains vertex {v!r} outside 0..{G.n - 1}")
    mask = to_mask(X)
    if not mask:
        raise InvalidArgument(f"{name} must be non-empty")
    return mask


def _check_terminals(G: Hypergraph, S: Iterable[int], T: Iterable[int]) -> tuple[int, int]:
    s_mask = _terminal_mask(G, S, "S")
    t_mask = _terminal_mask(G, T, "T")
    if s_mask & t_mask:
        raise InvalidArgument("S and T must be disjoint")
    return s_mask, t_mask


def terminal_cut_masks(G: Hypergraph, s_mask: int, t_mask: int) -> tuple[int, int, int]:
    """(value, source-minimal mask, source-maximal mask); inputs unchecked."""
    return _network(G).run(s_mask, t_mask, True)


def source_minimal_mask(G: Hypergraph, s_mask: int, t_mask: int) -> tuple[int, int]:
    """(value, source-minimal mask); inputs unchecked."""
    value, lo, _ = _network(G).run(s_mask, t_mask, False)
    return value, lo


def min_terminal_cut(G: Hypergraph, S: Iterable[int], T: Iterable[int]) -> TerminalCutResult:
    """Minimum (S,T)-terminal cut with its source-minimal and source-maximal sides."""
    s_mask, t_mask = _check_terminals(G, S, T)
    value, lo, hi = terminal_cut_masks(G, s_mask, t_mask)
    return TerminalCutResult(value, from_mask(lo), from_mask(hi))


def min_terminal_cut_value(G: Hypergraph, S: Iterable[int], T: Iterable[int]) -> int:
    s_mask, t_mask = _check_terminals(G, S, T)
    return _network(G).run(s_mask, t_mask, False)[0]
