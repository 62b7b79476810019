"""Named and random instance generators."""

from __future__ import annotations

import random

from .core import Hypergraph, InvalidArgument


def cycle(n: int) -> Hypergraph:
    """Unit-cost cycle with edges ``{i, i+1 mod n}``."""
    if n < 3:
        raise InvalidArgument(f"cycle needs n >= 3, got {n}")
    return Hypergraph(n, [(i, (i + 1) % n) for i in range(n)])


def spanning(n: int) -> Hypergraph:
    """A single unit-cost hyperedge containing every vertex."""
    if n < 2:
        raise InvalidArgument(f"spanning hyperedge needs n >= 2, got {n}")
    return Hypergraph(n, [tuple(range(n))])


def path(n: int) -> Hypergraph:
    if n < 2:
        raise InvalidArgument(f"path needs n >= 2, got {n}")
    return Hypergraph(n, [(i, i + 1) for i in range(n - 1)])


def random_hypergraph(n: int, m: int, max_size: int, max_cost: int, seed: int) -> Hypergraph:
    """``m`` hyperedges with sizes uniform in ``2..min(max_size, n)``, member
    vertices drawn without replacement, costs uniform in ``1..max_cost``."""
    if n < 2:
        raise InvalidArgument(f"random instance needs n >= 2, got {n}")
    if m < 0:
        raise InvalidArgument(f"m must be >= 0, got {m}")
    if max_size < 2:
        raise InvalidArgument(f"max_size must be >= 2, got {max_size}")
    if max_cost < 1:
        raise InvalidArgument(f"max_cost must be >= 1, got {max_cost}")
    rng = random.Random(seed)
    top = min(max_size, n)
    edges, costs = [], []
    for _ in range(m):
        size = rng.randint(2, top)
        edges.append(sorted(rng.sample(range(n), size)))
        costs.append(rng.randint(1, max_cost))
    return Hypergraph(n, edges, costs)


def corpus(n: int, m: int, count: int, seed: int, max_size: int = 5, max_cost: int = 5) -> list[Hypergraph]:
    """``count`` seeded random instances that all share ``n`` and ``m``."""
    rng = random.Random(seed)
    return [random_hypergraph(n, m, max_size, max_cost, rng.getrandbits(32)) for _ in range(count)]


def mixed_corpus(
    count: int,
    seed: int,
    max_n: int = 8,
    max_m: int = 12,
    max_size: int = 5,
    max_cost: int = 5,
    min_n: int = 3,
) -> list[Hypergraph]:
    """Seeded instances with ``n`` uniform in ``min_n..max_n`` and ``m`` in ``1..max_m``."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        m = rng.randint(1, max_m)
        out.append(random_hypergraph(n, m, max_size, max_cost, rng.getrandbits(32)))
    return out
