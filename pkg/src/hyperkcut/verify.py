"""Mine hypotheses from small instances and run the structural checks on them.

Each check reports how many hypothesis-satisfying cases were mined, how many
passed, and the first few failures (with the instance in file format so a
failure can be replayed from the command line).
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import oracle
from .core import (
    Hypergraph,
    VertexPartition,
    cut_edges_mask,
    from_mask,
    mask_members,
    partition_edges_mask,
    to_mask,
)
from .io import emit_instance
from .structure import (
    UncrossedPartition,
    aggregate,
    check_containment_lemma,
    check_uncrossing_lemma,
    check_uncrossing_theorem,
    check_unique_terminal_witness,
    find_witness_general,
    find_witness_k2,
    lemma_sink_sides,
    uncross,
)

SUITES = ("k2", "general", "uncross", "aggregate")
MAX_FAILURES_KEPT = 10


@dataclass
class Limits:
    """Per-instance caps on mined cases; ``None`` means exhaustive."""

    targets_per_cut: int | None = None
    sources_per_target: int | None = 8
    uncross_cases: int | None = 120
    random_partitions: int = 20


@dataclass
class CheckTally:
    mined: int = 0
    passed: int = 0
    failures: list[dict] = field(default_factory=list)
    notes: dict[str, int] = field(default_factory=dict)

    def record(self, ok: bool, instance: int, G: Hypergraph, case: dict) -> None:
        self.mined += 1
        if ok:
            self.passed += 1
        elif len(self.failures) < MAX_FAILURES_KEPT:
            self.failures.append({"instance": instance, "hypergraph": emit_instance(G), "case": case})

    def to_dict(self) -> dict:
        out = {"mined": self.mined, "passed": self.passed, "ok": self.passed == self.mined}
        out.update(self.notes)
        out["failures"] = self.failures
        return out


def _vs(mask: int) -> list[int]:
    return mask_members(mask)


def _nonempty_subsets(mask: int) -> list[int]:
    members = _vs(mask)
    out = []
    for size in range(1, len(members) + 1):
        for combo in itertools.combinations(members, size):
            out.append(to_mask(combo))
    return out


def _cap(items: list, limit: int | None) -> list:
    """Evenly spaced deterministic sample of at most ``limit`` items."""
    if limit is None or len(items) <= limit:
        return items
    step = len(items) / limit
    return [items[int(i * step)] for i in range(limit)]


def _targets(parts: list[int], limit: int | None) -> list[int]:
    """T sets hitting every given part: one vertex per part, plus their union."""
    union = 0
    for p in parts:
        union |= p
    picks = [to_mask(combo) for combo in itertools.product(*(_vs(p) for p in parts))]
    picks = _cap(picks, limit)
    if union not in picks:
        picks.append(union)
    return picks


def _min_partitions_with_carrier(G: Hypergraph, k: int) -> list[list[int]]:
    """Minimum k-partitions, rotated so the first part carries the whole crossing set."""
    _, partitions = oracle.minimum_k_partitions(G, k)
    out = []
    for parts in partitions:
        crossing = partition_edges_mask(G, parts)
        for i, part in enumerate(parts):
            if cut_edges_mask(G, part) == crossing:
                out.append([part] + [p for j, p in enumerate(parts) if j != i])
    return out


# ---------------------------------------------------------------- suites


def check_k2(G: Hypergraph, idx: int, limits: Limits, tallies: dict[str, CheckTally]) -> None:
    tally = tallies.setdefault("witness_k2", CheckTally())
    values = oracle.all_cut_values(G)
    opt = min(values.values())
    full = G.full_mask
    for v1, value in values.items():
        if value != opt:
            continue
        for t_mask in _cap(_nonempty_subsets(full ^ v1), limits.targets_per_cut):
            S = find_witness_k2(G, _vs(v1), _vs(t_mask))
            tally.record(S is not None, idx, G, {"V1": _vs(v1), "T": _vs(t_mask)})


def check_general(G: Hypergraph, idx: int, limits: Limits, tallies: dict[str, CheckTally]) -> None:
    witness = tallies.setdefault("witness_general_k3", CheckTally())
    containment = tallies.setdefault("containment", CheckTally())
    unique = tallies.setdefault("unique_witness", CheckTally())
    for k in (2, 3):
        if k > G.n:
            continue
        for parts in _min_partitions_with_carrier(G, k):
            P = VertexPartition(tuple(from_mask(p) for p in parts))
            for t_mask in _targets(parts[1:], limits.targets_per_cut):
                T = _vs(t_mask)
                if k == 3:
                    S = find_witness_general(G, P, T)
                    witness.record(S is not None, idx, G, {"P": [_vs(p) for p in parts], "T": T})
                sources = [m for m in _nonempty_subsets(parts[0]) if m.bit_count() <= 2]
                sources = _cap(sources, limits.sources_per_target)
                if parts[0] not in sources:
                    sources.append(parts[0])
                for s_mask in sources:
                    verdict = check_containment_lemma(G, P, _vs(s_mask), T)
                    containment.record(
                        verdict.ok, idx, G,
                        {"k": k, "P": [_vs(p) for p in parts], "S": _vs(s_mask), "T": T},
                    )
        opt = oracle.brute_force_min_k_cutsets(G, k).opt_value
        for U, value in oracle.all_cut_values(G).items():
            if value < opt:
                verdict = check_unique_terminal_witness(G, _vs(U), k, opt)
                unique.record(verdict.found, idx, G, {"k": k, "U": _vs(U), "opt": opt})


def _uncross_cases(G: Hypergraph, limits: Limits) -> list[tuple[int, int, tuple[int, ...]]]:
    cases = []
    for U in range(1, G.full_mask):
        members = _vs(U)
        if len(members) < 3:
            continue
        r = members[0]
        for p in range(2, min(4, len(members) - 1) + 1):
            for S in itertools.combinations(members[1:], p):
                cases.append((U, 1 << r, S))
    return _cap(cases, limits.uncross_cases)


def mine_uncrossings(G: Hypergraph, limits: Limits) -> list[tuple[int, int, tuple[int, ...], list[frozenset[int]]]]:
    """(U, R, S, sink sides) for every sampled case, hypothesis or not."""
    out = []
    for U, R, S in _uncross_cases(G, limits):
        out.append((U, R, S, lemma_sink_sides(G, _vs(U), _vs(R), S)))
    return out


def check_uncross(G: Hypergraph, idx: int, limits: Limits, tallies: dict[str, CheckTally], mined=None) -> None:
    lemma = tallies.setdefault("uncrossing_lemma", CheckTally(notes={"p2_equalities": 0, "empty_y_parts": 0}))
    theorem = tallies.setdefault("uncrossing_theorem", CheckTally(notes={"strict_cases": 0}))
    for U, R, S, sides in mined if mined is not None else mine_uncrossings(G, limits):
        verdict = check_uncrossing_lemma(G, _vs(U), _vs(R), S, sides)
        if not verdict.hypothesis_holds:
            continue
        case = {"U": _vs(U), "R": _vs(R), "S": list(S), "A": [sorted(a) for a in sides]}
        lemma.record(verdict.ok, idx, G, case)
        if verdict.equality_when_p2:
            lemma.notes["p2_equalities"] += 1
        lemma.notes["empty_y_parts"] += sum(1 for y in uncross(G, _vs(U), sides).Y if not y)
        for k in (2, 3):
            if len(S) < 2 * k - 2:
                continue
            tv = check_uncrossing_theorem(G, _vs(U), _vs(R), S, sides, k)
            theorem.record(tv.ok, idx, G, dict(case, k=k))
            if tv.strict_required:
                theorem.notes["strict_cases"] += 1


def check_aggregate(G: Hypergraph, idx: int, limits: Limits, tallies: dict[str, CheckTally], mined=None) -> None:
    tally = tallies.setdefault("aggregation", CheckTally(notes={"random_partitions": 0}))
    partitions: list[UncrossedPartition] = []
    for U, R, S, sides in mined if mined is not None else mine_uncrossings(G, limits):
        if check_uncrossing_lemma(G, _vs(U), _vs(R), S, sides).hypothesis_holds:
            partitions.append(uncross(G, _vs(U), sides))
    rng = random.Random(idx)
    for _ in range(limits.random_partitions):
        p = rng.randint(2, 4)
        labels = [rng.randrange(p + 2) for _ in range(G.n)]
        blocks = [0] * (p + 2)
        for v, b in enumerate(labels):
            blocks[b] |= 1 << v
        partitions.append(
            UncrossedPartition(tuple(from_mask(b) for b in blocks[:p]), from_mask(blocks[p]), from_mask(blocks[p + 1]))
        )
        tally.notes["random_partitions"] += 1
    for P in partitions:
        for k in (2, 3):
            if P.p < 2 * k - 2:
                continue
            agg = aggregate(G, P, k)
            tally.record(
                agg.holds, idx, G,
                {"k": k, "Y": [sorted(y) for y in P.Y], "W": sorted(P.W), "Z": sorted(P.Z)},
            )


def _run_one(args) -> dict[str, dict[str, CheckTally]]:
    idx, G, suites, limits = args
    results: dict[str, dict[str, CheckTally]] = {s: {} for s in suites}
    if "k2" in suites:
        check_k2(G, idx, limits, results["k2"])
    if "general" in suites:
        check_general(G, idx, limits, results["general"])
    if "uncross" in suites or "aggregate" in suites:
        mined = mine_uncrossings(G, limits)
        if "uncross" in suites:
            check_uncross(G, idx, limits, results["uncross"], mined)
        if "aggregate" in suites:
            check_aggregate(G, idx, limits, results["aggregate"], mined)
    return results


def _merge(into: CheckTally, part: CheckTally) -> None:
    into.mined += part.mined
    into.passed += part.passed
    room = MAX_FAILURES_KEPT - len(into.failures)
    into.failures.extend(part.failures[:max(room, 0)])
    for key, value in part.notes.items():
        into.notes[key] = into.notes.get(key, 0) + value


def run_suites(graphs: list[Hypergraph], suites=SUITES, limits: Limits | None = None, threads: int = 1) -> dict:
    """Run the selected suites over ``graphs``; returns a JSON-ready summary.

    With ``threads > 1`` instances are checked in worker processes; the
    summary is merged in instance order, so it does not depend on ``threads``.
    """
    limits = limits or Limits()
    unknown = set(suites) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suite(s): {sorted(unknown)}")
    suites = tuple(s for s in SUITES if s in set(suites))
    jobs = [(idx, G, suites, limits) for idx, G in enumerate(graphs)]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_run_one, jobs, chunksize=max(1, len(jobs) // (4 * threads))))
    else:
        parts = [_run_one(job) for job in jobs]
    results: dict[str, dict[str, CheckTally]] = {s: {} for s in suites}
    for part in parts:
        for s in suites:
            for name, tally in part[s].items():
                _merge(results[s].setdefault(name, CheckTally()), tally)
    summary = {
        "schema_version": 1,
        "instances": len(graphs),
        "suites": {s: {name: t.to_dict() for name, t in results[s].items()} for s in suites},
    }
    summary["ok"] = all(c["ok"] for s in summary["suites"].values() for c in s.values())
    return summary
