"""Acceptance criteria; each test prints one PASS/FAIL line.

The lines are collected into the terminal summary as well, so they show up
in plain ``pytest -v`` output without ``-s``.
"""

import itertools
import math
import random
import subprocess
import sys
import time

import pytest

from hyperkcut.core import cut_mask_value
from hyperkcut.enumerate import enum_min_cutsets_k2, enum_min_k_cutsets
from hyperkcut.flow import min_terminal_cut
from hyperkcut.instances import cycle, mixed_corpus, random_hypergraph, spanning
from hyperkcut.io import emit_instance
from hyperkcut.oracle import brute_force_all_min_terminal_cuts, brute_force_min_k_cutsets
from hyperkcut.verify import Limits, run_suites

SEED = 20261019
RESULTS: list[str] = []


def report(criterion: int, ok: bool, detail: str) -> None:
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'} ({detail})"
    RESULTS.append(line)
    print(line)


@pytest.fixture(scope="module")
def corpus():
    # n in 3..8, m in 1..12, hyperedge size <= 5, costs 1..5
    return mixed_corpus(200, SEED, max_n=8, max_m=12, max_size=5, max_cost=5)


@pytest.fixture(scope="module")
def oracle_families(corpus):
    return {k: [brute_force_min_k_cutsets(G, k) for G in corpus] for k in (2, 3)}


def test_criterion_1_oracle_equivalence(corpus, oracle_families):
    start = time.perf_counter()
    mismatches = 0
    for k in (2, 3):
        for G, want in zip(corpus, oracle_families[k]):
            got = enum_min_k_cutsets(G, k)
            if set(got.family) != set(want.family) or got.opt_value != want.opt_value:
                mismatches += 1
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and elapsed < 300
    report(1, ok, f"{len(corpus)} instances x k in (2,3), {mismatches} mismatches, {elapsed:.1f}s")
    assert ok


def test_criterion_2_fast_path(corpus, oracle_families):
    start = time.perf_counter()
    mismatches = over_budget = 0
    for G, want in zip(corpus, oracle_families[2]):
        fast = enum_min_cutsets_k2(G)
        general = enum_min_k_cutsets(G, 2)
        if not set(fast.family) == set(general.family) == set(want.family):
            mismatches += 1
        if fast.stats.terminal_cut_calls > math.comb(G.n, 2):
            over_budget += 1
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and over_budget == 0 and elapsed < 60
    report(2, ok, f"{mismatches} mismatches, {over_budget} over n(n-1)/2 calls, {elapsed:.1f}s")
    assert ok


def test_criterion_3_cycles():
    start = time.perf_counter()
    bad = []
    for n in range(5, 13):
        for r in (enum_min_k_cutsets(cycle(n), 2), enum_min_cutsets_k2(cycle(n))):
            if (r.opt_value, len(r.family)) != (2, math.comb(n, 2)):
                bad.append(f"k=2 n={n}")
    for n in range(5, 9):
        r = enum_min_k_cutsets(cycle(n), 3)
        want = brute_force_min_k_cutsets(cycle(n), 3)
        if (r.opt_value, len(r.family)) != (3, math.comb(n, 3)) or r.family != want.family:
            bad.append(f"k=3 n={n}")
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    report(3, ok, f"failures {bad or 'none'}, {elapsed:.1f}s")
    assert ok


def test_criterion_4_spanning_hyperedge():
    bad = []
    for n in range(3, 11):
        for k in range(2, n + 1):
            r = enum_min_k_cutsets(spanning(n), k)
            if r.opt_value != 1 or r.cut_set_ids() != [(0,)]:
                bad.append((n, k))
    report(4, not bad, f"{sum(n - 1 for n in range(3, 11))} (n,k) cases, failures {bad or 'none'}")
    assert not bad


def test_criterion_5_counting_bound(corpus, oracle_families):
    worst = max(len(r.family) / math.comb(G.n, 2) for G, r in zip(corpus, oracle_families[2]))
    over = sum(len(enum_min_k_cutsets(G, 2).family) > math.comb(G.n, 2) for G in corpus)
    ok = over == 0
    report(5, ok, f"{over} instances above n(n-1)/2, largest ratio {worst:.2f}")
    assert ok


def test_criterion_6_terminal_cuts(corpus):
    start = time.perf_counter()
    pairs = bad = 0
    for G in corpus:
        small = [c for size in (1, 2) for c in itertools.combinations(range(G.n), size)]
        for S in small:
            for T in small:
                if set(S) & set(T):
                    continue
                pairs += 1
                got = min_terminal_cut(G, S, T)
                sides = brute_force_all_min_terminal_cuts(G, S, T)
                value = cut_mask_value(G, sum(1 << v for v in sides[0]))
                if (
                    got.value != value
                    or got.source_minimal != frozenset.intersection(*sides)
                    or got.source_maximal != frozenset.union(*sides)
                ):
                    bad += 1
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 120
    report(6, ok, f"{pairs} (S,T) pairs, {bad} mismatches, {elapsed:.1f}s")
    assert ok


def test_criterion_7_structural_suites(corpus):
    start = time.perf_counter()
    summary = run_suites(corpus, limits=Limits(targets_per_cut=None, sources_per_target=None, uncross_cases=None))
    elapsed = time.perf_counter() - start
    parts = []
    for checks in summary["suites"].values():
        for name, tally in checks.items():
            parts.append(f"{name} {tally['passed']}/{tally['mined']}")
    mined_everywhere = all(t["mined"] > 0 for c in summary["suites"].values() for t in c.values())
    ok = summary["ok"] and mined_everywhere and elapsed < 600
    report(7, ok, ", ".join(parts) + f", {elapsed:.1f}s")
    assert ok


def test_criterion_8_submodularity(corpus):
    rng = random.Random(SEED)
    violations = checks = 0
    for G in corpus:
        full = G.full_mask

        def f(mask):
            return 0 if mask in (0, full) else cut_mask_value(G, mask)

        for _ in range(1000):
            a, b = rng.randrange(full + 1), rng.randrange(full + 1)
            checks += 1
            if f(a) + f(b) < f(a & b) + f(a | b) or f(a) != f(full ^ a):
                violations += 1
    report(8, violations == 0, f"{checks} checks, {violations} violations")
    assert violations == 0


def _cli(args, stdin):
    return subprocess.run(
        [sys.executable, "-m", "hyperkcut", *args], input=stdin, capture_output=True, check=True
    ).stdout


def test_criterion_9_engineering_target():
    text = emit_instance(random_hypergraph(20, 40, 5, 5, seed=SEED)).encode()
    start = time.perf_counter()
    single = _cli(["enum", "-k", "2", "--no-timing", "-"], text)
    elapsed = time.perf_counter() - start
    threaded = _cli(["enum", "-k", "2", "--threads", "8", "--no-timing", "-"], text)
    identical = single == threaded
    ok = elapsed < 60 and identical
    report(9, ok, f"n=20 m=40 single-threaded {elapsed:.1f}s, 1 vs 8 threads byte-identical: {identical}")
    assert ok
