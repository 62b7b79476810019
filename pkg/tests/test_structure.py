import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import hypergraphs
from hyperkcut.core import Hypergraph, InvalidArgument, VertexPartition
from hyperkcut.instances import mixed_corpus, path, spanning
from hyperkcut.structure import (
    UncrossedPartition,
    aggregate,
    check_containment_lemma,
    check_uncrossing_lemma,
    check_uncrossing_theorem,
    check_unique_terminal_witness,
    find_witness_general,
    find_witness_k2,
    lemma_sink_sides,
    sigma,
    uncross,
)


def fs(*xs):
    return frozenset(xs)


def classify(G, P):
    """Per-hyperedge sigma terms, written against plain sets."""
    parts = [set(y) for y in P.Y] + [set(P.W), set(P.Z)]
    totals = [0, 0, 0, 0]
    for e, c in zip(G.edges, G.costs):
        e = set(e)
        if sum(1 for part in parts if part and e & part) >= 2:
            totals[0] += c
        hit_z = bool(e & P.Z)
        others = sum(1 for y in P.Y if e & y) + (1 if e & P.W else 0)
        if hit_z and e <= (P.W | P.Z) and e & P.W:
            totals[1] += c
        if hit_z and others >= 2:
            totals[2] += c
        if not hit_z and sum(1 for y in P.Y if e & y) >= 2:
            totals[3] += c
    return tuple(totals)


def random_partition(rng, n, p):
    labels = [rng.randrange(p + 2) for _ in range(n)]
    blocks = [frozenset(v for v in range(n) if labels[v] == b) for b in range(p + 2)]
    return UncrossedPartition(tuple(blocks[:p]), blocks[p], blocks[p + 1])


def test_uncross_cycle_example(c5):
    P = uncross(c5, {0, 1, 2}, [{3, 4, 1}, {3, 4, 2}])
    assert P.W == {3, 4} and P.Z == {0}
    assert P.Y == (fs(1), fs(2))


def test_uncross_identical_sides(c5):
    P = uncross(c5, {0, 1, 2}, [{3, 4}, {3, 4}])
    assert P.W == {3, 4} and P.Z == {0, 1, 2}
    assert P.Y == (fs(), fs())


def test_uncross_rejects_bad_sides(c5):
    with pytest.raises(InvalidArgument):
        uncross(c5, {0, 1, 2}, [{3, 4}])
    with pytest.raises(InvalidArgument):
        uncross(c5, {0, 1, 2}, [{3, 4}, {3}])


@settings(max_examples=60, deadline=None)
@given(G=hypergraphs(min_n=4), data=st.data())
def test_uncross_parts_cover_and_are_disjoint(G, data):
    U = data.draw(st.sets(st.integers(0, G.n - 1), min_size=1, max_size=G.n - 1))
    rest = set(range(G.n)) - U
    p = data.draw(st.integers(2, 4))
    sides = [rest | data.draw(st.sets(st.sampled_from(sorted(U)))) for _ in range(p)]
    P = uncross(G, U, sides)
    blocks = list(P.Y) + [P.W, P.Z]
    assert sum(len(b) for b in blocks) == G.n
    assert frozenset().union(*blocks) == set(range(G.n))


def test_sigma_single_wz_edge():
    G = Hypergraph(3, [(1, 2)], [4])
    P = UncrossedPartition((fs(0), fs()), fs(1), fs(2))
    br = sigma(G, P)
    assert (br.cost_partition, br.cost_wz, br.alpha, br.beta, br.sigma) == (4, 4, 0, 0, 8)


def test_sigma_zero_when_edges_stay_inside():
    G = Hypergraph(5, [(0, 1), (2, 3)], [2, 3])
    P = UncrossedPartition((fs(0, 1), fs(4)), fs(2, 3), fs())
    assert sigma(G, P).sigma == 0


def test_sigma_matches_independent_classifier():
    rng = random.Random(17)
    for G in mixed_corpus(60, 5):
        for _ in range(10):
            P = random_partition(rng, G.n, rng.randint(2, 4))
            br = sigma(G, P)
            assert (br.cost_partition, br.cost_wz, br.alpha, br.beta) == classify(G, P)


def test_uncrossing_lemma_equality_for_two_sources():
    hits = 0
    for G in mixed_corpus(40, 9):
        for U in range(7, G.full_mask):
            members = [v for v in range(G.n) if U >> v & 1]
            if len(members) < 3:
                continue
            R, S = [members[0]], members[1:3]
            sides = lemma_sink_sides(G, members, R, S)
            v = check_uncrossing_lemma(G, members, R, S, sides)
            if v.hypothesis_holds:
                hits += 1
                assert v.inequality_holds and v.equality_when_p2
    assert hits > 50


def test_uncrossing_lemma_guard_path(c5):
    # u_1 = 1 lies in both sides, so the hypothesis fails
    v = check_uncrossing_lemma(c5, {0, 1, 2}, {0}, [1, 2], [{1, 3, 4}, {1, 2, 3, 4}])
    assert not v.hypothesis_holds
    assert v.inequality_holds is None and v.ok


def test_uncrossing_theorem_on_corpus():
    checked = 0
    for G in mixed_corpus(30, 3, min_n=6):
        members = list(range(G.n - 1))
        R, S = [0], members[1:5]
        sides = lemma_sink_sides(G, members, R, S)
        for k in (2, 3):
            v = check_uncrossing_theorem(G, members, R, S, sides, k)
            if v.hypothesis_holds:
                checked += 1
                assert v.ok, v
    assert checked > 0


def test_aggregate_holds_on_random_partitions():
    rng = random.Random(23)
    for G in mixed_corpus(40, 11):
        for _ in range(8):
            P = random_partition(rng, G.n, rng.randint(2, 4))
            for k in (2, 3):
                if P.p >= 2 * k - 2:
                    assert aggregate(G, P, k).holds


def test_aggregate_needs_enough_parts(c5):
    P = UncrossedPartition((fs(1), fs(2)), fs(3, 4), fs(0))
    with pytest.raises(InvalidArgument):
        aggregate(c5, P, 3)


def test_aggregate_all_empty_parts(c5):
    P = UncrossedPartition((fs(), fs()), fs(3, 4), fs(0, 1, 2))
    agg = aggregate(c5, P, 2)
    assert agg.cost == 0 and agg.holds


def test_witness_k2_spanning():
    G = spanning(4)
    assert find_witness_k2(G, {0}, {1}) == (0,)


def test_witness_k2_small_side_is_itself(c5):
    assert find_witness_k2(c5, {1, 2}, {4}) in [(1,), (2,), (1, 2)]
    with pytest.raises(InvalidArgument):
        find_witness_k2(c5, {1, 2}, {2})


def test_witness_general_spanning():
    G = spanning(5)
    P = VertexPartition.of(G, [{0}, {1, 2}, {3, 4}])
    assert find_witness_general(G, P, {1, 3}) == (0,)
    with pytest.raises(InvalidArgument):
        find_witness_general(G, P, {1})


def test_unique_witness_guard():
    with pytest.raises(InvalidArgument):
        check_unique_terminal_witness(path(3), {0}, 2)


def test_unique_witness_found_below_opt3(c5):
    v = check_unique_terminal_witness(c5, {0, 1}, 3)
    assert v.found and v.S[0] == 0 and v.T[0] == 2


def test_containment_examples():
    G = spanning(3)
    P = VertexPartition.of(G, [{0, 1}, {2}])
    v = check_containment_lemma(G, P, {0}, {2})
    assert v.source_side == {0} and v.ok
    v = check_containment_lemma(G, P, {0, 1}, {2})
    assert v.source_side == {0, 1} and v.ok
    with pytest.raises(InvalidArgument):
        check_containment_lemma(G, P, {2}, {2})
