import pickle

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import hypergraphs
from hyperkcut.core import (
    CutSet,
    Hypergraph,
    InvalidArgument,
    VertexPartition,
    components_after_removal,
    crossing_set,
    cut_value,
    induced_subhypergraph,
    is_k_cut_set,
)


def test_construction_normalises_edges():
    G = Hypergraph(4, [[3, 1], (0, 2, 1)], [2, 5])
    assert G.edges == ((1, 3), (0, 1, 2))
    assert G.costs == (2, 5)
    assert G.p == 5
    assert G.total_cost == 7


@pytest.mark.parametrize(
    "edges,costs",
    [
        ([(0,)], None),
        ([(0, 0)], None),
        ([(0, 4)], None),
        ([(0, 1)], [0]),
        ([(0, 1)], [True]),
        ([(0, 1)], [1, 2]),
    ],
)
def test_construction_rejects_bad_input(edges, costs):
    with pytest.raises(InvalidArgument):
        Hypergraph(4, edges, costs)


def test_cut_value_counts_costs():
    G = Hypergraph(4, [(0, 1, 2, 3)], [3])
    assert cut_value(G, {0}) == 3
    assert cut_value(G, {0, 1, 2}) == 3
    with pytest.raises(InvalidArgument):
        cut_value(G, set())
    with pytest.raises(InvalidArgument):
        cut_value(G, {0, 1, 2, 3})


def test_crossing_set_of_cycle_partition(c5):
    P = VertexPartition.of(c5, [{0, 1}, {2}, {3, 4}])
    assert crossing_set(c5, P) == CutSet((1, 2, 4), 3)


def test_partition_validation():
    G = Hypergraph(3, [(0, 1)])
    with pytest.raises(InvalidArgument):
        VertexPartition.of(G, [{0}, {1}])
    with pytest.raises(InvalidArgument):
        VertexPartition.of(G, [{0, 1}, {1, 2}])
    with pytest.raises(InvalidArgument):
        VertexPartition.of(G, [{0, 1, 2}, set()])


def test_components_after_removal(c5):
    comps = components_after_removal(c5, [0, 2])
    assert comps == [frozenset({0, 4, 3}), frozenset({1, 2})]
    assert is_k_cut_set(c5, [0, 2], 2)
    assert not is_k_cut_set(c5, [0], 2)
    with pytest.raises(InvalidArgument):
        components_after_removal(c5, [7])


def test_isolated_vertices_are_components():
    G = Hypergraph(4, [(0, 1)])
    assert len(components_after_removal(G, [])) == 3


def test_induced_subhypergraph_drops_removed_vertices():
    G = Hypergraph(5, [(0, 1), (1, 2, 3), (3, 4), (0, 2)], [1, 2, 3, 4])
    sub = induced_subhypergraph(G, {0, 1, 2})
    assert sub.vertex_map == (3, 4)
    assert sub.edge_map == (2,)
    assert sub.graph.edges == ((0, 1),)
    assert sub.graph.costs == (3,)


def test_pickle_round_trip(c5):
    assert pickle.loads(pickle.dumps(c5)) == c5


@settings(max_examples=60, deadline=None)
@given(G=hypergraphs(min_n=3), data=st.data())
def test_cut_is_symmetric_and_submodular(G, data):
    full = set(range(G.n))
    A = data.draw(st.sets(st.integers(0, G.n - 1), min_size=1, max_size=G.n - 1))
    B = data.draw(st.sets(st.integers(0, G.n - 1), min_size=1, max_size=G.n - 1))
    assert cut_value(G, A) == cut_value(G, full - A)

    def f(X):
        return 0 if not X or X == full else cut_value(G, X)

    assert f(A) + f(B) >= f(A & B) + f(A | B)
