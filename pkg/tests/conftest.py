import sys

import pytest
from hypothesis import strategies as st

from hyperkcut.core import Hypergraph


@st.composite
def hypergraphs(draw, min_n=2, max_n=7, max_m=9, max_size=4, max_cost=4):
    n = draw(st.integers(min_n, max_n))
    m = draw(st.integers(0, max_m))
    edges, costs = [], []
    for _ in range(m):
        size = draw(st.integers(2, min(max_size, n)))
        edges.append(draw(st.lists(st.integers(0, n - 1), min_size=size, max_size=size, unique=True)))
        costs.append(draw(st.integers(1, max_cost)))
    return Hypergraph(n, edges, costs)


@pytest.fixture
def c5():
    return Hypergraph(5, [(i, (i + 1) % 5) for i in range(5)])


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
