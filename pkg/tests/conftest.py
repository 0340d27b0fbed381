from itertools import combinations

import pytest
from hypothesis import strategies as st

from sbetree.graph import Graph, cycle_graph


@st.composite
def graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def graphs_with_subset(draw, min_n=1, max_n=10):
    g = draw(graphs(min_n, max_n))
    s = draw(st.integers(0, (1 << g.n) - 1))
    return g, s


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


@pytest.fixture
def k33():
    return Graph.from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])


# one line per acceptance criterion, filled by test_acceptance
REPORT: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in REPORT:
            terminalreporter.write_line(line)
