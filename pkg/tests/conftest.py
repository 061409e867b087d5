import itertools

import pytest
from hypothesis import strategies as st

from signless_main.graph import from_edges

ACCEPTANCE_LINES: list[str] = []


@st.composite
def graphs(draw, min_n=1, max_n=10, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    if connected and n > 1:
        # random spanning tree first, then extra edges
        order = draw(st.permutations(range(n)))
        edges = {tuple(sorted((order[i], order[draw(st.integers(0, i - 1))]))) for i in range(1, n)}
    else:
        edges = set()
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges |= {p for p, keep in zip(pairs, mask) if keep}
    return from_edges(n, sorted(edges))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def diamond():
    return from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
