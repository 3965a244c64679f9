from __future__ import annotations

from hypothesis import strategies as st

from switchscan.graphs import Graph
from switchscan.twograph import TripleSet


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, c in zip(pairs, chosen) if c])


@st.composite
def triple_sets(draw, min_n=3, max_n=7):
    n = draw(st.integers(min_n, max_n))
    from math import comb
    return TripleSet(n, draw(st.integers(0, (1 << comb(n, 3)) - 1)))


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS, summary_lines
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in summary_lines():
        terminalreporter.write_line(line)
