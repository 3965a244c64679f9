from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from switchscan.graphs import (Graph, VertexSet, class_size, complement, even_valency_representative,
                               format_graph, gray_index, gray_subset, isolate_vertex,
                               isolated_vertex_representative, parse_graph, read_graph_file, switch,
                               switch_compose_law_check, switching_class, write_graph_file)
from switchscan.twograph import two_graph_of


def pentagon():
    return Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(3, (1, 0, 0))
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        VertexSet(3, 8)


def test_switch_examples():
    g = pentagon()
    assert switch(g, 0) == g
    assert switch(g, 0b11111) == g
    h = switch(g, VertexSet.of(5, [0]))
    assert h.degree(0) == 2
    assert h.has_edge(0, 2) and h.has_edge(0, 3) and not h.has_edge(0, 1)


@given(graphs(), st.data())
def test_switching_laws(g, data):
    full = (1 << g.n) - 1
    x = data.draw(st.integers(0, full))
    y = data.draw(st.integers(0, full))
    assert switch_compose_law_check(g, x, y)
    assert switch(switch(g, x), y) == switch(g, x ^ y)
    assert switch(g, x) == switch(g, full ^ x)
    assert two_graph_of(switch(g, x)) == two_graph_of(g)
    assert complement(complement(g)) == g


@given(graphs(min_n=2, max_n=8))
def test_switching_class_enumeration(g):
    members = list(switching_class(g))
    assert len(members) == class_size(g.n)
    assert len(set(members)) == len(members)
    for i, h in enumerate(members):
        assert h == switch(g, gray_subset(i))
    mid = class_size(g.n) // 2
    assert list(switching_class(g, 1, mid)) == members[1:mid]


def test_switching_class_sizes_distinct():
    assert len(set(switching_class(pentagon()))) == 16


@given(st.integers(0, 1 << 20))
def test_gray_code(i):
    assert gray_index(gray_subset(i)) == i
    assert (gray_subset(i) ^ gray_subset(i + 1)).bit_count() == 1


@given(graphs(min_n=2))
def test_isolated_representative(g):
    t = two_graph_of(g)
    rep = isolated_vertex_representative(t)
    assert rep.rows[-1] == 0
    assert two_graph_of(rep) == t
    assert isolate_vertex(g, g.n - 1) == rep


@given(graphs())
def test_even_valency_representative(g):
    if g.n % 2 == 0:
        with pytest.raises(ValueError):
            even_valency_representative(g)
        return
    h = even_valency_representative(g)
    assert all(d % 2 == 0 for d in h.degrees())
    evens = [m for m in switching_class(g) if all(d % 2 == 0 for d in m.degrees())]
    assert evens == [h]


def test_pentagon_even_rep_is_pentagon():
    assert even_valency_representative(switch(pentagon(), 0b00101)) == pentagon()


@given(graphs())
def test_graph_format_roundtrip(g):
    assert parse_graph(format_graph(g)) == g


def test_graph_file_roundtrip(tmp_path):
    path = tmp_path / "c5.txt"
    write_graph_file(pentagon(), path)
    assert read_graph_file(path) == pentagon()
    for bad in ("", "3\n1 1\n", "3\n1 4\n", "3\n1 2 3\n"):
        with pytest.raises(ValueError):
            parse_graph(bad)
