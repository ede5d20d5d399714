import io
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kgcore import (
    DomainError,
    Hypergraph,
    ParseError,
    dumps_hypergraph,
    induced,
    load_hypergraph,
    loads_hypergraph,
    stats,
)
from kgcore.oracle import TOY_EDGES, toy_fixture


def test_load_counts():
    G = loads_hypergraph("a b c\na c d\n")
    assert (G.num_nodes, G.num_edges) == (4, 2)
    assert G.degree(G.node_id("a")) == 2


def test_duplicate_labels_collapse():
    G = loads_hypergraph("x x y\n")
    assert G.num_edges == 1
    assert len(G.edges[0]) == 2


def test_separators_comments_and_blank_lines():
    G = load_hypergraph(io.BytesIO(b"# header\n\na,b\tc\n\n  d ,e  \n"))
    assert G.num_edges == 2
    assert [G.label_set(e) for e in G.edges] == [["a", "b", "c"], ["d", "e"]]


def test_singletons_and_duplicate_edges_kept():
    G = loads_hypergraph("a\na b\na b\n")
    assert G.num_edges == 3
    assert G.degree(G.node_id("a")) == 3


def test_toy_file(toy):
    assert (toy.num_nodes, toy.num_edges) == (11, 5)
    assert [toy.label_set(e) for e in toy.edges] == [sorted(e) for e in TOY_EDGES]


def test_toy_file_matches_builtin_fixture(toy):
    assert dumps_hypergraph(toy) == dumps_hypergraph(toy_fixture())


@pytest.mark.parametrize("payload, line", [
    (b"a b\n,\n", 2),
    (b"a b\nc \xff d\n", 2),
    (b"a\n\n\n , ,\n", 4),
])
def test_parse_errors_carry_line_number(payload, line):
    with pytest.raises(ParseError) as info:
        load_hypergraph(payload)
    assert info.value.line == line


def test_induced_restricts_edges(toy, ids):
    sub = induced(toy, ids("x6", "x7", "x8", "x9", "x10"))
    # hand-restricted: e3 whole, e4 loses x5, e5 loses x11; e1, e2 vanish
    got = sorted(tuple(sub.label_set(e)) for e in sub.edges)
    assert got == sorted([
        tuple(sorted(["x6", "x7", "x8", "x9", "x10"])),
        tuple(sorted(["x6", "x7", "x8"])),
        ("x8", "x9"),
    ])
    assert sub.origin == (2, 3, 4)


def test_induced_edge_cases(toy):
    assert induced(toy, set()).num_edges == 0
    whole = induced(toy, range(11))
    assert whole.num_edges == 5
    with pytest.raises(DomainError):
        induced(toy, {11})


def test_stats_on_core(toy, ids):
    s = stats(toy, ids("x1", "x3", "x4", "x6", "x7", "x8"))
    assert (s.node_count, s.edge_count) == (6, 4)
    assert s.vertex_density == Fraction(4, 6)


def test_stats_whole_toy(toy):
    s = stats(toy, range(11))
    assert s.edge_count == 5
    # member counts 4 + 4 + 5 + 4 + 3
    assert s.avg_degree == Fraction(20, 11)
    # 6 + 6 + 10 + 6 + 3 member pairs; (x1,x3),(x1,x4),(x3,x4),(x6,x7),(x6,x8),(x7,x8),(x8,x9) repeat
    assert s.avg_support == Fraction(31, 24)


def test_stats_single_and_empty(toy):
    s = stats(toy, {0})
    assert s.node_count == 1
    assert (s.edge_count, s.avg_degree, s.avg_support, s.vertex_density) == (0, 0, 0, 0)
    assert stats(toy, set()).node_count == 0


edge_lists = st.lists(
    st.lists(st.sampled_from("abcdefghij"), min_size=1, max_size=5),
    min_size=0, max_size=12,
)


@given(edge_lists)
def test_round_trip(edges):
    G = Hypergraph.from_edges(edges)
    H = loads_hypergraph(dumps_hypergraph(G))
    as_sets = lambda X: [frozenset(X.labels[v] for v in e) for e in X.edges]
    assert as_sets(G) == as_sets(H)


@given(edge_lists)
def test_incidence_symmetry(edges):
    G = Hypergraph.from_edges(edges)
    for v, inc in enumerate(G.incidence):
        assert all(v in G.edges[i] for i in inc)
    for i, e in enumerate(G.edges):
        assert list(e) == sorted(set(e))
        assert all(i in G.incidence[v] for v in e)


@settings(max_examples=50)
@given(edge_lists, st.data())
def test_induced_monotone(edges, data):
    G = Hypergraph.from_edges(edges)
    outer = data.draw(st.sets(st.integers(0, max(G.num_nodes - 1, 0)))) if G.num_nodes else set()
    inner = data.draw(st.sets(st.sampled_from(sorted(outer)))) if outer else set()
    big, small = induced(G, outer), induced(G, inner)
    big_edges = [{big.labels[v] for v in e} for e in big.edges]
    inner_labels = {G.labels[v] for v in inner}
    for e in small.edges:
        labels = {small.labels[v] for v in e}
        assert any(labels == b & inner_labels for b in big_edges)
