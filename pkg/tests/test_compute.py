import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kgcore import DomainError, Hypergraph, epa, g_neighbours, memory_report, naive_kg_core, support
from kgcore.compute import AuxMeter
from kgcore.oracle import oracle_kg_core

# initial g-neighbour counts of the toy hypergraph, per g
TABLE3 = {
    1: {"x11": 2, "x2": 3, "x1": 4, "x3": 4, "x4": 4, "x10": 4,
        "x6": 5, "x7": 5, "x9": 5, "x5": 6, "x8": 6},
    2: {"x2": 0, "x5": 0, "x10": 0, "x11": 0, "x9": 1,
        "x1": 2, "x3": 2, "x4": 2, "x6": 2, "x7": 2, "x8": 3},
    3: {f"x{i}": 0 for i in range(1, 12)},
}


def test_support(toy):
    x = toy.node_id
    assert support(toy, x("x1"), x("x3")) == 2
    assert support(toy, x("x8"), x("x9")) == 2
    assert support(toy, x("x9"), x("x8")) == 2
    assert support(toy, x("x2"), x("x11")) == 0
    with pytest.raises(DomainError):
        support(toy, 0, 0)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_g_neighbour_counts(toy, g):
    everyone = set(range(toy.num_nodes))
    got = {toy.labels[v]: len(g_neighbours(toy, everyone, v, g)) for v in everyone}
    assert got == TABLE3[g]


def test_g_neighbours_of_x8(toy, ids):
    nbrs = g_neighbours(toy, set(range(11)), toy.node_id("x8"), 2)
    assert {toy.labels[u]: c for u, c in nbrs.items()} == {"x6": 2, "x7": 2, "x9": 2}


def test_g_neighbours_restricted_to_candidates(toy, ids):
    H = ids("x8", "x6", "x7")
    nbrs = g_neighbours(toy, H, toy.node_id("x8"), 2)
    assert set(nbrs) == ids("x6", "x7")
    with pytest.raises(DomainError):
        g_neighbours(toy, H, toy.node_id("x1"), 1)


def test_g_neighbours_empty_beyond_max_support(toy):
    assert g_neighbours(toy, set(range(11)), 0, 3) == {}


CORES = [
    (2, 2, ["x1", "x3", "x4", "x6", "x7", "x8"]),
    (4, 1, ["x6", "x7", "x8", "x9", "x10"]),
    (1, 3, []),
    (1, 1, [f"x{i}" for i in range(1, 12)]),
]


@pytest.mark.parametrize("algorithm", [epa, naive_kg_core, oracle_kg_core])
@pytest.mark.parametrize("k, g, expected", CORES)
def test_toy_cores(toy, ids, algorithm, k, g, expected):
    assert algorithm(toy, k, g) == ids(*expected)


@pytest.mark.parametrize("k, g", [(0, 1), (1, 0), (-2, 3)])
def test_bad_parameters(toy, k, g):
    with pytest.raises(DomainError):
        epa(toy, k, g)
    with pytest.raises(DomainError):
        naive_kg_core(toy, k, g)


def test_empty_and_singleton_graphs():
    G = Hypergraph(["a", "b"], [[0], [1]])
    assert epa(G, 1, 1) == set()
    assert naive_kg_core(G, 1, 1) == set()
    assert epa(Hypergraph([], []), 1, 1) == set()


@st.composite
def hypergraphs(draw, max_nodes=12, max_edges=14):
    n = draw(st.integers(1, max_nodes))
    edges = draw(st.lists(
        st.lists(st.integers(0, n - 1), min_size=1, max_size=min(n, 6), unique=True),
        max_size=max_edges,
    ))
    return Hypergraph([f"n{i}" for i in range(n)], edges)


params = st.integers(1, 5)


@settings(max_examples=150, deadline=None)
@given(hypergraphs(), params, params)
def test_agrees_with_oracle(G, k, g):
    expected = oracle_kg_core(G, k, g)
    assert epa(G, k, g) == expected
    assert naive_kg_core(G, k, g) == expected


@settings(max_examples=100, deadline=None)
@given(hypergraphs(), params, params)
def test_soundness_and_containment(G, k, g):
    core = epa(G, k, g)
    for v in core:
        assert len(g_neighbours(G, core, v, g)) >= k
    assert epa(G, k + 1, g) <= core
    assert epa(G, k, g + 1) <= core


@settings(max_examples=60, deadline=None)
@given(hypergraphs(), params, params)
def test_maximality(G, k, g):
    core = epa(G, k, g)
    for v in set(range(G.num_nodes)) - core:
        # v cannot be added back: the fixpoint from core + {v} drops it again
        grown = core | {v}
        sub = Hypergraph(G.labels, [[u for u in e if u in grown] for e in G.edges])
        assert v not in oracle_kg_core(sub, k, g)


@settings(max_examples=40, deadline=None)
@given(hypergraphs(), params, params, st.randoms(use_true_random=False))
def test_order_independent(G, k, g, rnd):
    perm = list(range(G.num_nodes))
    rnd.shuffle(perm)
    shuffled = Hypergraph(
        [G.labels[perm.index(i)] for i in range(G.num_nodes)],
        [[perm[v] for v in e] for e in G.edges],
    )
    assert shuffled.label_set(epa(shuffled, k, g)) == G.label_set(epa(G, k, g))


def clique_like(n=100, copies=3):
    return Hypergraph([str(i) for i in range(n)], [list(range(n))] * copies)


def test_naive_stores_every_ordered_pair():
    report = memory_report("naive", clique_like(100, 3), 5, 3)
    assert report.peak_pairs == 100 * 99
    assert report.result_size == 100


def test_epa_memory_is_linear():
    G = clique_like(100, 3)
    report = memory_report("epa", G, 5, 3)
    assert report.peak_pairs == 0
    assert report.peak_entries <= 5 * G.num_nodes


def test_naive_versus_epa_ratio():
    G = clique_like(100, 3)
    naive = memory_report("naive", G, 5, 3)
    fast = memory_report("epa", G, 5, 3)
    assert naive.peak_entries >= 10 * fast.peak_entries
    assert naive.peak_bytes >= 10 * fast.peak_bytes


def test_meter_balances(toy):
    meter = AuxMeter()
    epa(toy, 2, 2, meter=meter)
    assert meter.scratch == 0 and meter.pairs == 0
    # the naive maps of survivors are still live when it returns
    meter = AuxMeter()
    core = naive_kg_core(toy, 2, 2, meter=meter)
    assert meter.pairs == sum(len(g_neighbours(toy, core, v, 2)) for v in core)


def test_unknown_algorithm(toy):
    with pytest.raises(DomainError):
        memory_report("oracle", toy, 1, 1)


def test_runs_are_repeatable():
    rng = random.Random(3)
    G = Hypergraph([str(i) for i in range(30)],
                   [rng.sample(range(30), rng.randint(2, 6)) for _ in range(40)])
    assert epa(G, 2, 1) == epa(G, 2, 1) == naive_kg_core(G, 2, 1)
