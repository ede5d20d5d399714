"""Brute-force reference implementations and test fixtures.

Nothing here shares code with the fast paths: the oracle recomputes every
pairwise support from the restricted hyperedges on each pass and deletes all
violators at once, and skylines are derived by testing maximality directly.
"""
from __future__ import annotations

import random
from collections import Counter
from itertools import combinations

from .decompose import CorenessSkyline, DecompositionResult
from .errors import DomainError
from .hypergraph import Hypergraph

__all__ = [
    "TOY_EDGES",
    "toy_fixture",
    "oracle_kg_core",
    "oracle_decompose",
    "random_hypergraph",
]

# 11 nodes, 5 hyperedges; memberships reconstructed from the g-neighbour
# count tables and the worked (2,2)-core example.
TOY_EDGES = (
    ("x1", "x2", "x3", "x4"),
    ("x1", "x3", "x4", "x5"),
    ("x6", "x7", "x8", "x9", "x10"),
    ("x5", "x6", "x7", "x8"),
    ("x8", "x9", "x11"),
)


def toy_fixture() -> Hypergraph:
    return Hypergraph.from_edges(TOY_EDGES)


def _qualifying(G: Hypergraph, alive: set[int], k: int, g: int) -> set[int]:
    support = Counter()
    for e in G.edges:
        members = [v for v in e if v in alive]
        if len(members) >= 2:
            support.update(combinations(members, 2))
    nbrs = Counter()
    for (u, v), s in support.items():
        if s >= g:
            nbrs[u] += 1
            nbrs[v] += 1
    return {v for v in alive if nbrs[v] >= k}


def oracle_kg_core(G: Hypergraph, k: int, g: int) -> set[int]:
    """(k,g)-core by simultaneous-deletion fixpoint iteration."""
    if k < 1 or g < 1:
        raise DomainError("k and g must be positive")
    alive = set(range(G.num_nodes))
    while True:
        keep = _qualifying(G, alive, k, g)
        if keep == alive:
            return alive
        alive = keep


def oracle_decompose(G: Hypergraph) -> DecompositionResult:
    """Exhaustive grid of oracle cores plus directly tested skylines."""
    raw = {}
    g = 1
    while True:
        k = 1
        while True:
            core = oracle_kg_core(G, k, g)
            if not core:
                break
            raw[(k, g)] = frozenset(core)
            k += 1
        if k == 1:
            break
        g += 1

    skylines = [[] for _ in range(G.num_nodes)]
    for (k, g), core in raw.items():
        for v in core:
            if v not in raw.get((k + 1, g), ()) and v not in raw.get((k, g + 1), ()):
                skylines[v].append((k, g))
    return DecompositionResult(raw=raw, skyline=CorenessSkyline(G.labels, skylines), g_levels=g - 1)


def random_hypergraph(seed, max_nodes=40, max_edges=60, max_cardinality=8) -> Hypergraph:
    """Small random hypergraph for oracle cross-checks.

    Edge cardinalities are uniform in ``[2, max_cardinality]`` (capped by
    the node count) and members are uniform without replacement.
    """
    rng = random.Random(seed)
    n = rng.randint(2, max_nodes)
    m = rng.randint(1, max_edges)
    edges = []
    for _ in range(m):
        size = rng.randint(2, min(max_cardinality, n))
        edges.append(rng.sample(range(n), size))
    return Hypergraph([f"v{i}" for i in range(n)], edges)
