"""
Computing a single (k,g)-core
=============================

The toy hypergraph below has 11 nodes and 5 hyperedges. A node is a
g-neighbour of another when the two share at least g hyperedges; the
(k,g)-core keeps the largest node set in which everyone has at least k
g-neighbours.
"""
from kgcore import epa, g_neighbours, induced, naive_kg_core, stats, toy_fixture

G = toy_fixture()
print(G)

##############################################################################
# Pairwise support drives everything. x8 shares two hyperedges with each of
# x6, x7 and x9, so with g=2 it has three g-neighbours.
x8 = G.node_id("x8")
nbrs = g_neighbours(G, set(range(G.num_nodes)), x8, g=2)
print({G.labels[u]: c for u, c in nbrs.items()})

##############################################################################
# EPA stores only one counter per node while peeling.
core = epa(G, k=2, g=2)
print("(2,2)-core:", G.label_set(core))
assert core == naive_kg_core(G, 2, 2)

##############################################################################
# The induced subhypergraph keeps each edge restricted to the core, as long as
# two or more members survive.
sub = induced(G, core)
for e, parent in zip(sub.edges, sub.origin):
    print(f"  e{parent + 1}: {sub.label_set(e)}")
print(stats(G, core).as_dict())

##############################################################################
# Raising either threshold only shrinks the core.
for k, g in [(1, 1), (3, 1), (4, 1), (5, 1), (1, 2), (1, 3)]:
    print((k, g), G.label_set(epa(G, k, g)))
