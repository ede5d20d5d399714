"""
Decomposition and the coreness index
====================================

``bca`` finds every non-empty (k,g)-core at once, and reduces them to a
small per-node skyline of maximal (k,g) pairs. The skyline alone answers any
later (k,g) query.
"""
import io

from kgcore import bca, coreness_projections, epa, load_index, query_core, save_index, toy_fixture

G = toy_fixture()
result = bca(G)

for (k, g), nodes in sorted(result.raw.items(), key=lambda kv: (kv[0][1], kv[0][0])):
    print(f"({k},{g})-core: {G.label_set(nodes)}")

##############################################################################
# x1 is in the (1,1), (2,1) and (3,1) cores, but only (3,1) is maximal at
# g=1; it also reaches (2,2).
for v, label in enumerate(G.labels):
    print(label, list(result.skyline[v]))

##############################################################################
# The index serialises to JSON and queries agree with direct computation.
buf = io.StringIO()
save_index(result.skyline, buf)
index = load_index(io.StringIO(buf.getvalue()))
for k in range(1, 6):
    for g in range(1, 4):
        assert query_core(index, k, g) == epa(G, k, g)
print("index answers match EPA on the whole grid")

##############################################################################
# Projections: for x9, the largest k available at each g, and vice versa.
k_coreness, g_coreness = coreness_projections(index, G.node_id("x9"))
print("x9 k-coreness:", k_coreness)
print("x9 g-coreness:", g_coreness)
