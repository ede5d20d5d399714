"""
Memory: EPA against the naive algorithm
=======================================

The naive peeling keeps a map of g-neighbours for every node, so its
footprint follows the number of co-occurring pairs. EPA keeps one counter
per node plus one transient map. Both are measured by internal accounting.
"""
import random

from kgcore import GenConfig, Hypergraph, generate, memory_report

rng = random.Random(2024)
n = 1000
dense = Hypergraph([str(i) for i in range(n)], [rng.sample(range(n), 200) for _ in range(150)])
sparse = generate(GenConfig(node_count=n, edge_count=600, cardinality_range=(2, 4),
                            community_count=20, seed=1))

for name, G in [("dense", dense), ("sparse", sparse)]:
    naive = memory_report("naive", G, 5, 5)
    fast = memory_report("epa", G, 5, 5)
    print(f"{name:6s} naive={naive.peak_bytes:>10,d} B  epa={fast.peak_bytes:>8,d} B  "
          f"ratio={naive.peak_bytes / fast.peak_bytes:6.1f}x  core size={fast.result_size}")
