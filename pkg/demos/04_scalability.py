"""
Scalability on synthetic hypergraphs
====================================

Runtime of EPA as the node count doubles, on community-structured synthetic
hypergraphs. Expect a near-linear trend; a log-log fit gives the exponent.
"""
import time

import numpy as np

from kgcore import GenConfig, epa, generate, memory_report

sizes = [10_000, 20_000, 40_000, 80_000]
times = []
for n in sizes:
    G = generate(GenConfig(node_count=n, edge_count=n // 2, seed=7))
    start = time.perf_counter()
    core = epa(G, 5, 5)
    times.append(time.perf_counter() - start)
    peak = memory_report("epa", G, 5, 5).peak_bytes
    print(f"|V|={n:>6d}  |E|={G.num_edges:>6d}  epa={times[-1]:6.2f} s  "
          f"peak={peak / n:5.1f} B/node  core={len(core)}")

slope = np.polyfit(np.log(sizes), np.log(times), 1)[0]
print(f"fitted runtime exponent: {slope:.2f}")
