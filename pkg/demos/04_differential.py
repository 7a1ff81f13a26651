"""Compare the tour-based decision with both brute-force oracles."""

import time

from xplanar import decide
from xplanar.oracle import enumerate_small_xgraphs, oracle_forbidden_pairs, oracle_rotations, random_xgraph

graphs = list(enumerate_small_xgraphs(3))
graphs += [random_xgraph(1 + s % 10, s, shuffle_pairings=True) for s in range(300)]

start = time.perf_counter()
planar = disagree = 0
for g in graphs:
    a = decide(g).planar
    b = oracle_rotations(g) is not None
    c = oracle_forbidden_pairs(g) is None
    planar += a
    disagree += not (a == b == c)
print(f"{len(graphs)} instances, {planar} X-planar, {disagree} disagreements, "
      f"{time.perf_counter() - start:.1f} s")
