"""Wall-clock time of decide on growing random instances."""

import time

from xplanar import decide
from xplanar.core import from_gauss_code
from xplanar.oracle import random_xgraph

for n in [100, 250, 500, 1000, 2000]:
    g = random_xgraph(n, n)
    start = time.perf_counter()
    verdict = decide(g)
    print(f"random  V={n:5d}  {time.perf_counter() - start:7.3f} s  planar={verdict.planar}")

# a chain of kinks is planar and takes the full embedding path
for n in [500, 2000]:
    g = from_gauss_code([f"k{i // 2}" for i in range(2 * n)])
    start = time.perf_counter()
    verdict = decide(g)
    print(f"kinks   V={n:5d}  {time.perf_counter() - start:7.3f} s  faces={verdict.face_counts()[0]}")
