"""Follow one instance down the odd-cycle branch.

The turning tour is strongly turning, but its chord diagram has an odd ring
of crossing chords, so no inside/outside split exists.  The shortest ring is
cut into tour segments and reassembled into two closed walks.
"""

from xplanar.euler import turning_euler_tour
from xplanar.interlace import (
    formula_segments,
    interlacement_graph,
    two_coloring,
    y_sequence,
)
from xplanar.oracle import random_xgraph
from xplanar.pipeline import decide

for seed in range(10_000):
    g = random_xgraph(8, seed, shuffle_pairings=True)
    part = decide(g).parts[0]
    if part.odd_cycle is not None:
        break
print(f"seed {seed}: {g.n_vertices} vertices")

tour = turning_euler_tour(g)
print(tour.format(), end="")
q = interlacement_graph(tour)
print("skew pairs:", q.edges())
cycle = two_coloring(q)
print("shortest odd cycle:", cycle.vertices)

y = y_sequence(tour, cycle)
print("Y points (pass positions):", y.points)
print("Y vertices:", y.vertices)
seg1, seg2 = formula_segments(y.k)


def show(segs):
    return " ".join(f"[{i}]" + ("" if fwd else "r") for i, fwd in segs)


print("walk 1 segments:", show(seg1))
print("walk 2 segments:", show(seg2))
print(part.certificate.format(), end="")
