"""Hand-built instances shared by the test modules."""

from collections import defaultdict

from xplanar.core import ClosedWalk, Dart, OrientedEdge, XGraph, parse_xgraph
from xplanar.euler import EulerTour

FIG8_LOOP = """\
xgraph 1 2
e 0 0 0
e 1 0 0
p 0 0.s 0.t | 1.s 1.t
"""

FIG8_PASS = """\
xgraph 1 2
e 0 0 0
e 1 0 0
p 0 0.t 1.s | 0.s 1.t
"""

# two vertices joined by four parallel edges, each crossing the other
VIRTUAL_TREFOIL = "a b a b"
TREFOIL_SHADOW = "a b c a b c"


def fig8_loop() -> XGraph:
    return parse_xgraph(FIG8_LOOP)


def fig8_pass() -> XGraph:
    return parse_xgraph(FIG8_PASS)


def disjoint_union(*graphs: XGraph) -> XGraph:
    edges, pairing = [], []
    v0 = e0 = 0
    for g in graphs:
        edges += [(a + v0, b + v0) for a, b in g.edges]
        pairing += [tuple(tuple(Dart(d.edge + e0, d.end) for d in p) for p in pairs)
                    for pairs in g.pairing]
        v0 += g.n_vertices
        e0 += g.n_edges
    return XGraph(v0, tuple(edges), tuple(pairing))


def turning_instance(word):
    """Graph of a double-occurrence word whose own traversal is strongly turning.

    At each vertex the two arrival darts form one pair and the two departure
    darts the other, so the word order is a turning tour entering every vertex
    through the same pair twice.
    """
    word = word.split() if isinstance(word, str) else list(word)
    n = len(word)
    at = defaultdict(list)
    for i, s in enumerate(word):
        at[s].append(i)
    order = list(dict.fromkeys(word))
    index = {s: i for i, s in enumerate(order)}
    edges = tuple((index[word[i]], index[word[(i + 1) % n]]) for i in range(n))
    pairing = tuple(
        (tuple(sorted(Dart((p - 1) % n, "t") for p in at[s])),
         tuple(sorted(Dart(p, "s") for p in at[s])))
        for s in order
    )
    g = XGraph(len(order), edges, pairing)
    tour = EulerTour.from_walk(ClosedWalk(tuple(OrientedEdge(i, True) for i in range(n))), g)
    return g, tour


def cycle_word(k: int) -> list[str]:
    """Chord diagram whose interlacement graph is the cycle of length 2k+1."""
    n = 4 * k + 2
    word = [""] * n
    for i in range(1, 2 * k + 2):
        word[(2 * i - 1) % n] = word[(2 * i + 2) % n] = f"c{i}"
    return word
