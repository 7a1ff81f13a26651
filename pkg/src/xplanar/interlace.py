"""Interlacement graph of an Eulerian tour and the odd-cycle certificate.

Read the tour as a circle whose 2V marked points are the passes; every
vertex is a chord joining its two passes.  Two vertices are *skew* when their
chords cross (order ``u v u v`` along the tour).  A 2-coloring of the
interlacement graph puts one color class inside the circle and the other
outside.  When no coloring exists, a shortest odd cycle of skew vertices is
turned into two closed walks with a single crossing vertex.

Index conventions
-----------------
The chord endpoints of a shortest odd cycle of length ``2k + 1`` are
``Y_1 .. Y_n`` with ``n = 4k + 2``, numbered 1-based in circular tour order so
that ``Y_{2i}`` and ``Y_{2i+3}`` always belong to the same vertex.  In code,
``Y_j`` is ``points[(j - 1) % n]``.  Segment ``[i]`` is the stretch of the
tour from ``Y_i`` to ``Y_{i+1}``; in code it is ``_segment(i)`` with the same
1-based ``i``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .core import (
    ClosedWalk,
    InternalError,
    OrientedEdge,
    XGraph,
    XGraphError,
    verify_forbidden_pair,
)
from .euler import EulerTour

INSIDE = "inside"
OUTSIDE = "outside"

# bound on 4k + 2 for the exhaustive segment search
FALLBACK_MAX_SEGMENTS = 22


@dataclass(frozen=True)
class OccurrenceTable:
    first: tuple[int, ...]
    second: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.first)

    def vertex_at(self) -> list[int]:
        """Vertex owning each pass position."""
        at = [0] * (2 * len(self.first))
        for v, (a, b) in enumerate(zip(self.first, self.second)):
            at[a] = at[b] = v
        return at


def occurrence_table(t: EulerTour) -> OccurrenceTable:
    return OccurrenceTable(tuple(a for a, _ in t.pass_index),
                           tuple(b for _, b in t.pass_index))


@dataclass(frozen=True, eq=False)
class InterlacementGraph:
    """Skewness relation as a dense boolean adjacency matrix."""

    adjacency: np.ndarray

    @property
    def n_vertices(self) -> int:
        return self.adjacency.shape[0]

    def neighbors(self, v: int) -> list[int]:
        return np.flatnonzero(self.adjacency[v]).tolist()

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u, v])

    def edges(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self.adjacency, 1))
        return list(zip(us.tolist(), vs.tolist()))

    @classmethod
    def from_edges(cls, n: int, edges) -> InterlacementGraph:
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            adj[u, v] = adj[v, u] = True
        return cls(adj)


def _skew_matrix(first: np.ndarray, second: np.ndarray) -> np.ndarray:
    lo, hi = first[:, None], second[:, None]
    inside_first = (lo < first[None, :]) & (first[None, :] < hi)
    inside_second = (lo < second[None, :]) & (second[None, :] < hi)
    return inside_first ^ inside_second


def interlacement_graph(t: EulerTour) -> InterlacementGraph:
    table = occurrence_table(t)
    first = np.asarray(table.first, dtype=np.int64)
    second = np.asarray(table.second, dtype=np.int64)
    return InterlacementGraph(_skew_matrix(first, second))


@dataclass(frozen=True)
class Coloring:
    sides: tuple[str, ...]

    def __getitem__(self, v: int) -> str:
        return self.sides[v]

    def format(self) -> str:
        return "c " + " ".join("i" if s == INSIDE else "o" for s in self.sides) + "\n"


@dataclass(frozen=True)
class OddCycle:
    vertices: tuple[int, ...]

    @property
    def k(self) -> int:
        return (len(self.vertices) - 1) // 2

    def __len__(self) -> int:
        return len(self.vertices)


def is_proper_coloring(q: InterlacementGraph, c: Coloring) -> bool:
    inside = np.array([s == INSIDE for s in c.sides], dtype=bool)
    adj = q.adjacency
    return not (adj[np.ix_(inside, inside)].any() or adj[np.ix_(~inside, ~inside)].any())


def _bfs_coloring(adj: np.ndarray) -> np.ndarray:
    n = adj.shape[0]
    color = np.full(n, -1, dtype=np.int8)
    color[~adj.any(axis=1)] = 0
    for root in range(n):
        if color[root] >= 0:
            continue
        color[root] = 0
        frontier = np.array([root])
        side = 0
        while frontier.size:
            side ^= 1
            new = adj[frontier].any(axis=0) & (color < 0)
            color[new] = side
            frontier = np.flatnonzero(new)
    return color


def shortest_odd_cycle(q: InterlacementGraph) -> OddCycle | None:
    """Globally shortest odd cycle, by breadth-first layering from every root.

    From root ``r`` the first level ``d`` holding an edge between two of its
    vertices gives an odd closed walk of length ``2d + 1``.  The minimum over
    roots is the odd girth, and at a minimizing root the two tree paths meet
    only at ``r``.  Ties go to the smallest root, then the smallest edge.
    """
    adj = q.adjacency
    n = adj.shape[0]
    best: tuple[int, list[int]] | None = None
    for r in range(n):
        if best is not None and best[0] == 3:
            break
        parent = np.full(n, -1, dtype=np.int64)
        visited = np.zeros(n, dtype=bool)
        visited[r] = True
        frontier = np.array([r])
        d = 0
        while frontier.size:
            if best is not None and 2 * d + 1 >= best[0]:
                break
            sub = adj[np.ix_(frontier, frontier)]
            if d > 0 and sub.any():
                i, j = next(zip(*np.nonzero(np.triu(sub, 1))))
                x, y = int(frontier[i]), int(frontier[j])
                path_x, path_y = [x], [y]
                while path_x[-1] != r:
                    path_x.append(int(parent[path_x[-1]]))
                while path_y[-1] != r:
                    path_y.append(int(parent[path_y[-1]]))
                cycle = path_x[::-1] + path_y[:-1]
                best = (2 * d + 1, cycle)
                break
            new = adj[frontier].any(axis=0) & ~visited
            new_ids = np.flatnonzero(new)
            if new_ids.size:
                # frontier is ascending, so argmax picks the smallest parent
                parent[new_ids] = frontier[adj[np.ix_(frontier, new_ids)].argmax(axis=0)]
            visited |= new
            frontier = new_ids
            d += 1
    if best is None:
        return None
    cycle = best[1]
    m = len(cycle)
    for a in range(m):
        for b in range(a + 2, m):
            if (a, b) != (0, m - 1) and adj[cycle[a], cycle[b]]:
                raise InternalError("shortest odd cycle has a chord")
    return OddCycle(tuple(cycle))


def two_coloring(q: InterlacementGraph) -> Coloring | OddCycle:
    """Inside/outside coloring with no skew pair on one side, or an odd cycle."""
    color = _bfs_coloring(q.adjacency)
    coloring = Coloring(tuple(INSIDE if c == 0 else OUTSIDE for c in color))
    if is_proper_coloring(q, coloring):
        return coloring
    cycle = shortest_odd_cycle(q)
    if cycle is None:
        raise InternalError("improper BFS coloring but no odd cycle found")
    return cycle


# -- odd cycle -> forbidden pair ---------------------------------------------

@dataclass(frozen=True)
class YSequence:
    points: tuple[int, ...]    # pass positions Y_1 .. Y_n
    vertices: tuple[int, ...]  # vertex owning each Y_j
    offset: int

    @property
    def k(self) -> int:
        return (len(self.points) - 2) // 4

    def vertex(self, j: int) -> int:
        """Vertex of ``Y_j`` (1-based, cyclic)."""
        return self.vertices[(j - 1) % len(self.vertices)]

    def holds(self) -> bool:
        n = len(self.points)
        return all(self.vertex(2 * i) == self.vertex(2 * i + 3) for i in range(1, n // 2 + 1))


def y_sequence(t: EulerTour, c: OddCycle) -> YSequence:
    """Chord endpoints of an induced odd cycle in tour order, aligned so that
    ``Y_{2i}`` and ``Y_{2i+3}`` share a vertex."""
    m = len(c.vertices)
    if m < 3 or m % 2 == 0 or len(set(c.vertices)) != m:
        raise XGraphError("odd cycle must list an odd number >= 3 of distinct vertices")
    first = np.array([t.pass_index[v][0] for v in c.vertices])
    second = np.array([t.pass_index[v][1] for v in c.vertices])
    skew = _skew_matrix(first, second)
    for a in range(m):
        for b in range(a + 1, m):
            consecutive = b == a + 1 or (a, b) == (0, m - 1)
            if bool(skew[a, b]) != consecutive:
                raise XGraphError("cycle is not an induced cycle of the interlacement graph")
    owner = {t.pass_index[v][i]: v for v in c.vertices for i in (0, 1)}
    ends = sorted(owner)
    n = len(ends)
    for offset in range(n):
        points = tuple(ends[(j + offset) % n] for j in range(n))
        y = YSequence(points, tuple(owner[p] for p in points), offset)
        if y.holds():
            return y
    raise InternalError("no alignment of the odd cycle's endpoints is 3-apart")


@dataclass(frozen=True)
class OddCycleCertificate:
    walk1: ClosedWalk
    walk2: ClosedWalk
    vertex: int
    provenance: Literal["odd-cycle-formula", "odd-cycle-fallback"]


def _segment(t: EulerTour, y: YSequence, i: int, forward: bool = True) -> list[OrientedEdge]:
    n, e = len(y.points), len(t.steps)
    start, stop = y.points[(i - 1) % n], y.points[i % n]
    length = (stop - start) % e or e
    steps = [t.steps[(start + 1 + s) % e] for s in range(length)]
    if forward:
        return steps
    return [s.reversed() for s in reversed(steps)]


def formula_segments(k: int) -> tuple[list[tuple[int, bool]], list[tuple[int, bool]]]:
    """Segment lists ``(i, forward)`` of the two walks for an odd cycle of length 2k+1.

    First walk: ``[1], [5], .., [4l-3]``, then ``[4l]`` backwards, then
    ``[4l+3], [4l+7], .., [4k-1]`` with ``l = (k + 1) // 2``.  The second walk
    is its mirror image under ``Y_j -> Y_{1-j}``, which sends ``[i]`` to
    ``[-i]`` traversed the other way and fixes the vertex of ``Y_{2k}``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = 4 * k + 2
    l = (k + 1) // 2
    walk1 = [(i, True) for i in range(1, 4 * l - 2, 4)]
    walk1.append((4 * l, False))
    walk1 += [(i, True) for i in range(4 * l + 3, 4 * k, 4)]
    walk2 = [((n - i) % n, not fwd) for i, fwd in walk1]
    return walk1, walk2


def _assemble(t: EulerTour, y: YSequence, segments) -> ClosedWalk:
    return ClosedWalk(tuple(s for i, fwd in segments for s in _segment(t, y, i, fwd)))


def _segment_cycles(y: YSequence) -> list[list[tuple[int, bool]]]:
    """Vertex-simple cycles of the multigraph whose edges are the segments."""
    n = len(y.points)
    incident: dict[int, list[tuple[int, bool, int]]] = {}
    for i in range(1, n + 1):
        a, b = y.vertex(i), y.vertex(i + 1)
        incident.setdefault(a, []).append((i, True, b))
        incident.setdefault(b, []).append((i, False, a))
    cycles: list[list[tuple[int, bool]]] = []
    seen: set[frozenset[int]] = set()

    def extend(root: int, v: int, path: list[tuple[int, bool]], on_path: set[int]) -> None:
        used = {i for i, _ in path}
        for i, fwd, w in incident[v]:
            if i in used or w < root:
                continue
            if w == root:
                key = frozenset(used | {i})
                if key not in seen:
                    seen.add(key)
                    cycles.append(path + [(i, fwd)])
            elif w not in on_path:
                on_path.add(w)
                extend(root, w, path + [(i, fwd)], on_path)
                on_path.discard(w)

    for root in sorted(incident):
        extend(root, root, [], {root})
    return cycles


def fallback_pair(t: EulerTour, y: YSequence, g: XGraph) -> tuple[ClosedWalk, ClosedWalk] | None:
    """Exhaustive search over pairs of segment cycles for a valid certificate."""
    if len(y.points) > FALLBACK_MAX_SEGMENTS:
        raise InternalError(f"segment search capped at {FALLBACK_MAX_SEGMENTS} segments")
    cycles = _segment_cycles(y)
    for c1, c2 in itertools.combinations(cycles, 2):
        if {i for i, _ in c1} & {i for i, _ in c2}:
            continue
        w1, w2 = _assemble(t, y, c1), _assemble(t, y, c2)
        if verify_forbidden_pair(w1, w2, g).valid:
            return w1, w2
    return None


def forbidden_pair_from_odd_cycle(t: EulerTour, y: YSequence, g: XGraph) -> OddCycleCertificate:
    """Two closed walks with a single crossing vertex, built from tour segments.

    Needs a strongly turning tour.  The closed-form segment lists are tried
    first; if the checker rejects them the bounded segment search runs.
    """
    if not y.holds():
        raise XGraphError("Y-sequence does not satisfy the 3-apart pattern")
    k = y.k
    target = y.vertex(2 * k)
    seg1, seg2 = formula_segments(k)
    w1, w2 = _assemble(t, y, seg1), _assemble(t, y, seg2)
    report = verify_forbidden_pair(w1, w2, g)
    if report.valid and report.crossing == {target}:
        return OddCycleCertificate(w1, w2, target, "odd-cycle-formula")
    found = fallback_pair(t, y, g)
    if found is None:
        raise InternalError("no segment recombination yields a forbidden pair")
    report = verify_forbidden_pair(*found, g)
    (vertex,) = report.crossing
    return OddCycleCertificate(found[0], found[1], vertex, "odd-cycle-fallback")
