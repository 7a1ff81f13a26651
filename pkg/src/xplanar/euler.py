"""Turning Eulerian tours and the strong-turning test.

A tour *turns* at a pass when it enters and leaves a vertex through darts of
different pairs.  A turning tour is *strongly turning* when both entries
into every vertex use the same pair.  When that fails at a vertex ``A`` the
tour splits at ``A`` into two closed walks crossing only at ``A``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    ClosedWalk,
    InternalError,
    OrientedEdge,
    Pass,
    XGraph,
    XGraphError,
    is_connected,
    passes,
)


@dataclass(frozen=True)
class EulerTour:
    """Closed walk over every edge once.

    Pass ``k`` is the transit between step ``k`` and step ``k + 1``; each
    vertex of a 4-regular graph has exactly two passes, listed in
    ``pass_index`` in tour order.
    """

    walk: ClosedWalk
    passes: tuple[Pass, ...]
    pass_index: tuple[tuple[int, int], ...]

    @classmethod
    def from_walk(cls, walk: ClosedWalk, g: XGraph) -> EulerTour:
        if len(walk) != g.n_edges or len(walk.edge_set()) != g.n_edges:
            raise XGraphError("walk does not cover every edge exactly once")
        ps = tuple(passes(walk, g))
        at: list[list[int]] = [[] for _ in range(g.n_vertices)]
        for k, p in enumerate(ps):
            at[p.vertex].append(k)
        if any(len(ks) != 2 for ks in at):
            raise XGraphError("every vertex must be passed exactly twice")
        return cls(walk, ps, tuple((a, b) for a, b in at))

    @property
    def steps(self) -> tuple[OrientedEdge, ...]:
        return self.walk.steps

    def __len__(self) -> int:
        return len(self.walk)

    def format(self) -> str:
        detail = " ".join(
            f"{v}:{self.passes[a].in_dart}>{self.passes[a].out_dart},"
            f"{self.passes[b].in_dart}>{self.passes[b].out_dart}"
            for v, (a, b) in enumerate(self.pass_index)
        )
        return f"{self.walk.format('t')}\n# passes {detail}\n"


def _trail(g: XGraph, start: OrientedEdge, used: list[bool]) -> list[OrientedEdge]:
    """Walk from ``start``, switching pair at every vertex, until stuck."""
    trail = []
    step: OrientedEdge | None = start
    while step is not None:
        used[step.edge] = True
        trail.append(step)
        arrived = step.arrival
        step = None
        other = 1 - g.pair_of(arrived)
        for d in sorted(g.pairing[g.dart_vertex(arrived)][other]):
            if not used[d.edge]:
                step = OrientedEdge.leaving(d)
                break
    return trail


def turning_euler_tour(g: XGraph) -> EulerTour:
    """A turning Eulerian tour of a connected X-graph.

    Starts at vertex 0 through its smallest dart.  The tour is then grown
    Hierholzer-style: scanning passes in tour order, the first vertex that
    still has unused darts gets a turning sub-trail spliced in right after
    that pass.
    """
    if g.n_edges == 0:
        raise XGraphError("graph has no edges")
    if not is_connected(g):
        raise XGraphError("graph is not connected")
    used = [False] * g.n_edges

    def unused_at(v: int) -> bool:
        return any(not used[d.edge] for d in g.darts_at(v))

    first = _trail(g, OrientedEdge.leaving(g.darts_at(0)[0]), used)
    tour: list[OrientedEdge] = []
    # stack of (trail, next index); splicing a sub-trail after a pass is the
    # same as scanning it before the rest of the enclosing trail
    stack = [(first, 0)]
    while stack:
        trail, i = stack.pop()
        while i < len(trail):
            step = trail[i]
            tour.append(step)
            i += 1
            v = g.head(step)
            if unused_at(v):
                other = 1 - g.pair_of(step.arrival)
                out = min(d for d in g.pairing[v][other] if not used[d.edge])
                stack.append((trail, i))
                trail, i = _trail(g, OrientedEdge.leaving(out), used), 0
    if len(tour) != g.n_edges:
        raise InternalError("turning tour missed some edges")
    return EulerTour.from_walk(ClosedWalk(tuple(tour)), g)


def is_turning(t: EulerTour, g: XGraph) -> bool:
    return all(not g.same_pair(p.in_dart, p.out_dart) for p in t.passes)


def strong_turning_violation(t: EulerTour, g: XGraph) -> int | None:
    """Smallest vertex entered through different pairs, or None."""
    for v, (a, b) in enumerate(t.pass_index):
        if not g.same_pair(t.passes[a].in_dart, t.passes[b].in_dart):
            return v
    return None


@dataclass(frozen=True)
class SplitCertificate:
    vertex: int
    walk1: ClosedWalk
    walk2: ClosedWalk


def split_at_violation(t: EulerTour, vertex: int, g: XGraph) -> SplitCertificate:
    """Cut the tour at ``vertex`` into its two closed sub-walks.

    ``walk1`` runs from the first departure from ``vertex`` to the second
    arrival at it; ``walk2`` is the rest of the tour.
    """
    p1, p2 = t.pass_index[vertex]
    if g.same_pair(t.passes[p1].in_dart, t.passes[p2].in_dart):
        raise XGraphError(f"vertex {vertex} is not a strong-turning violation")
    steps = t.steps
    walk1 = ClosedWalk(steps[p1 + 1:p2 + 1])
    walk2 = ClosedWalk(steps[p2 + 1:] + steps[:p1 + 1])
    return SplitCertificate(vertex, walk1, walk2)
