"""Rotation systems, face tracing and the tour-to-embedding construction."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Dart, InternalError, XGraph, XGraphError, is_connected
from .euler import EulerTour, is_turning, strong_turning_violation
from .interlace import INSIDE, Coloring, interlacement_graph, is_proper_coloring


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic order of the four darts around each vertex."""

    orders: tuple[tuple[Dart, ...], ...]

    def successor(self) -> dict[Dart, Dart]:
        succ = {}
        for order in self.orders:
            for i, d in enumerate(order):
                succ[d] = order[(i + 1) % len(order)]
        return succ

    def normalized(self) -> RotationSystem:
        """Each cyclic order rotated to start at its smallest dart."""
        out = []
        for order in self.orders:
            i = order.index(min(order))
            out.append(tuple(order[i:] + order[:i]))
        return RotationSystem(tuple(out))

    def format(self) -> str:
        return "".join(f"r {v} {' '.join(map(str, order))}\n"
                       for v, order in enumerate(self.normalized().orders))


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[tuple[Dart, ...], ...]

    @property
    def count(self) -> int:
        return len(self.faces)


def rotation_problem(g: XGraph, r: RotationSystem) -> str | None:
    if len(r.orders) != g.n_vertices:
        return "rotation must list every vertex"
    for v, order in enumerate(r.orders):
        if sorted(order) != list(g.darts_at(v)):
            return f"rotation at vertex {v} is not a permutation of its darts"
    return None


def alternates(g: XGraph, r: RotationSystem) -> bool:
    """True when pair labels read 1212 around every vertex."""
    for order in r.orders:
        labels = [g.pair_of(d) for d in order]
        if labels[0] == labels[1] or labels[0] != labels[2] or labels[1] != labels[3]:
            return False
    return True


def face_count(g: XGraph, r: RotationSystem) -> FaceSet:
    """Orbits of 'cross the edge, then turn to the rotation successor'."""
    problem = rotation_problem(g, r)
    if problem:
        raise XGraphError(problem)
    succ = r.successor()
    seen: set[Dart] = set()
    faces = []
    for start in sorted(succ):
        if start in seen:
            continue
        face = []
        d = start
        while d not in seen:
            seen.add(d)
            face.append(d)
            d = succ[d.companion]
        faces.append(tuple(face))
    return FaceSet(tuple(faces))


def euler_characteristic(g: XGraph, r: RotationSystem) -> int:
    return g.n_vertices - g.n_edges + face_count(g, r).count


def is_planar_rotation(g: XGraph, r: RotationSystem) -> bool:
    if not is_connected(g):
        raise XGraphError("planarity by face count needs a connected graph")
    return euler_characteristic(g, r) == 2


def rotation_from_tour(t: EulerTour, col: Coloring, g: XGraph) -> RotationSystem:
    return contract_tour(t, col, g)[0]


def contract_tour(t: EulerTour, col: Coloring, g: XGraph) -> tuple[RotationSystem, FaceSet]:
    """Contract the chords of a convenient, strongly turning tour.

    With passes ``a`` then ``b`` at a vertex, a chord drawn inside the tour
    circle yields ``(a_in, a_out, b_in, b_out)``; one drawn outside yields
    ``(a_in, b_out, b_in, a_out)``.  The result is checked for alternation
    and ``V - E + F = 2`` before being returned with its faces.
    """
    if not is_turning(t, g):
        raise XGraphError("tour is not turning")
    if strong_turning_violation(t, g) is not None:
        raise XGraphError("tour is not strongly turning")
    if not is_proper_coloring(interlacement_graph(t), col):
        raise XGraphError("coloring puts two skew vertices on one side")
    orders = []
    for v, (i, j) in enumerate(t.pass_index):
        a, b = t.passes[i], t.passes[j]
        if col[v] == INSIDE:
            orders.append((a.in_dart, a.out_dart, b.in_dart, b.out_dart))
        else:
            orders.append((a.in_dart, b.out_dart, b.in_dart, a.out_dart))
    r = RotationSystem(tuple(orders))
    if not alternates(g, r):
        raise InternalError("contracted rotation does not alternate pairs")
    faces = face_count(g, r)
    # the tour is Eulerian, so g is connected
    if g.n_vertices - g.n_edges + faces.count != 2:
        raise InternalError("contracted rotation is not planar")
    return r, faces


def render_schematic(g: XGraph, r: RotationSystem, faces: FaceSet | None = None,
                     size: int = 400) -> str:
    """Schematic SVG: vertices on a circle, each edge a cubic curve leaving its
    darts in rotation order.  Not guaranteed crossing-free."""
    if g.n_vertices == 0:
        raise XGraphError("nothing to render")
    center = size / 2
    radius = size * 0.35 if g.n_vertices > 1 else 0.0
    stub = size * 0.12
    pos, heading = {}, {}
    for v, order in enumerate(r.orders):
        angle = 2 * math.pi * v / g.n_vertices
        x, y = center + radius * math.cos(angle), center + radius * math.sin(angle)
        pos[v] = (x, y)
        for i, d in enumerate(order):
            heading[d] = angle + i * math.pi / 2

    def point(d: Dart, length: float) -> tuple[float, float]:
        x, y = pos[g.dart_vertex(d)]
        a = heading[d]
        return x + length * math.cos(a), y + length * math.sin(a)

    def fmt(p: tuple[float, float]) -> str:
        return f"{p[0]:.2f},{p[1]:.2f}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
    ]
    if faces is not None:
        lines.append(f"<title>{g.n_vertices} vertices, {g.n_edges} edges, "
                     f"{faces.count} faces</title>")
    lines.append('<g fill="none" stroke="black" stroke-width="1.5">')
    for e, (a, b) in enumerate(g.edges):
        s, t = Dart(e, "s"), Dart(e, "t")
        path = (f"M {fmt(pos[a])} L {fmt(point(s, stub * 0.3))} "
                f"C {fmt(point(s, stub * 2))} {fmt(point(t, stub * 2))} "
                f"{fmt(point(t, stub * 0.3))} L {fmt(pos[b])}")
        lines.append(f'<path id="e{e}" d="{path}"/>')
    lines.append("</g>")
    lines.append('<g fill="steelblue" font-family="sans-serif" font-size="12">')
    for v in range(g.n_vertices):
        x, y = pos[v]
        lines.append(f'<circle id="v{v}" cx="{x:.2f}" cy="{y:.2f}" r="5"/>')
        lines.append(f'<text x="{x + 7:.2f}" y="{y - 7:.2f}">{v}</text>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
