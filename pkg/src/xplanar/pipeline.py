"""End-to-end decision: plane embedding or forbidden cycle pair."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Literal

from .core import (
    ClosedWalk,
    Component,
    Dart,
    InternalError,
    XGraph,
    check,
    components,
    is_vertex_simple,
    simplify_cycle,
    verify_forbidden_pair,
)
from .embed import FaceSet, RotationSystem, contract_tour
from .euler import EulerTour, split_at_violation, strong_turning_violation, turning_euler_tour
from .interlace import Coloring, OddCycle, forbidden_pair_from_odd_cycle, interlacement_graph, two_coloring, y_sequence

log = logging.getLogger(__name__)

Provenance = Literal["strong-turning-split", "odd-cycle-formula", "odd-cycle-fallback"]


@dataclass(frozen=True)
class Certificate:
    walk1: ClosedWalk
    walk2: ClosedWalk
    vertex: int
    provenance: Provenance

    def format(self) -> str:
        return (f"{self.walk1.format()}\n{self.walk2.format()}\nx {self.vertex}\n"
                f"# provenance {self.provenance}\n")


@dataclass(frozen=True)
class ComponentVerdict:
    component: Component
    tour: EulerTour
    coloring: Coloring | None = None
    odd_cycle: OddCycle | None = None
    rotation: RotationSystem | None = None
    faces: FaceSet | None = None
    certificate: Certificate | None = None  # in local ids of the component

    @property
    def planar(self) -> bool:
        return self.rotation is not None


@dataclass(frozen=True)
class Verdict:
    graph: XGraph
    parts: tuple[ComponentVerdict, ...] = field(default_factory=tuple)

    @property
    def planar(self) -> bool:
        return all(p.planar for p in self.parts)

    def rotation(self) -> RotationSystem:
        """Rotation system of the whole graph in original ids."""
        if not self.planar:
            raise ValueError("graph is not X-planar")
        orders: list[tuple] = [()] * self.graph.n_vertices
        for p in self.parts:
            emap = p.component.edge_map
            for v, order in enumerate(p.rotation.orders):
                orders[p.component.vertex_map[v]] = tuple(
                    Dart(emap[d.edge], d.end) for d in order)
        return RotationSystem(tuple(orders))

    def face_counts(self) -> list[int]:
        return [p.faces.count for p in self.parts]

    def certificate(self) -> Certificate:
        """Certificate of the first non-planar component, in original ids."""
        for p in self.parts:
            if p.certificate is not None:
                c, comp = p.certificate, p.component
                return Certificate(c.walk1.map_edges(comp.edge_map),
                                   c.walk2.map_edges(comp.edge_map),
                                   comp.vertex_map[c.vertex], c.provenance)
        raise ValueError("graph is X-planar")

    def format(self) -> str:
        if self.planar:
            out = "# X-planar\n" + self.rotation().format()
            out += "".join(f"f {n}\n" for n in self.face_counts())
            return out
        return "# not X-planar\n" + self.certificate().format()


def _simplified(cert: Certificate, g: XGraph) -> Certificate:
    w1 = simplify_cycle(cert.walk1, cert.vertex, g)
    w2 = simplify_cycle(cert.walk2, cert.vertex, g)
    report = verify_forbidden_pair(w1, w2, g)
    if not (report.valid and is_vertex_simple(w1, g) and is_vertex_simple(w2, g)):
        log.error("simplified certificate rejected: %s", report.reason or "not vertex-simple")
        raise InternalError("simplified certificate failed verification")
    return Certificate(w1, w2, cert.vertex, cert.provenance)


def decide_component(comp: Component, simplify: bool = False) -> ComponentVerdict:
    g = comp.graph
    tour = turning_euler_tour(g)
    vertex = strong_turning_violation(tour, g)
    if vertex is not None:
        split = split_at_violation(tour, vertex, g)
        cert = Certificate(split.walk1, split.walk2, vertex, "strong-turning-split")
        cycle = None
    else:
        result = two_coloring(interlacement_graph(tour))
        if isinstance(result, Coloring):
            # raises InternalError unless alternating with V - E + F = 2
            rotation, faces = contract_tour(tour, result, g)
            return ComponentVerdict(comp, tour, coloring=result, rotation=rotation, faces=faces)
        cycle = result
        found = forbidden_pair_from_odd_cycle(tour, y_sequence(tour, cycle), g)
        cert = Certificate(found.walk1, found.walk2, found.vertex, found.provenance)
    report = verify_forbidden_pair(cert.walk1, cert.walk2, g)
    if not report.valid or report.crossing != {cert.vertex}:
        raise InternalError(f"emitted certificate rejected: {report.reason}")
    if simplify:
        cert = _simplified(cert, g)
    return ComponentVerdict(comp, tour, odd_cycle=cycle, certificate=cert)


def decide(g: XGraph, simplify: bool = False) -> Verdict:
    """X-planarity verdict, one component at a time.

    Each component gets one turning Eulerian tour.  A vertex entered through
    both pairs splits the tour into a certificate; otherwise an odd cycle in
    the interlacement graph yields one; otherwise the tour's chord coloring
    is contracted into a plane rotation system.
    """
    check(g)
    return Verdict(g, tuple(decide_component(c, simplify) for c in components(g)))
