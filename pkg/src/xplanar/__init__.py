"""Plane embeddings of graphs with a crossing structure at degree-4 vertices."""

from .core import (
    CertificateReport,
    ClosedWalk,
    Dart,
    InternalError,
    OrientedEdge,
    Pass,
    XGraph,
    XGraphError,
    components,
    crossing_vertices,
    from_gauss_code,
    parse_xgraph,
    passes,
    serialize_xgraph,
    simplify_cycle,
    validate,
    verify_forbidden_pair,
)
from .embed import RotationSystem, face_count, is_planar_rotation, render_schematic
from .euler import EulerTour, is_turning, split_at_violation, strong_turning_violation, turning_euler_tour
from .pipeline import Verdict, decide

__version__ = "0.1.0"
