"""Dart-level data model for graphs with a crossing structure (X-graphs).

An X-graph is a 4-regular multigraph (loops allowed) in which the four
darts (half-edges) at every vertex are split into two pairs.  This module
holds the basic types, the ``.xg`` text format, Gauss-code ingestion, pass
semantics of closed walks and the forbidden-pair certificate checker that
the rest of the package relies on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence


class XGraphError(ValueError):
    """Invalid input: malformed text, bad structure or an ill-formed walk."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InternalError(RuntimeError):
    """An invariant that should hold for every valid input was violated."""


class Dart(NamedTuple):
    edge: int
    end: str  # 's' (tail side) or 't' (head side)

    def __str__(self) -> str:
        return f"{self.edge}.{self.end}"

    @property
    def companion(self) -> Dart:
        return Dart(self.edge, "t" if self.end == "s" else "s")

    @classmethod
    def parse(cls, token: str) -> Dart:
        edge, _, end = token.partition(".")
        if end not in ("s", "t") or not edge.isdigit():
            raise ValueError(f"bad dart {token!r}")
        return cls(int(edge), end)


class OrientedEdge(NamedTuple):
    edge: int
    forward: bool = True  # forward means s -> t

    @property
    def departure(self) -> Dart:
        return Dart(self.edge, "s" if self.forward else "t")

    @property
    def arrival(self) -> Dart:
        return Dart(self.edge, "t" if self.forward else "s")

    def reversed(self) -> OrientedEdge:
        return OrientedEdge(self.edge, not self.forward)

    def __str__(self) -> str:
        return f"{'+' if self.forward else '-'}{self.edge}"

    @classmethod
    def parse(cls, token: str) -> OrientedEdge:
        if len(token) < 2 or token[0] not in "+-" or not token[1:].isdigit():
            raise ValueError(f"bad oriented edge {token!r}")
        return cls(int(token[1:]), token[0] == "+")

    @classmethod
    def leaving(cls, dart: Dart) -> OrientedEdge:
        """The step that departs through ``dart``."""
        return cls(dart.edge, dart.end == "s")


class Pass(NamedTuple):
    vertex: int
    in_dart: Dart
    out_dart: Dart


Pair = tuple[Dart, ...]


@dataclass(frozen=True)
class XGraph:
    """A 4-regular multigraph with a pairing of the darts at each vertex.

    ``edges[i]`` is ``(tail, head)``; dart ``(i, 's')`` sits at the tail and
    ``(i, 't')`` at the head.  ``pairing[v]`` holds the two pairs of ``v``.
    Instances are not validated on construction; see :func:`validate`.
    """

    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    pairing: tuple[tuple[Pair, Pair], ...]

    @classmethod
    def build(cls, n_vertices: int, edges: Iterable[Sequence[int]],
              pairing: Iterable[Sequence[Iterable[Dart]]]) -> XGraph:
        return cls(
            n_vertices,
            tuple((int(a), int(b)) for a, b in edges),
            tuple(tuple(tuple(Dart(*d) for d in pair) for pair in pairs)
                  for pairs in pairing),
        )

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def dart_vertex(self, d: Dart) -> int:
        tail, head = self.edges[d.edge]
        return tail if d.end == "s" else head

    def tail(self, step: OrientedEdge) -> int:
        return self.dart_vertex(step.departure)

    def head(self, step: OrientedEdge) -> int:
        return self.dart_vertex(step.arrival)

    @cached_property
    def _darts_at(self) -> tuple[tuple[Dart, ...], ...]:
        at: list[list[Dart]] = [[] for _ in range(self.n_vertices)]
        for e, (a, b) in enumerate(self.edges):
            at[a].append(Dart(e, "s"))
            at[b].append(Dart(e, "t"))
        return tuple(tuple(sorted(ds)) for ds in at)

    def darts_at(self, v: int) -> tuple[Dart, ...]:
        """Darts incident to ``v`` in ascending (edge, end) order."""
        return self._darts_at[v]

    @cached_property
    def _pair_index(self) -> dict[Dart, int]:
        return {d: i for pairs in self.pairing for i, pair in enumerate(pairs)
                for d in pair}

    def pair_of(self, d: Dart) -> int:
        """Index (0 or 1) of the pair containing ``d`` at its vertex."""
        return self._pair_index[d]

    def same_pair(self, a: Dart, b: Dart) -> bool:
        return self._pair_index[a] == self._pair_index[b]

    def canonical(self) -> XGraph:
        pairing = []
        for pairs in self.pairing:
            ordered = sorted(tuple(sorted(p)) for p in pairs)
            pairing.append(tuple(ordered))
        return XGraph(self.n_vertices, self.edges, tuple(pairing))


class Violation(NamedTuple):
    message: str
    where: str = ""

    def __str__(self) -> str:
        return f"{self.message} ({self.where})" if self.where else self.message


def validate(g: XGraph) -> list[Violation]:
    """Report every broken X-graph invariant; an empty list means valid."""
    out = []
    for e, (a, b) in enumerate(g.edges):
        if not (0 <= a < g.n_vertices and 0 <= b < g.n_vertices):
            out.append(Violation("edge endpoint out of range", f"edge {e}"))
    if out:
        # everything below indexes vertices through the edge list
        return out
    if len(g.pairing) != g.n_vertices:
        return [Violation("pairing must list every vertex exactly once")]
    for v in range(g.n_vertices):
        darts = g.darts_at(v)
        where = f"vertex {v}"
        if len(darts) != 4:
            out.append(Violation(f"vertex degree {len(darts)} != 4", where))
            continue
        pairs = g.pairing[v]
        if len(pairs) != 2 or any(len(p) != 2 for p in pairs):
            out.append(Violation("pair sizes must be 2 and 2", where))
            continue
        flat = [d for p in pairs for d in p]
        if len(set(flat)) != 4:
            out.append(Violation("pairs overlap", where))
        elif set(flat) != set(darts):
            out.append(Violation("pairing does not match incident darts", where))
    return out


def check(g: XGraph) -> XGraph:
    problems = validate(g)
    if problems:
        raise XGraphError("; ".join(str(p) for p in problems))
    return g


# -- .xg text format ---------------------------------------------------------

def parse_xgraph(text: str, strict: bool = True) -> XGraph:
    """Parse the line-oriented ``.xg`` format.

    With ``strict`` (the default) the graph is also validated; otherwise only
    the syntax and dart references are checked, for :func:`validate` to report.
    """
    header = None
    edges: dict[int, tuple[int, int]] = {}
    pairing: dict[int, tuple[Pair, Pair]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        try:
            if header is None:
                if tok[0] != "xgraph" or len(tok) != 3:
                    raise ValueError("expected header 'xgraph <V> <E>'")
                header = (int(tok[1]), int(tok[2]))
                if min(header) < 0:
                    raise ValueError("negative count in header")
            elif tok[0] == "e":
                if len(tok) != 4:
                    raise ValueError("expected 'e <edge> <tail> <head>'")
                e, a, b = map(int, tok[1:])
                if e in edges:
                    raise ValueError(f"duplicate edge {e}")
                edges[e] = (a, b)
            elif tok[0] == "p":
                if len(tok) < 2 or tok.count("|") != 1:
                    raise ValueError("expected 'p <vertex> <dart> <dart> | <dart> <dart>'")
                v = int(tok[1])
                if v in pairing:
                    raise ValueError(f"duplicate pairing for vertex {v}")
                bar = tok.index("|")
                first = tuple(Dart.parse(t) for t in tok[2:bar])
                second = tuple(Dart.parse(t) for t in tok[bar + 1:])
                pairing[v] = (first, second)
            else:
                raise ValueError(f"unknown record {tok[0]!r}")
        except ValueError as exc:
            raise XGraphError(str(exc), lineno) from None
    if header is None:
        raise XGraphError("missing 'xgraph' header")
    n_v, n_e = header
    if sorted(edges) != list(range(n_e)):
        raise XGraphError(f"edge ids must be exactly 0..{n_e - 1}")
    if sorted(pairing) != list(range(n_v)):
        raise XGraphError(f"pairing lines must cover vertices 0..{n_v - 1}")
    for v, pairs in pairing.items():
        for d in (d for p in pairs for d in p):
            if d.edge >= n_e:
                raise XGraphError(f"unknown dart {d} at vertex {v}")
    g = XGraph(n_v, tuple(edges[e] for e in range(n_e)),
               tuple(pairing[v] for v in range(n_v)))
    return check(g) if strict else g


def serialize_xgraph(g: XGraph, comments: Sequence[str] = ()) -> str:
    """Canonical ``.xg`` text: ascending ids, smaller dart first in each pair."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"xgraph {g.n_vertices} {g.n_edges}")
    lines += [f"e {e} {a} {b}" for e, (a, b) in enumerate(g.edges)]
    for v, (p, q) in enumerate(g.canonical().pairing):
        lines.append(f"p {v} {' '.join(map(str, p))} | {' '.join(map(str, q))}")
    return "\n".join(lines) + "\n"


def from_gauss_code(word: str | Sequence[str]) -> XGraph:
    """X-graph of a closed curve's shadow from its double-occurrence word.

    Vertices are numbered by first occurrence; edge ``i`` runs from position
    ``i`` to ``i + 1`` (cyclically).  Each passage of the curve through a
    crossing (arrival and departure dart) forms one pair.
    """
    symbols = word.split() if isinstance(word, str) else list(word)
    if not symbols:
        raise XGraphError("empty Gauss code")
    index: dict[str, int] = {}
    seen: list[list[int]] = []
    for pos, s in enumerate(symbols):
        if s not in index:
            index[s] = len(seen)
            seen.append([])
        seen[index[s]].append(pos)
    bad = [s for s, v in index.items() if len(seen[v]) != 2]
    if bad:
        raise XGraphError(f"symbols must occur exactly twice: {', '.join(bad)}")
    n = len(symbols)
    edges = tuple((index[symbols[i]], index[symbols[(i + 1) % n]]) for i in range(n))
    pairing = tuple(
        tuple((Dart((pos - 1) % n, "t"), Dart(pos, "s")) for pos in positions)
        for positions in seen
    )
    return XGraph(len(seen), edges, pairing).canonical()


# -- components --------------------------------------------------------------

@dataclass(frozen=True)
class Component:
    graph: XGraph
    vertex_map: tuple[int, ...]  # local vertex id -> original id
    edge_map: tuple[int, ...]    # local edge id -> original id


def _roots(g: XGraph) -> list[int]:
    """Smallest vertex of each vertex's connected component."""
    parent = list(range(g.n_vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in g.edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    return [find(v) for v in range(g.n_vertices)]


def components(g: XGraph) -> list[Component]:
    """Split ``g`` into connected components, ordered by smallest vertex."""
    roots = _roots(g)
    groups: dict[int, list[int]] = {}
    for v, r in enumerate(roots):
        groups.setdefault(r, []).append(v)
    edge_groups: dict[int, list[int]] = {r: [] for r in groups}
    for e, (a, _) in enumerate(g.edges):
        edge_groups[roots[a]].append(e)

    out = []
    for root in sorted(groups):
        vmap = tuple(groups[root])
        emap = tuple(edge_groups[root])
        vloc = {v: i for i, v in enumerate(vmap)}
        eloc = {e: i for i, e in enumerate(emap)}
        edges = tuple((vloc[g.edges[e][0]], vloc[g.edges[e][1]]) for e in emap)
        pairing = tuple(
            tuple(tuple(Dart(eloc[d.edge], d.end) for d in pair) for pair in g.pairing[v])
            for v in vmap
        )
        out.append(Component(XGraph(len(vmap), edges, pairing).canonical(), vmap, emap))
    return out


def is_connected(g: XGraph) -> bool:
    return len(set(_roots(g))) <= 1


# -- walks -------------------------------------------------------------------

@dataclass(frozen=True)
class ClosedWalk:
    """Cyclic sequence of oriented edges with no repeated edge."""

    steps: tuple[OrientedEdge, ...] = field(default_factory=tuple)

    @classmethod
    def of(cls, steps: Iterable[OrientedEdge | tuple[int, bool]]) -> ClosedWalk:
        return cls(tuple(OrientedEdge(*s) for s in steps))

    @classmethod
    def parse(cls, line: str) -> ClosedWalk:
        tok = line.split()
        if not tok or tok[0] not in ("w", "t"):
            raise XGraphError(f"expected a walk line, got {line!r}")
        try:
            return cls(tuple(OrientedEdge.parse(t) for t in tok[1:]))
        except ValueError as exc:
            raise XGraphError(str(exc)) from None

    def format(self, tag: str = "w") -> str:
        return " ".join([tag, *map(str, self.steps)])

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def edge_set(self) -> frozenset[int]:
        return frozenset(s.edge for s in self.steps)

    def vertices(self, g: XGraph) -> list[int]:
        return [g.tail(s) for s in self.steps]

    def reversed(self) -> ClosedWalk:
        return ClosedWalk(tuple(s.reversed() for s in reversed(self.steps)))

    def map_edges(self, edge_map: Sequence[int]) -> ClosedWalk:
        return ClosedWalk(tuple(OrientedEdge(edge_map[s.edge], s.forward)
                                for s in self.steps))


def walk_problem(w: ClosedWalk, g: XGraph) -> str | None:
    """Why ``w`` is not a closed walk of ``g``, or None if it is one."""
    if not w.steps:
        return "walk is empty"
    if any(not 0 <= s.edge < g.n_edges for s in w.steps):
        return "walk uses an unknown edge"
    if len(w.edge_set()) != len(w.steps):
        return "walk repeats an edge"
    n = len(w.steps)
    for i, s in enumerate(w.steps):
        if g.head(s) != g.tail(w.steps[(i + 1) % n]):
            return f"walk is not connected after step {i}"
    return None


def passes(w: ClosedWalk, g: XGraph) -> list[Pass]:
    """Pass ``k`` joins the arrival of step ``k`` to the departure of step ``k+1``."""
    problem = walk_problem(w, g)
    if problem:
        raise XGraphError(problem)
    n = len(w.steps)
    return [Pass(g.head(s), s.arrival, w.steps[(k + 1) % n].departure)
            for k, s in enumerate(w.steps)]


def crossing_vertices(w1: ClosedWalk, w2: ClosedWalk, g: XGraph) -> frozenset[int]:
    """Common vertices where ``w1`` passes straight through one pair."""
    if w1.edge_set() & w2.edge_set():
        raise XGraphError("walks are not edge-disjoint")
    first = {p.vertex: p for p in passes(w1, g)}
    common = first.keys() & {p.vertex for p in passes(w2, g)}
    # edge-disjointness leaves room for one pass per walk at a shared vertex
    return frozenset(v for v in common
                     if g.same_pair(first[v].in_dart, first[v].out_dart))


def parse_certificate(text: str) -> tuple[ClosedWalk, ClosedWalk, int | None]:
    """Two ``w`` lines and an optional ``x <vertex>`` line; '#' starts a comment."""
    walks, vertex = [], None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("w"):
            try:
                walks.append(ClosedWalk.parse(line))
            except XGraphError as exc:
                raise XGraphError(str(exc), lineno) from None
        elif line.startswith("x") and len(line.split()) == 2 and line.split()[1].isdigit():
            vertex = int(line.split()[1])
        else:
            raise XGraphError(f"unexpected certificate line {line!r}", lineno)
    if len(walks) != 2:
        raise XGraphError(f"certificate needs exactly two walk lines, got {len(walks)}")
    return walks[0], walks[1], vertex


@dataclass(frozen=True)
class CertificateReport:
    walk1: ClosedWalk
    walk2: ClosedWalk
    crossing: frozenset[int]
    valid: bool
    reason: str | None = None


def verify_forbidden_pair(w1: ClosedWalk, w2: ClosedWalk, g: XGraph) -> CertificateReport:
    """Check that two closed walks are edge-disjoint with exactly one crossing vertex.

    Never raises; problems are reported through ``reason``.
    """
    def fail(reason: str, crossing: frozenset[int] = frozenset()) -> CertificateReport:
        return CertificateReport(w1, w2, crossing, False, reason)

    for name, w in (("walk1", w1), ("walk2", w2)):
        problem = walk_problem(w, g)
        if problem:
            return fail(f"{name}: {problem}")
    if w1.edge_set() & w2.edge_set():
        return fail("not edge-disjoint")
    crossing = crossing_vertices(w1, w2, g)
    if len(crossing) != 1:
        return fail(f"{len(crossing)} crossing vertices, expected exactly 1", crossing)
    return CertificateReport(w1, w2, crossing, True)


def is_vertex_simple(w: ClosedWalk, g: XGraph) -> bool:
    vs = w.vertices(g)
    return len(set(vs)) == len(vs)


def simplify_cycle(w: ClosedWalk, anchor: int, g: XGraph) -> ClosedWalk:
    """Vertex-simple cycle through ``anchor`` using only edges of ``w``.

    The walk is rotated to leave ``anchor`` first and loops are erased as
    they close, so the first step out of ``anchor`` is always kept.
    """
    vs = w.vertices(g)
    if anchor not in vs:
        raise XGraphError(f"walk does not visit vertex {anchor}")
    start = vs.index(anchor)
    steps = w.steps[start:] + w.steps[:start]
    path: list[OrientedEdge] = []
    seen = {anchor: 0}
    order = [anchor]
    for s in steps:
        path.append(s)
        v = g.head(s)
        if v == anchor:
            return ClosedWalk(tuple(path))
        if v in seen:
            cut = seen[v]
            for u in order[cut + 1:]:
                del seen[u]
            del order[cut + 1:]
            del path[cut:]
        else:
            seen[v] = len(order)
            order.append(v)
    raise InternalError("closed walk never returned to its anchor")
