"""Brute-force deciders and instance generators for differential testing.

The two deciders share no code with each other or with the tour-based
pipeline: one searches all alternating rotation systems for a planar one,
the other searches all pairs of simple cycles for a forbidden pair.
"""

from __future__ import annotations

import itertools
from typing import Iterator

import numpy as np

from .core import ClosedWalk, Dart, OrientedEdge, XGraph, XGraphError, from_gauss_code, is_connected
from .embed import RotationSystem, is_planar_rotation

ROTATIONS_MAX_V = 20
CYCLES_MAX_V = 12
MAX_CYCLES = 10**6
RNG_NAME = "numpy.PCG64"


def alternating_orders(g: XGraph, v: int) -> tuple[tuple[Dart, ...], tuple[Dart, ...]]:
    """The two cyclic orders at ``v`` in which the pairs alternate.

    Of the six cyclic orders of four darts, exactly these two (mirror images
    of each other) put the members of each pair opposite one another.
    """
    (x1, x2), (y1, y2) = (sorted(p) for p in g.canonical().pairing[v])
    return (x1, y1, x2, y2), (x1, y2, x2, y1)


def oracle_rotations(g: XGraph, max_v: int = ROTATIONS_MAX_V) -> RotationSystem | None:
    """Lexicographically first planar alternating rotation system, if any."""
    if g.n_vertices > max_v:
        raise XGraphError(f"rotation search capped at {max_v} vertices")
    if not is_connected(g):
        raise XGraphError("rotation search needs a connected graph")
    if g.n_vertices == 0:
        return RotationSystem(())
    choices = [alternating_orders(g, v) for v in range(g.n_vertices)]
    # mirroring every vertex preserves the face count, so the first accepting
    # assignment always has vertex 0 on its first choice
    for bits in itertools.product((0, 1), repeat=g.n_vertices - 1):
        r = RotationSystem(tuple(c[b] for c, b in zip(choices, (0, *bits))))
        if is_planar_rotation(g, r):
            return r
    return None


def _simple_cycles(g: XGraph, limit: int = MAX_CYCLES) -> list[list[OrientedEdge]]:
    """Every vertex-simple cycle once, rooted at its smallest vertex."""
    out_darts = [[OrientedEdge.leaving(d) for d in g.darts_at(v)] for v in range(g.n_vertices)]
    found: dict[frozenset[int], list[OrientedEdge]] = {}

    def head(s: OrientedEdge) -> int:
        a, b = g.edges[s.edge]
        return b if s.forward else a

    for root in range(g.n_vertices):
        stack = [(root, [], {root})]
        while stack:
            v, path, on_path = stack.pop()
            used = {s.edge for s in path}
            for s in out_darts[v]:
                if s.edge in used:
                    continue
                w = head(s)
                if w == root:
                    key = frozenset(used | {s.edge})
                    if key not in found:
                        found[key] = path + [s]
                        if len(found) > limit:
                            raise XGraphError(f"more than {limit} simple cycles")
                elif w > root and w not in on_path:
                    stack.append((w, path + [s], on_path | {w}))
    return sorted(found.values(), key=lambda c: (len(c), sorted(s.edge for s in c)))


def oracle_forbidden_pairs(g: XGraph, max_v: int = CYCLES_MAX_V) -> tuple[ClosedWalk, ClosedWalk] | None:
    """First pair of edge-disjoint simple cycles with exactly one crossing vertex."""
    if g.n_vertices > max_v:
        raise XGraphError(f"cycle search capped at {max_v} vertices")
    pair_of = {d: i for pairs in g.pairing for i, p in enumerate(pairs) for d in p}
    cycles = _simple_cycles(g)
    masks = []
    for c in cycles:
        edges = verts = straight = 0
        n = len(c)
        for i, s in enumerate(c):
            a, b = g.edges[s.edge]
            v = b if s.forward else a
            arrive = Dart(s.edge, "t" if s.forward else "s")
            nxt = c[(i + 1) % n]
            leave = Dart(nxt.edge, "s" if nxt.forward else "t")
            edges |= 1 << s.edge
            verts |= 1 << v
            if pair_of[arrive] == pair_of[leave]:
                straight |= 1 << v
        masks.append((edges, verts, straight))
    for i, (e1, v1, s1) in enumerate(masks):
        for j in range(i + 1, len(masks)):
            e2, v2, _ = masks[j]
            if e1 & e2:
                continue
            crossing = v1 & v2 & s1
            if crossing and crossing & (crossing - 1) == 0:
                return ClosedWalk(tuple(cycles[i])), ClosedWalk(tuple(cycles[j]))
    return None


def _pairings(darts: tuple[Dart, ...]) -> list[tuple[tuple[Dart, Dart], tuple[Dart, Dart]]]:
    a, b, c, d = darts
    return [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))]


def _multigraphs(n: int) -> Iterator[list[tuple[int, int]]]:
    """Labeled 4-regular multigraphs on ``n`` vertices, loops allowed."""
    slots = [(u, v) for u in range(n) for v in range(u, n)]

    def fill(i: int, degree: list[int], counts: list[int]) -> Iterator[list[int]]:
        if i == len(slots):
            if all(x == 4 for x in degree):
                yield list(counts)
            return
        u, v = slots[i]
        top = (4 - degree[u]) // 2 if u == v else min(4 - degree[u], 4 - degree[v])
        for m in range(top + 1):
            if u == v:
                degree[u] += 2 * m
            else:
                degree[u] += m
                degree[v] += m
            counts.append(m)
            yield from fill(i + 1, degree, counts)
            counts.pop()
            if u == v:
                degree[u] -= 2 * m
            else:
                degree[u] -= m
                degree[v] -= m

    for counts in fill(0, [0] * n, []):
        yield [slot for slot, m in zip(slots, counts) for _ in range(m)]


def enumerate_small_xgraphs(max_vertices: int) -> Iterator[XGraph]:
    """Every connected labeled X-graph with 1..max_vertices vertices."""
    if max_vertices > 4:
        raise XGraphError("exhaustive enumeration is limited to 4 vertices")
    for n in range(1, max_vertices + 1):
        for edges in _multigraphs(n):
            bare = XGraph(n, tuple(edges), ())
            if not is_connected(bare):
                continue
            options = [_pairings(bare.darts_at(v)) for v in range(n)]
            for pairing in itertools.product(*options):
                yield XGraph(n, bare.edges, tuple(pairing))


def random_word(letters: int, seed: int) -> list[str]:
    rng = np.random.Generator(np.random.PCG64(seed))
    word = rng.permutation(np.repeat(np.arange(letters), 2))
    return [f"x{i}" for i in word.tolist()]


def random_xgraph(letters: int, seed: int, shuffle_pairings: bool = False) -> XGraph:
    """Shadow of a uniformly random double-occurrence word, seeded.

    With ``shuffle_pairings`` each vertex then gets one of its three
    pairings uniformly at random, drawn from a second stream of the same seed.
    """
    if letters < 1:
        raise XGraphError("need at least one letter")
    g = from_gauss_code(random_word(letters, seed))
    if not shuffle_pairings:
        return g
    rng = np.random.Generator(np.random.PCG64([seed, 1]))
    picks = rng.integers(0, 3, size=g.n_vertices).tolist()
    pairing = tuple(_pairings(g.darts_at(v))[p] for v, p in enumerate(picks))
    return XGraph(g.n_vertices, g.edges, pairing)


def generator_metadata(letters: int, seed: int, shuffle_pairings: bool) -> list[str]:
    return [f"seed={seed} letters={letters} shuffle={int(shuffle_pairings)} rng={RNG_NAME}"]
