"""One test per acceptance criterion; each prints a [PASS]/[FAIL] line."""

import hashlib
import os
import statistics
import subprocess
import sys
import time
from pathlib import Path

import pytest

from instances import cycle_word, fig8_loop, turning_instance
from xplanar import decide
from xplanar.core import from_gauss_code, is_vertex_simple, verify_forbidden_pair, walk_problem
from xplanar.embed import alternates, face_count
from xplanar.euler import is_turning, strong_turning_violation, turning_euler_tour
from xplanar.interlace import OddCycle, interlacement_graph, two_coloring, y_sequence
from xplanar.oracle import (
    enumerate_small_xgraphs,
    oracle_forbidden_pairs,
    oracle_rotations,
    random_word,
    random_xgraph,
)

RANDOM_INSTANCES = 600


@pytest.fixture(scope="module")
def differential():
    """Exhaustive V <= 3 stream plus seeded random instances with V <= 10."""
    start = time.perf_counter()
    graphs = list(enumerate_small_xgraphs(3))
    graphs += [random_xgraph(1 + s % 10, s, shuffle_pairings=s % 2 == 1)
               for s in range(RANDOM_INSTANCES)]
    rows = []
    for g in graphs:
        rows.append((g, decide(g), oracle_rotations(g), oracle_forbidden_pairs(g)))
    return rows, time.perf_counter() - start


def timed(fn):
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


# 1 ---------------------------------------------------------------------------

def test_criterion_1_fig8_loop(acceptance_report):
    g = fig8_loop()
    v, secs = timed(lambda: decide(g))
    cert = None if v.planar else v.certificate()
    report = cert and verify_forbidden_pair(cert.walk1, cert.walk2, g)
    ok = bool(report) and report.valid and report.crossing == {0} and secs < 1
    acceptance_report("1a fig8-loop not X-planar, crossing {0}, < 1 s", ok, f"{secs * 1000:.1f} ms")
    assert ok


def test_criterion_1_word_a_b_c_a_b_c(acceptance_report):
    g = from_gauss_code("a b c a b c")
    v, secs = timed(lambda: decide(g))
    ok = not v.planar and secs < 1
    if ok:
        c = v.certificate()
        ok = verify_forbidden_pair(c.walk1, c.walk2, g).valid
    detail = f"{secs * 1000:.1f} ms"
    if v.planar:
        detail += (f"; embedded with F={v.face_counts()[0]}, oracle rotations "
                   f"{'found' if oracle_rotations(g) else 'none'}, oracle cycle pairs "
                   f"{'found' if oracle_forbidden_pairs(g) else 'none'}")
    acceptance_report("1b 'a b c a b c' not X-planar with valid certificate, < 1 s", ok, detail)
    assert ok


def test_criterion_1_word_a_b_a_b(acceptance_report):
    # two crossings joined by four parallel edges
    g = from_gauss_code("a b a b")
    v, secs = timed(lambda: decide(g))
    ok = not v.planar and secs < 1
    if ok:
        c = v.certificate()
        ok = verify_forbidden_pair(c.walk1, c.walk2, g).valid
    acceptance_report("1c 'a b a b' not X-planar with valid certificate, < 1 s", ok, f"{secs * 1000:.1f} ms")
    assert ok


# 2 ---------------------------------------------------------------------------

def test_criterion_2_equivalence(differential, acceptance_report):
    rows, secs = differential
    bad = [g for g, v, r, pair in rows if not (v.planar == (r is not None) == (pair is None))]
    ok = not bad and secs < 300
    acceptance_report("2 decide <=> oracle rotations <=> no forbidden pair", ok,
                      f"{len(rows)} instances, {len(bad)} disagreements, {secs:.1f} s")
    assert ok


# 3 ---------------------------------------------------------------------------

def test_criterion_3_embedding_soundness(differential, acceptance_report):
    rows, _ = differential
    planar = [(g, v) for g, v, _, _ in rows if v.planar]
    bad = 0
    for g, v in planar:
        r = v.rotation()
        per_part = [p.component.graph.n_vertices - p.component.graph.n_edges
                    + face_count(p.component.graph, p.rotation).count for p in v.parts]
        if not alternates(g, r) or any(x != 2 for x in per_part):
            bad += 1
    ok = bad == 0 and len(planar) > 0
    acceptance_report("3 planar verdicts alternate 1212 and satisfy V-E+F=2", ok,
                      f"{len(planar)} planar instances, {bad} failures")
    assert ok


# 4 ---------------------------------------------------------------------------

def test_criterion_4_certificate_soundness(differential, acceptance_report, caplog):
    rows, _ = differential
    plain = simple = 0
    failures = []
    for g, v, _, _ in rows:
        if v.planar:
            continue
        c = v.certificate()
        rep = verify_forbidden_pair(c.walk1, c.walk2, g)
        if rep.valid and rep.crossing == {c.vertex}:
            plain += 1
        else:
            failures.append(("plain", rep.reason))
        try:
            s = decide(g, simplify=True).certificate()
        except Exception as exc:  # any simplification failure fails the criterion
            failures.append(("simplify", str(exc)))
            continue
        rep = verify_forbidden_pair(s.walk1, s.walk2, g)
        if rep.valid and is_vertex_simple(s.walk1, g) and is_vertex_simple(s.walk2, g):
            simple += 1
        else:
            failures.append(("simplify", rep.reason))
    errors = [r for r in caplog.records if r.levelname == "ERROR"]
    ok = not failures and not errors and plain > 0
    acceptance_report("4 certificates verify; simplified walks vertex-simple and verify", ok,
                      f"{plain} certificates, {simple} simplified, {len(failures) + len(errors)} failures")
    assert ok


# 5 ---------------------------------------------------------------------------

def test_criterion_5_tour_lemmas(differential, acceptance_report):
    rows, _ = differential
    bad_tour = bad_planar = planar = 0
    for g, v, r, _ in rows:
        for part in v.parts:
            t, cg = part.tour, part.component.graph
            if len(t) != cg.n_edges or walk_problem(t.walk, cg) or not is_turning(t, cg):
                bad_tour += 1
        if r is None:
            continue
        planar += 1
        t = turning_euler_tour(g)
        colorable = not isinstance(two_coloring(interlacement_graph(t)), OddCycle)
        if strong_turning_violation(t, g) is not None or not colorable:
            bad_planar += 1
    ok = bad_tour == 0 and bad_planar == 0 and planar > 0
    acceptance_report("5 tours Eulerian and turning; strongly turning and Q bipartite when planar", ok,
                      f"{len(rows)} instances ({planar} planar), {bad_tour + bad_planar} failures")
    assert ok


# 6 ---------------------------------------------------------------------------

def test_criterion_6_y_sequence(differential, acceptance_report):
    rows, _ = differential
    cases = [turning_instance(cycle_word(k))[0] for k in range(1, 8)]
    for seed in range(400):
        # words with chords spliced into an odd ring of chords
        base = cycle_word(1 + seed % 5)
        extra = random_word(1 + seed % 4, seed)
        cut = seed % len(base)
        cases.append(turning_instance(base[:cut] + extra + base[cut:])[0])
    cases += [g for g, v, _, _ in rows if not v.planar and v.parts and
              any(p.odd_cycle is not None for p in v.parts)]
    checked = bad = 0
    for g in cases:
        v = decide(g)
        for part in v.parts:
            if part.odd_cycle is None:
                continue
            checked += 1
            y = y_sequence(part.tour, part.odd_cycle)
            k = y.k
            aligned = all(y.vertex(2 * i) == y.vertex(2 * i + 3) for i in range(1, 2 * k + 2))
            if not aligned or part.certificate.vertex != y.vertex(2 * k):
                bad += 1
    ok = bad == 0 and checked >= 7
    acceptance_report("6 Y-sequence 3-apart and crossing vertex is T(Y_2k)", ok,
                      f"{checked} odd-cycle certificates, {bad} failures")
    assert ok


# 7 ---------------------------------------------------------------------------

def sparse_instance(seed, blocks=10, size=10):
    """Concatenated independent blocks: interlacement only within a block."""
    word = []
    for b in range(blocks):
        word += [f"b{b}_{s}" for s in random_word(size, seed * blocks + b)]
    return from_gauss_code(word)


def test_criterion_7_performance(acceptance_report):
    g = random_xgraph(2000, 2024)
    _, big = timed(lambda: decide(g))
    kinks = from_gauss_code([f"k{i // 2}" for i in range(4000)])
    kv, big_planar = timed(lambda: decide(kinks))
    graphs = [sparse_instance(s) for s in range(60)]
    decide(graphs[0])
    small = [timed(lambda g=g: decide(g))[1] for g in graphs]
    median = statistics.median(small)
    ok = big < 10 and big_planar < 10 and kv.planar and median < 0.010
    acceptance_report("7 V=2000 < 10 s; V=100 sparse median < 10 ms", ok,
                      f"V=2000 {big:.2f} s (planar chain {big_planar:.2f} s), "
                      f"V=100 median {median * 1000:.2f} ms")
    assert ok


# 8 ---------------------------------------------------------------------------

CORPUS_SCRIPT = """
import sys
sys.path.insert(0, {tests!r})
from instances import cycle_word, turning_instance
from xplanar import decide
from xplanar.core import from_gauss_code, serialize_xgraph
from xplanar.embed import render_schematic
from xplanar.oracle import random_xgraph

graphs = [from_gauss_code(w) for w in ("a a", "a b a b", "a b c a b c", "a b c a d c b d")]
graphs += [turning_instance(cycle_word(k))[0] for k in range(1, 6)]
graphs += [random_xgraph(1 + s % 40, s, s % 2 == 1) for s in range(120)]
out = []
for g in graphs:
    v = decide(g)
    out.append(serialize_xgraph(g))
    for p in v.parts:
        out.append(p.tour.format())
        if p.coloring is not None:
            out.append(p.coloring.format())
    out.append(v.format())
    out.append(decide(g, simplify=True).format())
    if v.planar:
        out.append(render_schematic(g, v.rotation(), v.parts[0].faces if len(v.parts) == 1 else None))
sys.stdout.write("".join(out))
"""


def run_corpus(hash_seed: str) -> bytes:
    env = dict(os.environ, PYTHONHASHSEED=hash_seed)
    script = CORPUS_SCRIPT.format(tests=str(Path(__file__).parent))
    return subprocess.run([sys.executable, "-c", script], env=env, check=True,
                          capture_output=True).stdout


def test_criterion_8_determinism(acceptance_report):
    a, b = run_corpus("1"), run_corpus("4242")
    ok = a == b and len(a) > 0
    acceptance_report("8 byte-identical corpus output across runs", ok,
                      f"{len(a)} bytes, sha256 {hashlib.sha256(a).hexdigest()[:12]}")
    assert ok
