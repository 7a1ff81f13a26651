import pytest

from instances import disjoint_union
from xplanar.core import (
    ClosedWalk,
    Dart,
    OrientedEdge,
    Pass,
    XGraph,
    XGraphError,
    from_gauss_code,
    simplify_cycle,
    verify_forbidden_pair,
    walk_problem,
)
from xplanar.euler import (
    EulerTour,
    is_turning,
    split_at_violation,
    strong_turning_violation,
    turning_euler_tour,
)
from xplanar.oracle import oracle_rotations, random_xgraph


def W(*tokens):
    return ClosedWalk(tuple(OrientedEdge.parse(t) for t in tokens))


def D(token):
    return Dart.parse(token)


def random_instances(count, max_letters=12, offset=0):
    for seed in range(offset, offset + count):
        letters = 1 + seed % max_letters
        yield seed, random_xgraph(letters, seed, shuffle_pairings=seed % 3 != 0)


def test_tour_fig8_loop(loop8):
    t = turning_euler_tour(loop8)
    assert t.walk == W("+0", "+1")
    assert t.passes == (Pass(0, D("0.t"), D("1.s")), Pass(0, D("1.t"), D("0.s")))
    assert t.pass_index == ((0, 1),)
    assert is_turning(t, loop8)
    assert strong_turning_violation(t, loop8) == 0


def test_tour_fig8_pass(pass8):
    t = turning_euler_tour(pass8)
    assert t.walk == W("+0", "-1")
    assert is_turning(t, pass8)
    assert strong_turning_violation(t, pass8) is None


def test_split_fig8_loop(loop8):
    t = turning_euler_tour(loop8)
    cert = split_at_violation(t, 0, loop8)
    assert (cert.walk1, cert.walk2) == (W("+1"), W("+0"))
    assert verify_forbidden_pair(cert.walk1, cert.walk2, loop8).crossing == {0}


def test_split_rejects_non_violation(pass8):
    t = turning_euler_tour(pass8)
    with pytest.raises(XGraphError, match="not a strong-turning violation"):
        split_at_violation(t, 0, pass8)


def test_curve_order_of_a_b_a_b_is_not_turning():
    # following the curve goes straight through every crossing
    g = from_gauss_code("a b a b")
    t = EulerTour.from_walk(W("+0", "+1", "+2", "+3"), g)
    assert not is_turning(t, g)


def test_tour_format(loop8):
    text = turning_euler_tour(loop8).format()
    assert text == "t +0 +1\n# passes 0:0.t>1.s,1.t>0.s\n"


def test_tour_rejects_disconnected(loop8):
    with pytest.raises(XGraphError, match="not connected"):
        turning_euler_tour(disjoint_union(loop8, loop8))


def test_tour_rejects_empty():
    with pytest.raises(XGraphError, match="no edges"):
        turning_euler_tour(XGraph(0, (), ()))


def test_from_walk_requires_cover(loop8):
    with pytest.raises(XGraphError, match="every edge"):
        EulerTour.from_walk(W("+0"), loop8)


def test_turning_property_on_random_instances():
    for seed, g in random_instances(500, max_letters=40):
        t = turning_euler_tour(g)
        assert len(t) == g.n_edges
        assert walk_problem(t.walk, g) is None
        assert t.steps[0] == OrientedEdge.leaving(g.darts_at(0)[0])
        assert is_turning(t, g), seed


def test_tour_is_deterministic():
    for _, g in random_instances(50, max_letters=30):
        assert turning_euler_tour(g) == turning_euler_tour(g)


def test_violation_is_smallest_vertex():
    for _, g in random_instances(200):
        t = turning_euler_tour(g)
        v = strong_turning_violation(t, g)
        bad = [u for u, (a, b) in enumerate(t.pass_index)
               if not g.same_pair(t.passes[a].in_dart, t.passes[b].in_dart)]
        assert v == (bad[0] if bad else None)


def test_split_certificates_on_random_instances():
    checked = 0
    for _, g in random_instances(2000):
        t = turning_euler_tour(g)
        v = strong_turning_violation(t, g)
        if v is None:
            continue
        cert = split_at_violation(t, v, g)
        report = verify_forbidden_pair(cert.walk1, cert.walk2, g)
        assert report.valid and report.crossing == {v}
        assert cert.walk1.edge_set() | cert.walk2.edge_set() == frozenset(range(g.n_edges))
        # the split survives simplification around the crossing vertex
        s1 = simplify_cycle(cert.walk1, v, g)
        s2 = simplify_cycle(cert.walk2, v, g)
        assert verify_forbidden_pair(s1, s2, g).crossing == {v}
        checked += 1
        if checked == 150:
            break
    assert checked >= 100


def test_planar_instances_have_no_violation():
    seen = 0
    for _, g in random_instances(400, max_letters=6):
        if oracle_rotations(g) is None:
            continue
        t = turning_euler_tour(g)
        assert strong_turning_violation(t, g) is None
        seen += 1
    assert seen > 20
