import math

import pytest

from circlesystems.equivalence import (
    OrientedDual,
    RealizationClass,
    classify_octahedron,
    digraph_isomorphic,
    equivalent,
    oriented_dual,
    smooth_degree_two,
)
from circlesystems.errors import NoClassMatch
from circlesystems.generators import canonical_octahedron_realization, octahedron
from circlesystems.packing import Circle
from circlesystems.realization import Arc, RealPoint, Realization, realize

EXPECTED_OUT3 = {
    RealizationClass.THREE_CROSSING: 1,
    RealizationClass.FOUR_TOUCHING_DISJOINT: 4,
    RealizationClass.FOUR_TOUCHING_NESTED: 3,
}


def _transformed(r, scale=1.0, dx=0.0, dy=0.0):
    circles = [Circle(c.cx * scale + dx, c.cy * scale + dy, c.r * scale)
               for c in r.circles]
    points = [RealPoint(p.x * scale + dx, p.y * scale + dy, p.on, p.kind)
              for p in r.points]
    return Realization(circles, points, list(r.arcs))


def _with_split_arc(r):
    """Insert a degree-2 point in the middle of the first arc."""
    arc = r.arcs[0]
    c = r.circles[arc.circle]
    mid = (arc.from_angle + arc.extent / 2.0) % (2 * math.pi)
    new_pid_xy = (c.cx + c.r * math.cos(mid), c.cy + c.r * math.sin(mid))
    points = list(r.points) + [
        RealPoint(new_pid_xy[0], new_pid_xy[1], (arc.circle, arc.circle), "TOUCH")
    ]
    arcs = list(r.arcs[1:]) + [
        Arc(arc.circle, arc.from_angle, mid, arc.edge),
        Arc(arc.circle, mid, arc.to_angle, max(a.edge for a in r.arcs) + 1),
    ]
    return Realization(list(r.circles), points, arcs)


@pytest.mark.parametrize("kind", list(RealizationClass))
def test_out_degree_three_counts(kind):
    r = canonical_octahedron_realization(kind)
    d = oriented_dual(smooth_degree_two(r))
    assert d.out_degree_counts().get(3, 0) == EXPECTED_OUT3[kind]


@pytest.mark.parametrize("kind", list(RealizationClass))
def test_dual_degree_matches_face_length(kind):
    r = canonical_octahedron_realization(kind)
    d = oriented_dual(r)
    from circlesystems.realization import extract_with_arcs

    ext = extract_with_arcs(r)
    for node in d.nodes:
        assert d.in_degree(node) + d.out_degree(node) == len(ext.graph.faces[node])


def test_dual_node_count_omits_outer():
    r = canonical_octahedron_realization(RealizationClass.THREE_CROSSING)
    d = oriented_dual(r)
    assert len(d.nodes) == 7  # 8 arrangement faces minus the outer one
    assert d.outer not in d.nodes


def test_outer_face_detection_nested():
    # the unbounded face of the nested drawing borders only the enclosing
    # circle, and every arc there points outward (toward the outer face)
    from circlesystems.realization import extract_with_arcs, outer_face_of

    r = canonical_octahedron_realization(RealizationClass.FOUR_TOUCHING_NESTED)
    ext = extract_with_arcs(r)
    outer = outer_face_of(r, ext)
    enclosing = max(range(4), key=lambda ci: r.circles[ci].r)
    boundary_arcs = {ext.dart_arc[d][0] for d in ext.graph.faces[outer]}
    assert all(r.arcs[a].circle == enclosing for a in boundary_arcs)
    d = oriented_dual(r)
    assert d.in_degree(d.outer) == 3
    assert d.out_degree(d.outer) == 0


def test_digraph_iso_self():
    r = canonical_octahedron_realization(RealizationClass.THREE_CROSSING)
    d = oriented_dual(r)
    assert digraph_isomorphic(d, d)


def test_digraph_iso_relabeled():
    r = canonical_octahedron_realization(RealizationClass.FOUR_TOUCHING_NESTED)
    d = oriented_dual(r)
    relabel = {node: 100 + node for node in d.nodes}
    relabel[d.outer] = 99
    d2 = OrientedDual(
        nodes=tuple(relabel[n] for n in d.nodes),
        edges=tuple((relabel[t], relabel[h], a) for t, h, a in d.edges),
        outer=99,
    )
    assert digraph_isomorphic(d, d2)


def test_digraph_iso_rejects_different_classes():
    d1 = oriented_dual(
        canonical_octahedron_realization(RealizationClass.THREE_CROSSING)
    )
    d2 = oriented_dual(
        canonical_octahedron_realization(RealizationClass.FOUR_TOUCHING_DISJOINT)
    )
    assert not digraph_isomorphic(d1, d2)


@pytest.mark.parametrize("k1", list(RealizationClass))
@pytest.mark.parametrize("k2", list(RealizationClass))
def test_equivalence_is_class_identity(k1, k2):
    r1 = canonical_octahedron_realization(k1)
    r2 = canonical_octahedron_realization(k2)
    assert equivalent(r1, r2) == (k1 == k2)


def test_scaled_translated_equivalent():
    r = canonical_octahedron_realization(RealizationClass.FOUR_TOUCHING_DISJOINT)
    assert equivalent(r, _transformed(r, scale=3.5, dx=10.0, dy=-2.0))
    assert equivalent(r, _transformed(r, dx=-7.0, dy=11.0))


def test_smooth_identity_without_degree_two_points():
    r = canonical_octahedron_realization(RealizationClass.THREE_CROSSING)
    s = smooth_degree_two(r)
    assert len(s.points) == len(r.points)
    assert len(s.arcs) == len(r.arcs)


def test_smooth_removes_subdivision_point():
    r = canonical_octahedron_realization(RealizationClass.FOUR_TOUCHING_DISJOINT)
    split = _with_split_arc(r)
    s = smooth_degree_two(split)
    assert len(s.points) == 6
    assert len(s.arcs) == 12
    # merged arc spans the two halves
    total_extent = sum(a.extent for a in s.arcs)
    assert abs(total_extent - sum(a.extent for a in r.arcs)) < 1e-9


def test_smoothed_split_still_equivalent():
    r = canonical_octahedron_realization(RealizationClass.FOUR_TOUCHING_DISJOINT)
    assert equivalent(r, _with_split_arc(r))


@pytest.mark.parametrize("kind", list(RealizationClass))
def test_classify_canonicals(kind):
    assert classify_octahedron(canonical_octahedron_realization(kind)) == kind


def test_classify_pipeline_output(octa):
    kind = classify_octahedron(realize(octa))
    assert kind == RealizationClass.FOUR_TOUCHING_DISJOINT


def test_classify_rejects_non_octahedron():
    from circlesystems.generators import flower

    _, real = flower(4)
    with pytest.raises(NoClassMatch):
        classify_octahedron(real)


def test_equivalence_relation_properties():
    import random

    from circlesystems.generators import flower, upper_bound_family

    pool = [canonical_octahedron_realization(k) for k in RealizationClass]
    pool.append(realize(octahedron()))
    pool.append(flower(3)[1])
    pool.append(upper_bound_family(4)[1])
    rng = random.Random(5)
    for _ in range(10):
        a, b, c = (rng.choice(pool) for _ in range(3))
        assert equivalent(a, a)
        assert equivalent(a, b) == equivalent(b, a)
        if equivalent(a, b) and equivalent(b, c):
            assert equivalent(a, c)


def test_dual_degrees_invariant_under_rigid_motions():
    import math as m

    r = canonical_octahedron_realization(RealizationClass.THREE_CROSSING)
    theta = 0.83
    cos_t, sin_t = m.cos(theta), m.sin(theta)

    def move(x, y):
        return (
            2.0 * (x * cos_t - y * sin_t) + 5.0,
            2.0 * (x * sin_t + y * cos_t) - 1.0,
        )

    circles = []
    for c in r.circles:
        cx, cy = move(c.cx, c.cy)
        circles.append(Circle(cx, cy, 2.0 * c.r))
    points = [RealPoint(*move(p.x, p.y), p.on, p.kind) for p in r.points]
    arcs = [
        Arc(a.circle, (a.from_angle + theta) % (2 * math.pi),
            (a.to_angle + theta) % (2 * math.pi), a.edge)
        for a in r.arcs
    ]
    moved = Realization(circles, points, arcs)
    d0 = oriented_dual(r)
    d1 = oriented_dual(moved)

    def degree_multiset(d):
        return sorted((d.in_degree(v), d.out_degree(v)) for v in d.nodes)

    assert degree_multiset(d0) == degree_multiset(d1)
    assert digraph_isomorphic(d0, d1)
