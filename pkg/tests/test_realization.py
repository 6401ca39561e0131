import math

import pytest
from hypothesis import given, strategies as st

from circlesystems.embedding import medial
from circlesystems.equivalence import RealizationClass
from circlesystems.errors import NotThreeConnected, TooSmall
from circlesystems.generators import (
    canonical_octahedron_realization,
    cube,
    dodecahedron,
    flower,
    icosahedron,
    octahedron,
    tetrahedron,
)
from circlesystems.isomorphism import graphs_isomorphic
from circlesystems.packing import Circle
from circlesystems.realization import (
    KIND_CROSS,
    KIND_TOUCH,
    Realization,
    circle_count_bounds,
    extract_abstract_graph,
    innermost_face_arc_check,
    realize,
    verify_realization,
)

from conftest import joined_octahedra

CORPUS = [
    ("octahedron", octahedron),
    ("medial-tetrahedron", lambda: medial(tetrahedron())),
    ("medial-cube", lambda: medial(cube())),
    ("medial-octahedron", lambda: medial(octahedron())),
    ("medial-dodecahedron", lambda: medial(dodecahedron())),
    ("medial-icosahedron", lambda: medial(icosahedron())),
]


def test_realize_octahedron(octa):
    r = realize(octa, 1e-9)
    assert len(r.circles) == 4
    assert len(r.points) == 6
    assert len(r.arcs) == 12
    assert all(p.kind == KIND_TOUCH for p in r.points)
    assert verify_realization(r, octa).passed


@pytest.mark.parametrize("name,maker", CORPUS)
def test_pipeline_closure(name, maker):
    g = maker()
    r = realize(g, 1e-9)
    assert verify_realization(r, g, 1e-8).passed
    assert graphs_isomorphic(extract_abstract_graph(r), g)


def test_pipeline_closure_iterated_medial():
    g = medial(medial(cube()))
    assert g.n == 24
    r = realize(g, 1e-9)
    assert verify_realization(r, g, 1e-8).passed
    assert graphs_isomorphic(extract_abstract_graph(r), g)


def test_realize_rejects_not_three_connected():
    with pytest.raises(NotThreeConnected):
        realize(joined_octahedra())


def test_realize_rejects_augmented_octahedron():
    from circlesystems.generators import GADGET, augment_octahedron

    with pytest.raises(NotThreeConnected):
        realize(augment_octahedron(GADGET, 2))


def test_circle_count_equals_gray_faces(octa):
    from circlesystems.coloring import two_color_faces

    r = realize(octa)
    assert len(r.circles) == len(two_color_faces(octa).gray_faces())


def test_circle_angular_order_matches_face_order(octa):
    # points around each circle follow the gray face boundary, possibly
    # reversed as a whole
    from circlesystems.coloring import build_il, two_color_faces
    from circlesystems.realization import point_angle

    coloring = two_color_faces(octa)
    il = build_il(octa, coloring)
    r = realize(octa)
    for ci, face in enumerate(il.gray_faces):
        boundary = octa.face_tails(face)
        by_angle = sorted(
            boundary, key=lambda v: point_angle(r, v, ci)
        )
        k = len(boundary)
        rotations = [boundary[i:] + boundary[:i] for i in range(k)]
        reversed_rotations = [
            list(reversed(rot)) for rot in rotations
        ]
        assert by_angle in rotations + reversed_rotations
        total = sum(a.extent for a in r.arcs_on(ci))
        assert abs(total - 2 * math.pi) < 1e-9


def test_verify_detects_radius_perturbation(octa):
    r = realize(octa, 1e-9)
    bad = Realization(list(r.circles), list(r.points), list(r.arcs))
    c = bad.circles[0]
    bad.circles[0] = Circle(c.cx, c.cy, c.r * (1 + 1e-6))
    report = verify_realization(bad, tol=1e-8)
    assert any(rule == "point-on-two-circles" for rule, _ in report.violations)


def test_verify_canonical_three_crossing(octa):
    r = canonical_octahedron_realization(RealizationClass.THREE_CROSSING)
    report = verify_realization(r, octa)
    assert report.passed
    assert all(p.kind == KIND_CROSS for p in r.points)
    assert report.circle_count == 3


def test_extract_three_crossing_is_octahedron(octa):
    r = canonical_octahedron_realization(RealizationClass.THREE_CROSSING)
    assert graphs_isomorphic(extract_abstract_graph(r), octa)


def test_extract_flower4():
    graph, real = flower(4)
    assert graph.n == 12
    assert graph.is_regular(4)
    assert graphs_isomorphic(extract_abstract_graph(real), graph)


def test_bounds_values():
    b6 = circle_count_bounds(6)
    assert (b6.lower, b6.upper) == (3.0, 4.0)
    b12 = circle_count_bounds(12)
    assert (b12.lower, b12.upper) == (4.0, 8.0)
    b9 = circle_count_bounds(9)
    assert abs(b9.lower - (1 + math.sqrt(37)) / 2) < 1e-15
    assert b9.upper == 6.0


def test_bounds_too_small():
    with pytest.raises(TooSmall):
        circle_count_bounds(5)


@given(st.integers(min_value=6, max_value=100000))
def test_bounds_ordering_and_exactness(n):
    b = circle_count_bounds(n)
    assert b.lower <= b.upper
    for c in range(1, 12):
        exact = c * (c - 1) >= n and 3 * c <= 2 * n
        assert b.contains(c) == exact


@pytest.mark.parametrize("kind", list(RealizationClass))
def test_innermost_face_arc(kind):
    r = canonical_octahedron_realization(kind)
    assert innermost_face_arc_check(r) is True


def test_extract_rejects_coincident_points(octa):
    from circlesystems.errors import DegenerateArc
    from circlesystems.realization import RealPoint

    r = realize(octa)
    p = r.points[0]
    squeezed = Realization(
        list(r.circles),
        list(r.points) + [RealPoint(p.x, p.y, p.on, p.kind)],
        list(r.arcs),
    )
    with pytest.raises(DegenerateArc):
        extract_abstract_graph(squeezed)


def test_verify_bounds_rule(octa):
    r = realize(octa)
    report = verify_realization(r, octa)
    b = circle_count_bounds(len(r.points))
    assert b.contains(report.circle_count)
