import pytest
from hypothesis import given, strategies as st

from circlesystems.embedding import (
    build_embedding,
    connectivity_level,
    dual,
    medial,
    subdivide_edges,
)
from circlesystems.errors import Disconnected, MalformedRotation, NonPlanarEmbedding
from circlesystems.generators import (
    cube,
    dodecahedron,
    icosahedron,
    octahedron,
    tetrahedron,
)
from circlesystems.isomorphism import graphs_isomorphic

from conftest import brute_force_connectivity, joined_octahedra, pinched_octahedra

PLATONICS = [tetrahedron, cube, octahedron, dodecahedron, icosahedron]


def test_octahedron_counts(octa):
    assert octa.n == 6
    assert octa.edge_count == 12
    assert octa.face_count == 8
    assert all(len(cycle) == 3 for cycle in octa.faces)


def test_doubled_square_accepted_only_without_simple_flag():
    doubled = [[1, 3, 3, 1], [2, 0, 0, 2], [3, 1, 1, 3], [0, 2, 2, 0]]
    g = build_embedding(doubled)
    assert g.n == 4 and g.edge_count == 8 and g.face_count == 6
    with pytest.raises(MalformedRotation):
        build_embedding(doubled, require_simple=True)


def test_asymmetric_adjacency_rejected():
    with pytest.raises(MalformedRotation):
        build_embedding([[1], [0, 2], [1, 0]])


def test_twisted_embedding_rejected():
    # K5-free but genus-1 rotation of K3,3-ish data: scrambled octahedron
    lists = octahedron().to_neighbor_lists()
    lists[0] = [lists[0][0], lists[0][2], lists[0][1], lists[0][3]]
    with pytest.raises(NonPlanarEmbedding):
        build_embedding(lists)


def test_face_tracing_covers_each_dart_once():
    g = octahedron()
    covered = sorted(d for cycle in g.faces for d in cycle)
    assert covered == list(range(2 * g.edge_count))


@pytest.mark.parametrize("maker", PLATONICS)
def test_degree_sum_twice_edges(maker):
    g = maker()
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.edge_count


def test_connectivity_octahedron(octa):
    assert connectivity_level(octa) == 3


def test_connectivity_cut_vertex():
    assert connectivity_level(joined_octahedra()) == 1


def test_connectivity_disconnected():
    two_triangles = [[1, 2], [2, 0], [0, 1], [4, 5], [5, 3], [3, 4]]
    assert connectivity_level(build_embedding(two_triangles)) == 0


@pytest.mark.parametrize(
    "maker",
    PLATONICS + [joined_octahedra, pinched_octahedra],
)
def test_connectivity_matches_brute_force(maker):
    g = maker()
    assert g.n <= 30
    assert connectivity_level(g) == brute_force_connectivity(g)


def test_dual_octahedron_is_cube(octa):
    d = dual(octa)
    assert d.n == 8 and d.edge_count == 12
    assert graphs_isomorphic(d, cube())


def test_dual_involution(octa):
    assert graphs_isomorphic(dual(dual(octa)), octa)


def test_dual_preserves_edge_count():
    for maker in PLATONICS:
        g = maker()
        assert dual(g).edge_count == g.edge_count


def test_dual_of_four_regular_is_bipartite(octa):
    d = dual(octa)
    color = {0: 0}
    stack = [0]
    adj = d.adjacency_sets()
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in color:
                color[w] = 1 - color[u]
                stack.append(w)
            else:
                assert color[w] != color[u]


def test_dual_requires_connected():
    two_triangles = [[1, 2], [2, 0], [0, 1], [4, 5], [5, 3], [3, 4]]
    with pytest.raises(Disconnected):
        dual(build_embedding(two_triangles))


def test_medial_tetrahedron_is_octahedron(octa):
    assert graphs_isomorphic(medial(tetrahedron()), octa)


def test_medial_cube_counts():
    m = medial(cube())
    assert m.n == 12 and m.edge_count == 24
    assert m.is_regular(4)


def test_medial_dodecahedron_three_connected():
    m = medial(dodecahedron())
    assert m.n == 30
    assert m.is_regular(4)
    assert connectivity_level(m) == 3


@pytest.mark.parametrize("maker", PLATONICS)
def test_medial_always_four_regular(maker):
    assert medial(maker()).is_regular(4)


def test_subdivide_counts(octa):
    assert subdivide_edges(octa, 8).n == 6 + 12 * 8


def test_subdivide_zero_is_identity(octa):
    assert subdivide_edges(octa, 0) == octa


def test_subdivide_degrees(octa):
    s = subdivide_edges(octa, 1)
    assert s.n == 18
    assert all(s.degree(v) == 4 for v in range(6))
    assert all(s.degree(v) == 2 for v in range(6, 18))


@given(st.integers(min_value=0, max_value=5))
def test_subdivide_vertex_count_formula(k):
    g = tetrahedron()
    assert subdivide_edges(g, k).n == g.n + k * g.edge_count
