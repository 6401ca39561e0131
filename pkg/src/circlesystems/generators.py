"""Reference graphs and reference realizations.

Provides the embedded platonic solids, the octahedron's three analytic
realizations, the two extremal circle-count families, the gadget fragments
with two degree-2 endpoints, and the augmented octahedra obtained by
attaching gadgets along subdivided edges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import realization as rz
from .embedding import EmbeddedGraph, build_embedding, dual
from .equivalence import RealizationClass
from .errors import DegenerateRadius
from .packing import Circle, pack

# -- platonic solids (hand-checked rotation systems) --------------------------


def tetrahedron() -> EmbeddedGraph:
    return build_embedding(
        [
            [1, 3, 2],
            [2, 3, 0],
            [0, 3, 1],
            [2, 0, 1],
        ]
    )


def cube() -> EmbeddedGraph:
    return build_embedding(
        [
            [1, 4, 3],
            [2, 5, 0],
            [3, 6, 1],
            [0, 7, 2],
            [5, 7, 0],
            [6, 4, 1],
            [7, 5, 2],
            [6, 3, 4],
        ]
    )


def octahedron() -> EmbeddedGraph:
    """The unique 4-regular fully-triangulated plane graph on 6 vertices."""
    return build_embedding(
        [
            [1, 3, 4, 2],
            [2, 5, 3, 0],
            [0, 4, 5, 1],
            [5, 4, 0, 1],
            [5, 2, 0, 3],
            [2, 4, 3, 1],
        ]
    )


def icosahedron() -> EmbeddedGraph:
    # vertex 0 at the top, upper ring 1..5, lower ring 6..10, vertex 11 last
    def up(i):
        return (i - 1) % 5 + 1

    def lo(j):
        return (j - 1) % 5 + 6

    lists = [[1, 2, 3, 4, 5]]
    for i in range(1, 6):
        lists.append([lo(i - 1), lo(i), up(i + 1), 0, up(i - 1)])
    for j in range(1, 6):
        lists.append([lo(j - 1), 11, lo(j + 1), up(j + 1), up(j)])
    lists.append([10, 9, 8, 7, 6])
    return build_embedding(lists)


def dodecahedron() -> EmbeddedGraph:
    return dual(icosahedron())


# -- canonical octahedron realizations ----------------------------------------

_SODDY_INNER = (2.0 * math.sqrt(3.0) - 3.0) / 3.0
_SODDY_OUTER = (2.0 * math.sqrt(3.0) + 3.0) / 3.0


def _circle_intersections(a: Circle, b: Circle):
    dx, dy = b.cx - a.cx, b.cy - a.cy
    d = math.hypot(dx, dy)
    x = (d * d + a.r * a.r - b.r * b.r) / (2.0 * d)
    h = math.sqrt(max(0.0, a.r * a.r - x * x))
    ux, uy = dx / d, dy / d
    px, py = a.cx + x * ux, a.cy + x * uy
    return (px - h * uy, py + h * ux), (px + h * uy, py - h * ux)


def _tangency_point(a: Circle, b: Circle):
    dx, dy = b.cx - a.cx, b.cy - a.cy
    d = math.hypot(dx, dy)
    if abs(d - (a.r + b.r)) <= abs(abs(a.r - b.r) - d):
        t = a.r / d  # external tangency: between the centers
    elif a.r >= b.r:
        t = a.r / d  # a contains b: past b's center
    else:
        t = -a.r / d  # b contains a: on the far side of a
    return (a.cx + t * dx, a.cy + t * dy)


def _assemble_by_angles(circles, point_data):
    """Build a realization whose arcs join angularly consecutive points.

    ``point_data`` holds (x, y, (ca, cb), kind) tuples; every arc gets a
    fresh edge id.
    """
    points = [rz.RealPoint(x, y, pair, kind) for (x, y, pair, kind) in point_data]
    arcs = []
    edge_id = 0
    for ci in range(len(circles)):
        on_circle = [
            (rz.angle_on(circles[ci], (p.x, p.y)), idx)
            for idx, p in enumerate(points)
            if ci in p.on
        ]
        on_circle.sort()
        k = len(on_circle)
        for j in range(k):
            a0 = on_circle[j][0]
            a1 = on_circle[(j + 1) % k][0]
            arcs.append(rz.Arc(ci, a0, a1, edge_id))
            edge_id += 1
    return rz.Realization(list(circles), points, arcs)


def canonical_octahedron_realization(kind: RealizationClass) -> rz.Realization:
    """Analytic coordinates for the three octahedron realization classes."""
    s3 = math.sqrt(3.0)
    if kind == RealizationClass.THREE_CROSSING:
        circles = [
            Circle(0.0, 0.0, 1.0),
            Circle(1.0, 0.0, 1.0),
            Circle(0.5, s3 / 2.0, 1.0),
        ]
        data = []
        for i in range(3):
            for j in range(i + 1, 3):
                p, q = _circle_intersections(circles[i], circles[j])
                data.append((p[0], p[1], (i, j), rz.KIND_CROSS))
                data.append((q[0], q[1], (i, j), rz.KIND_CROSS))
        return _assemble_by_angles(circles, data)

    units = [Circle(0.0, 0.0, 1.0), Circle(2.0, 0.0, 1.0), Circle(1.0, s3, 1.0)]
    center = (1.0, s3 / 3.0)
    if kind == RealizationClass.FOUR_TOUCHING_DISJOINT:
        fourth = Circle(center[0], center[1], _SODDY_INNER)
    elif kind == RealizationClass.FOUR_TOUCHING_NESTED:
        fourth = Circle(center[0], center[1], _SODDY_OUTER)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    circles = units + [fourth]
    data = []
    for i in range(3):
        for j in range(i + 1, 3):
            x, y = _tangency_point(circles[i], circles[j])
            data.append((x, y, (i, j), rz.KIND_TOUCH))
    for i in range(3):
        x, y = _tangency_point(circles[i], fourth)
        data.append((x, y, (i, 3), rz.KIND_TOUCH))
    return _assemble_by_angles(circles, data)


# -- extremal families ---------------------------------------------------------


def flower(c: int, radius: float = 1.3):
    """c equal circles on a regular c-gon, every pair crossing twice.

    The induced graph has c*(c-1) vertices, so the circle count meets the
    lower bound exactly.  The radius is nudged upward if three circles ever
    pass through a common point.
    """
    if c < 3:
        raise ValueError("flower needs at least 3 circles")
    r = radius
    for _ in range(40):
        circles = [
            Circle(math.cos(2.0 * math.pi * k / c), math.sin(2.0 * math.pi * k / c), r)
            for k in range(c)
        ]
        data = []
        for i in range(c):
            for j in range(i + 1, c):
                p, q = _circle_intersections(circles[i], circles[j])
                data.append((p[0], p[1], (i, j), rz.KIND_CROSS))
                data.append((q[0], q[1], (i, j), rz.KIND_CROSS))
        if _has_near_coincidence(data):
            r += 1e-3
            continue
        real = _assemble_by_angles(circles, data)
        graph = rz.extract_abstract_graph(real)
        return graph, real
    raise DegenerateRadius("could not avoid triple concurrences")


def _has_near_coincidence(data, tol=1e-9):
    pts = [(x, y) for (x, y, _, _) in data]
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if math.hypot(pts[i][0] - pts[j][0], pts[i][1] - pts[j][1]) < tol:
                return True
    return False


def prism(k: int) -> EmbeddedGraph:
    """k-gonal prism: two concentric k-cycles joined by spokes (3-regular)."""
    if k < 3:
        raise ValueError("prism needs k >= 3")
    lists = []
    for i in range(k):
        lists.append([(i + 1) % k, k + i, (i - 1) % k])
    for i in range(k):
        lists.append([i, k + (i + 1) % k, k + (i - 1) % k])
    return build_embedding(lists)


def upper_bound_family(c: int):
    """Coin configuration of c circles, each carrying exactly 3 points.

    Packs a 3-connected cubic planar graph (tetrahedron for c=4, otherwise
    the (c/2)-prism); the induced graph has n = 3c/2 vertices, so the circle
    count meets the upper bound exactly.
    """
    if c < 4 or c % 2 != 0:
        raise ValueError("upper_bound_family needs an even c >= 4")
    base = tetrahedron() if c == 4 else prism(c // 2)
    p = pack(base, 1e-9)
    circles = list(p.circles)
    data = []
    for u, v in base.edges():
        x, y = _tangency_point(circles[u], circles[v])
        data.append((x, y, (u, v), rz.KIND_TOUCH))
    real = _assemble_by_angles(circles, data)
    graph = rz.extract_abstract_graph(real)
    return graph, real


# -- gadget fragments ----------------------------------------------------------


@dataclass(frozen=True)
class GadgetFragment:
    """Attachable piece with exactly two degree-2 endpoint vertices.

    ``skeleton`` maps role names to vertex ids; ``loop_vertex_sets`` holds
    the vertex sets of the hanging subgraphs (endpoints excluded).
    """

    graph: EmbeddedGraph
    endpoints: tuple
    skeleton: dict
    loop_vertex_sets: tuple


def _loop_subgraph_rotation():
    """Octahedron with one outer edge subdivided once.

    Returns (rotation lists over local ids 0..6, merge vertex id 6); the
    merge vertex has degree 2 and ends up identified with a skeleton vertex.
    """
    lists = octahedron().to_neighbor_lists()
    # split the outer edge (0, 1) through a new vertex 6
    lists[0] = [6 if w == 1 else w for w in lists[0]]
    lists[1] = [6 if w == 0 else w for w in lists[1]]
    lists.append([0, 1])
    return lists, 6


def gadget() -> GadgetFragment:
    """Fragment whose skeleton is two triangles sharing the middle vertex,
    with a hanging subgraph merged into each upper corner."""
    # ids: 0 = endpoint 1, 1 = endpoint 2, 2 = middle, 3 = corner 1,
    # 4 = corner 2, 5..10 = first loop, 11..16 = second loop
    loop_rot, merge = _loop_subgraph_rotation()

    def relabel(rot, offset, merge_to):
        table = {}
        nxt = offset
        for v in range(len(rot)):
            if v == merge:
                table[v] = merge_to
            else:
                table[v] = nxt
                nxt += 1
        return {table[v]: [table[w] for w in rot[v]] for v in range(len(rot))}

    left = relabel(loop_rot, 5, 3)
    right = relabel(loop_rot, 11, 4)

    lists = [[] for _ in range(17)]
    lists[0] = [2, 3]
    lists[1] = [4, 2]
    lists[2] = [1, 4, 3, 0]
    # loop neighbors keep their internal order; skeleton darts flank them
    lists[3] = left[3] + [0, 2]
    lists[4] = right[4] + [2, 1]
    for v, row in left.items():
        if v != 3:
            lists[v] = row
    for v, row in right.items():
        if v != 4:
            lists[v] = row

    graph = build_embedding(lists)
    return GadgetFragment(
        graph=graph,
        endpoints=(0, 1),
        skeleton={"v1": 0, "v2": 1, "w": 2, "w1": 3, "w2": 4},
        loop_vertex_sets=(frozenset(range(5, 11)), frozenset(range(11, 17))),
    )


def _biloop_rotation():
    """Octahedron with one outer vertex split into an adjacent degree-3 pair.

    Local ids 0..6; the split pair is (0, 6) and carries the new edge.
    Every other vertex keeps degree 4.
    """
    base = octahedron().to_neighbor_lists()
    # split vertex 0 (rotation [1, 3, 4, 2]) into 0 -> [1, 3, 6], 6 -> [4, 2, 0]
    lists = [row[:] for row in base]
    lists[0] = [1, 3, 6]
    lists.append([4, 2, 0])
    for v in (4, 2):
        lists[v] = [6 if w == 0 else w for w in lists[v]]
    return lists


def bigadget() -> GadgetFragment:
    """Cut-vertex-free variant: each hanging subgraph is biconnected and
    attaches through a pair of adjacent degree-3 vertices."""
    # ids: 0 = endpoint 1, 1 = endpoint 2, 2 = middle; biloop 1 on 3..9 with
    # attachment pair (3, 4); biloop 2 on 10..16 with pair (10, 11)
    biloop = _biloop_rotation()

    def relabel(offset, pair_to):
        table = {0: pair_to[0], 6: pair_to[1]}
        nxt = offset
        for v in range(1, 6):
            table[v] = nxt
            nxt += 1
        return {table[v]: [table[w] for w in biloop[v]] for v in range(7)}

    left = relabel(5, (3, 4))
    right = relabel(12, (10, 11))

    lists = [[] for _ in range(17)]
    lists[0] = [2, 3]
    lists[1] = [10, 2]
    lists[2] = [1, 11, 4, 0]
    # the fresh darts go into the corners the biloop's outer face exposes
    lists[3] = left[3] + [0]
    lists[4] = left[4][:2] + [2] + left[4][2:]
    lists[10] = right[10] + [1]
    lists[11] = right[11][:2] + [2] + right[11][2:]
    for v, row in left.items():
        if v not in (3, 4):
            lists[v] = row
    for v, row in right.items():
        if v not in (10, 11):
            lists[v] = row

    graph = build_embedding(lists)
    return GadgetFragment(
        graph=graph,
        endpoints=(0, 1),
        skeleton={
            "v1": 0,
            "v2": 1,
            "w": 2,
            "w1": 3,
            "w1p": 4,
            "w2": 10,
            "w2p": 11,
        },
        loop_vertex_sets=(frozenset(range(3, 10)), frozenset(range(10, 17))),
    )


GADGET = "GADGET"
BIGADGET = "BIGADGET"


def _attachment_blocks(pairs_per_edge):
    """Endpoint slot pairs within a run of 4*pairs_per_edge path vertices.

    The 8-slot interlocking pattern (1,6),(2,5),(3,8),(4,7) repeats; an odd
    leftover pair attaches as a plain nested (1,4),(2,3) block.  Slots are
    1-based; the second element of each tuple marks the side of the path.
    """
    blocks = []
    base = 0
    for _ in range(pairs_per_edge // 2):
        blocks.append(((base + 1, base + 6), "L"))
        blocks.append(((base + 2, base + 5), "L"))
        blocks.append(((base + 3, base + 8), "R"))
        blocks.append(((base + 4, base + 7), "R"))
        base += 8
    if pairs_per_edge % 2 == 1:
        blocks.append(((base + 1, base + 4), "L"))
        blocks.append(((base + 2, base + 3), "L"))
    return blocks


def augment_octahedron(kind: str, pairs_per_edge: int = 2) -> EmbeddedGraph:
    """Subdivide every octahedron edge and attach gadget fragments.

    Each edge receives 4*pairs_per_edge internal vertices and twice that
    many fragment endpoints; the resulting graph is 4-regular and planar.
    With plain gadgets it has cut vertices; with bigadgets it is biconnected
    but not 3-connected.
    """
    if pairs_per_edge < 2:
        raise ValueError("pairs_per_edge must be >= 2")
    if kind not in (GADGET, BIGADGET):
        raise ValueError(f"unknown kind {kind!r}")
    fragment = gadget() if kind == GADGET else bigadget()

    base = octahedron()
    slots = 4 * pairs_per_edge
    blocks = _attachment_blocks(pairs_per_edge)

    frag_rot = fragment.graph.to_neighbor_lists()
    v1, v2 = fragment.endpoints
    interior = [v for v in range(fragment.graph.n) if v not in (v1, v2)]

    lists = []
    for u in range(base.n):
        row = []
        for d in base.rotation[u]:
            eid = base.edge_of_dart[d]
            rep, _ = base.edge_darts[eid]
            first = base.n + eid * slots
            row.append(first if d == rep else first + slots - 1)
        lists.append(row)
    for _ in range(12 * slots):
        lists.append(None)

    next_id = base.n + 12 * slots

    def add_fragment(za, zb, side):
        """Splice one fragment between path vertices za < zb."""
        nonlocal next_id
        table = {v1: za, v2: zb}
        for v in interior:
            table[v] = next_id
            next_id += 1
            lists.append(None)
        for v in interior:
            lists[table[v]] = [table[w] for w in frag_rot[v]]
            if side == "R":
                lists[table[v]].reverse()
        ends = {}
        for z, endpoint in ((za, v1), (zb, v2)):
            a, b = (table[w] for w in frag_rot[endpoint])
            ends[z] = (a, b) if side == "L" else (b, a)
        return ends

    for eid in range(12):
        rep, _ = base.edge_darts[eid]
        u, v = base.dart_tail[rep], base.dart_head[rep]
        first = base.n + eid * slots
        path = [u] + [first + j for j in range(slots)] + [v]
        gadget_ends = {}
        for (sa, sb), side in blocks:
            za, zb = first + sa - 1, first + sb - 1
            ends = add_fragment(za, zb, side)
            gadget_ends.update({z: (side, darts) for z, darts in ends.items()})
        for j in range(slots):
            z = first + j
            prev_v, next_v = path[j], path[j + 2]
            side, (g1, g2) = gadget_ends[z]
            if side == "L":
                lists[z] = [next_v, g1, g2, prev_v]
            else:
                lists[z] = [next_v, prev_v, g1, g2]

    return build_embedding(lists)
