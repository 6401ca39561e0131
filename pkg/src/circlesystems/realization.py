"""Systems of circles: assembly, verification, graph extraction, bounds.

A realization is a set of circles together with points (each on exactly two
circles) and arcs (each arc lives on one circle, runs counterclockwise from
one point angle to the next, and carries one graph edge).  The pipeline for
a 3-connected 4-regular input packs the gray-face intersection graph and
reads the touching points back off the packing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .coloring import build_il, il_simplicity, two_color_faces
from .embedding import EmbeddedGraph, connectivity_level
from .errors import (
    DegenerateArc,
    ILNotSimple,
    NoInnermostFace,
    NonPlanarEmbedding,
    NotThreeConnected,
    TooSmall,
)
from .isomorphism import find_isomorphism
from .packing import Circle, pack

KIND_TOUCH = "TOUCH"
KIND_CROSS = "CROSS"

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class RealPoint:
    """Marked point of a realization; ``on`` names its two circles."""

    x: float
    y: float
    on: tuple
    kind: str


@dataclass(frozen=True)
class Arc:
    """Counterclockwise arc on ``circle`` from one point angle to the next,
    carrying graph edge ``edge``."""

    circle: int
    from_angle: float
    to_angle: float
    edge: int

    @property
    def extent(self):
        return (self.to_angle - self.from_angle) % TWO_PI


@dataclass
class Realization:
    circles: list
    points: list
    arcs: list

    def arcs_on(self, circle_id):
        return [a for a in self.arcs if a.circle == circle_id]

    def points_on(self, circle_id):
        return [i for i, p in enumerate(self.points) if circle_id in p.on]


def angle_on(circle: Circle, xy) -> float:
    return math.atan2(xy[1] - circle.cy, xy[0] - circle.cx) % TWO_PI


def point_kind(a: Circle, b: Circle, tol: float = 1e-8) -> str:
    """TOUCH when the circles are externally or internally tangent within
    tolerance, CROSS otherwise."""
    d = math.hypot(a.cx - b.cx, a.cy - b.cy)
    scale = a.r + b.r
    if abs(d - scale) <= tol * scale or abs(d - abs(a.r - b.r)) <= tol * scale:
        return KIND_TOUCH
    return KIND_CROSS


def point_angle(r: Realization, point_id: int, circle_id: int) -> float:
    p = r.points[point_id]
    return angle_on(r.circles[circle_id], (p.x, p.y))


@dataclass(frozen=True)
class BoundsResult:
    """Circle-count bounds for an n-vertex 4-regular planar graph."""

    n: int
    lower: float
    upper: float

    def contains(self, c: int) -> bool:
        # integer forms of c >= (1+sqrt(1+4n))/2 and c <= 2n/3, exact
        return c * (c - 1) >= self.n and 3 * c <= 2 * self.n


def circle_count_bounds(n: int) -> BoundsResult:
    if n < 6:
        raise TooSmall("no simple 4-regular planar graph has fewer than 6 vertices")
    return BoundsResult(
        n=n,
        lower=(1.0 + math.sqrt(1.0 + 4.0 * n)) / 2.0,
        upper=2.0 * n / 3.0,
    )


# -- pipeline ------------------------------------------------------------------


def realize(g: EmbeddedGraph, tol: float = 1e-9) -> Realization:
    """Realize a 3-connected 4-regular plane graph as touching circles.

    One circle per gray face; the touching point of two circles is the graph
    vertex their faces share; the arcs of each circle carry the edges of its
    face in boundary order.
    """
    if not g.is_regular(4):
        raise NotThreeConnected("input must be 4-regular")
    if not g.is_simple():
        raise NotThreeConnected("input must be simple")
    if connectivity_level(g) != 3:
        raise NotThreeConnected("input must be 3-connected")

    coloring = two_color_faces(g)
    il = build_il(g, coloring)
    report = il_simplicity(il)
    if not report.simple:
        raise ILNotSimple(
            "gray-face graph of a 3-connected input must be simple; "
            f"got {report.multi_pairs} / loops {report.selfloop_faces}"
        )

    packing = pack(il.graph, tol)
    circles = list(packing.circles)

    points = []
    for v in range(g.n):
        a, b = il.vertex_gray_pair[v]
        ca, cb = circles[a], circles[b]
        d = math.hypot(cb.cx - ca.cx, cb.cy - ca.cy)
        t = ca.r / d
        points.append(
            RealPoint(
                ca.cx + t * (cb.cx - ca.cx),
                ca.cy + t * (cb.cy - ca.cy),
                (a, b),
                KIND_TOUCH,
            )
        )

    arcs = []
    for i, f in enumerate(il.gray_faces):
        cycle = g.faces[f]
        tails = [g.dart_tail[d] for d in cycle]
        angles = [angle_on(circles[i], (points[v].x, points[v].y)) for v in tails]
        k = len(cycle)
        winding = sum((angles[(j + 1) % k] - angles[j]) % TWO_PI for j in range(k))
        turns = round(winding / TWO_PI)
        if turns == 1:
            for j, d in enumerate(cycle):
                arcs.append(Arc(i, angles[j], angles[(j + 1) % k], g.edge_of_dart[d]))
        elif turns == k - 1:
            for j, d in enumerate(cycle):
                arcs.append(Arc(i, angles[(j + 1) % k], angles[j], g.edge_of_dart[d]))
        else:
            raise NonPlanarEmbedding(
                f"points of circle {i} are not in face-boundary order"
            )
    return Realization(circles, points, arcs)


# -- graph extraction ----------------------------------------------------------


@dataclass(frozen=True)
class ExtractedGraph:
    """Abstract graph of a realization plus the dart <-> arc correspondence."""

    graph: EmbeddedGraph
    dart_arc: tuple  # dart id -> (arc index, traverses_ccw)
    arc_darts: tuple  # arc index -> (ccw dart, cw dart)


def _match_point(points_by_circle, circle_id, angle, tol):
    best, best_gap = None, None
    for pid, a in points_by_circle[circle_id]:
        gap = abs((a - angle + math.pi) % TWO_PI - math.pi)
        if best_gap is None or gap < best_gap:
            best, best_gap = pid, gap
    if best is None or best_gap > max(tol * 10.0, 1e-9):
        raise DegenerateArc(
            f"arc endpoint at angle {angle:.6f} on circle {circle_id} "
            "matches no point"
        )
    return best


def extract_with_arcs(r: Realization, tol: float = 1e-8) -> ExtractedGraph:
    """Embedded abstract graph of a realization.

    Vertices are the points; edges are the arcs; the rotation at each point
    orders the four arc ends by departure tangent, with curvature breaking
    the ties that tangencies create.
    """
    points_by_circle = {}
    for ci in range(len(r.circles)):
        lst = []
        for pid, p in enumerate(r.points):
            if ci in p.on:
                lst.append((pid, angle_on(r.circles[ci], (p.x, p.y))))
        lst.sort(key=lambda t: t[1])
        if len(lst) > 1:
            for (p1, a1), (p2, a2) in zip(lst, lst[1:] + lst[:1]):
                if (a2 - a1) % TWO_PI < tol:
                    raise DegenerateArc(
                        f"points {p1} and {p2} nearly coincide on circle {ci}"
                    )
        points_by_circle[ci] = lst

    # one dart per arc end; 2k and 2k+1 are the ccw and cw traversals
    germs = [[] for _ in r.points]
    dart_arc = []
    arc_darts = []
    for k, arc in enumerate(r.arcs):
        c = r.circles[arc.circle]
        p_from = _match_point(points_by_circle, arc.circle, arc.from_angle, tol)
        p_to = _match_point(points_by_circle, arc.circle, arc.to_angle, tol)
        d_ccw, d_cw = 2 * k, 2 * k + 1
        dart_arc.append((k, True))
        dart_arc.append((k, False))
        arc_darts.append((d_ccw, d_cw))
        # departing ccw from the from-end: tangent angle + pi/2, curving left
        germs[p_from].append((arc.from_angle + math.pi / 2.0, 1.0 / c.r, d_ccw))
        # departing cw from the to-end: tangent angle - pi/2, curving right
        germs[p_to].append((arc.to_angle - math.pi / 2.0, -1.0 / c.r, d_cw))

    dart_tail = [0] * (2 * len(r.arcs))
    rotation = []
    for pid, lst in enumerate(germs):
        if not lst:
            raise DegenerateArc(f"point {pid} has no incident arcs")
        keyed = sorted(
            ((tau % TWO_PI, kappa, d) for (tau, kappa, d) in lst),
        )
        # group near-equal tangents so curvature decides the order
        merged = []
        for tau, kappa, d in keyed:
            if merged and abs(tau - merged[-1][0]) < 1e-6:
                merged[-1][1].append((kappa, d))
            else:
                merged.append((tau, [(kappa, d)]))
        row = []
        for _, group in merged:
            group.sort()
            row.extend(d for _, d in group)
        rotation.append(row)
        for d in row:
            dart_tail[d] = pid

    dart_rev = [0] * (2 * len(r.arcs))
    for d_ccw, d_cw in arc_darts:
        dart_rev[d_ccw] = d_cw
        dart_rev[d_cw] = d_ccw

    graph = EmbeddedGraph(rotation, dart_tail, dart_rev)
    return ExtractedGraph(graph, tuple(dart_arc), tuple(arc_darts))


def extract_abstract_graph(r: Realization, tol: float = 1e-8) -> EmbeddedGraph:
    return extract_with_arcs(r, tol).graph


def face_signed_areas(r: Realization, ext: ExtractedGraph):
    """Signed area of every face of the extracted embedding.

    With the face-on-the-right convention, bounded faces come out negative
    and the outer face positive.
    """
    g = ext.graph
    areas = []
    for cycle in g.faces:
        total = 0.0
        for d in cycle:
            arc_idx, forward = ext.dart_arc[d]
            arc = r.arcs[arc_idx]
            c = r.circles[arc.circle]
            a0, a1 = arc.from_angle, arc.to_angle
            sweep = arc.extent if forward else -arc.extent
            if forward:
                start, end = a0, a1
            else:
                start, end = a1, a0
            sx = c.cx + c.r * math.cos(start)
            sy = c.cy + c.r * math.sin(start)
            ex = c.cx + c.r * math.cos(end)
            ey = c.cy + c.r * math.sin(end)
            total += 0.5 * (c.cx * (ey - sy) - c.cy * (ex - sx))
            total += 0.5 * c.r * c.r * sweep
        areas.append(total)
    return areas


def outer_face_of(r: Realization, ext: ExtractedGraph) -> int:
    areas = face_signed_areas(r, ext)
    return max(range(len(areas)), key=lambda f: areas[f])


# -- verification --------------------------------------------------------------


@dataclass
class VerifyReport:
    violations: list = field(default_factory=list)
    circle_count: int = 0
    point_count: int = 0

    @property
    def passed(self):
        return not self.violations

    def add(self, rule, detail):
        self.violations.append((rule, detail))


def verify_realization(r: Realization, g: EmbeddedGraph | None = None,
                       tol: float = 1e-8) -> VerifyReport:
    """Check the structural rules of a system of circles.

    Violations are reported, not raised: every point on exactly two circles,
    at least three points per circle, at most two shared points per circle
    pair, arcs partitioning each circle, circle count within bounds, and
    (optionally) the abstract graph matching ``g``.
    """
    report = VerifyReport(
        circle_count=len(r.circles), point_count=len(r.points)
    )

    for pid, p in enumerate(r.points):
        hits = []
        for ci, c in enumerate(r.circles):
            dist = math.hypot(p.x - c.cx, p.y - c.cy)
            if abs(dist - c.r) <= tol * c.r:
                hits.append(ci)
        if len(hits) != 2 or set(hits) != set(p.on) or p.on[0] == p.on[1]:
            report.add(
                "point-on-two-circles",
                f"point {pid} lies on circles {hits}, declared {p.on}",
            )
            continue
        if p.kind != point_kind(r.circles[p.on[0]], r.circles[p.on[1]], tol):
            report.add(
                "point-kind",
                f"point {pid} declared {p.kind}, circles say otherwise",
            )

    pair_points = {}
    for ci in range(len(r.circles)):
        pts = r.points_on(ci)
        if len(pts) < 3:
            report.add(
                "three-points-per-circle",
                f"circle {ci} carries {len(pts)} points",
            )
    for pid, p in enumerate(r.points):
        a, b = p.on
        if a != b:
            key = (a, b) if a < b else (b, a)
            pair_points.setdefault(key, []).append(pid)
    for key, pts in pair_points.items():
        if len(pts) > 2:
            report.add(
                "two-common-points",
                f"circles {key} share points {pts}",
            )

    ang_tol = max(tol, 1e-12)
    for ci in range(len(r.circles)):
        angles = sorted(
            point_angle(r, pid, ci) for pid in r.points_on(ci)
        )
        if not angles:
            continue
        expected = set()
        k = len(angles)
        for j in range(k):
            expected.add((angles[j], angles[(j + 1) % k]))
        arcs = r.arcs_on(ci)
        if len(arcs) != k:
            report.add(
                "arcs-partition-circle",
                f"circle {ci} has {len(arcs)} arcs for {k} points",
            )
            continue
        for a in arcs:
            ok = any(
                abs((a.from_angle - e0 + math.pi) % TWO_PI - math.pi) <= ang_tol
                and abs((a.to_angle - e1 + math.pi) % TWO_PI - math.pi) <= ang_tol
                for (e0, e1) in expected
            )
            if not ok:
                report.add(
                    "arcs-partition-circle",
                    f"arc {a} does not join consecutive points of circle {ci}",
                )

    n = len(r.points)
    if n >= 6:
        bounds = circle_count_bounds(n)
        if not bounds.contains(len(r.circles)):
            report.add(
                "circle-count-bounds",
                f"{len(r.circles)} circles outside "
                f"[{bounds.lower:.3f}, {bounds.upper:.3f}] for n={n}",
            )
    else:
        report.add("circle-count-bounds", f"only {n} points; need at least 6")

    if g is not None and not report.violations:
        extracted = extract_abstract_graph(r, tol)
        if find_isomorphism(
            extracted.n, extracted.edges(), g.n, g.edges()
        ) is None:
            report.add("graph-match", "abstract graph differs from the input graph")
    return report


# -- innermost-face arc property ----------------------------------------------


def innermost_face_arc_check(r: Realization, tol: float = 1e-8) -> bool:
    """For an octahedron realization: the interior face disjoint from the
    outer face has at least one bounding arc of central angle below pi."""
    ext = extract_with_arcs(r, tol)
    g = ext.graph
    outer = outer_face_of(r, ext)
    outer_vertices = set(g.face_tails(outer))
    candidates = []
    for f in range(g.face_count):
        if f == outer:
            continue
        if not outer_vertices & set(g.face_tails(f)):
            candidates.append(f)
    if len(candidates) != 1:
        raise NoInnermostFace(
            f"expected one face disjoint from the outer face, found {candidates}"
        )
    face = candidates[0]
    for d in g.faces[face]:
        arc_idx, _ = ext.dart_arc[d]
        if r.arcs[arc_idx].extent < math.pi:
            return True
    return False
