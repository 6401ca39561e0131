"""Equivalence of realizations via the oriented dual digraph.

Degree-2 points are smoothed away, the faces of the arrangement become
digraph nodes, and every arc contributes one edge directed from the face on
the interior side of its circle to the face on the exterior side.  Two
realizations are equivalent when these digraphs are isomorphic.  The node
for the outer face is omitted from the node list but stays addressable as
``outer`` so that edge counts per node always match face lengths; the
isomorphism maps outer to outer.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import NoClassMatch
from .isomorphism import digraph_isomorphism
from .realization import (
    Arc,
    RealPoint,
    Realization,
    extract_with_arcs,
    outer_face_of,
    point_angle,
)


class RealizationClass(enum.Enum):
    THREE_CROSSING = "THREE_CROSSING"
    FOUR_TOUCHING_DISJOINT = "FOUR_TOUCHING_DISJOINT"
    FOUR_TOUCHING_NESTED = "FOUR_TOUCHING_NESTED"


@dataclass(frozen=True)
class OrientedDual:
    """Directed dual of a realization's arrangement.

    ``edges`` holds (tail face, head face, arc id) triples for every arc,
    including those bordering the outer face; ``nodes`` excludes the outer
    face id, which is kept separately in ``outer``.
    """

    nodes: tuple
    edges: tuple
    outer: int

    def out_degree(self, node):
        return sum(1 for t, _, _ in self.edges if t == node)

    def in_degree(self, node):
        return sum(1 for _, h, _ in self.edges if h == node)

    def out_degree_counts(self):
        counts = {}
        for node in self.nodes:
            d = self.out_degree(node)
            counts[d] = counts.get(d, 0) + 1
        return counts


def smooth_degree_two(r: Realization) -> Realization:
    """Remove points with exactly two arc ends, merging their arcs.

    Such points sit in the interior of a single circle's boundary; circles
    are unchanged and surviving points keep their coordinates.  Merged arcs
    get fresh edge ids.
    """
    end_count = [0] * len(r.points)
    by_circle = {}
    for ci in range(len(r.circles)):
        by_circle[ci] = sorted(
            ((point_angle(r, pid, ci), pid) for pid in r.points_on(ci))
        )
    for arc in r.arcs:
        # each arc contributes one end at each endpoint angle
        for angle in (arc.from_angle, arc.to_angle):
            pid = _nearest(by_circle[arc.circle], angle)
            end_count[pid] += 1

    keep = [pid for pid in range(len(r.points)) if end_count[pid] != 2]
    keep_set = set(keep)

    points = [
        RealPoint(r.points[pid].x, r.points[pid].y, r.points[pid].on,
                  r.points[pid].kind)
        for pid in keep
    ]
    arcs = []
    edge_id = 0
    for ci in range(len(r.circles)):
        kept_here = [
            (a, pid) for (a, pid) in by_circle[ci] if pid in keep_set
        ]
        if not kept_here:
            raise ValueError(f"circle {ci} would lose all its points")
        k = len(kept_here)
        for j in range(k):
            a0 = kept_here[j][0]
            a1 = kept_here[(j + 1) % k][0]
            arcs.append(Arc(ci, a0, a1, edge_id))
            edge_id += 1
    return Realization(list(r.circles), points, arcs)


def _nearest(angle_list, angle):
    best, best_gap = None, None
    for a, pid in angle_list:
        gap = abs((a - angle + math.pi) % (2.0 * math.pi) - math.pi)
        if best_gap is None or gap < best_gap:
            best, best_gap = pid, gap
    return best


def oriented_dual(r: Realization) -> OrientedDual:
    """Faces of the arrangement with one directed edge per arc.

    A counterclockwise traversal of an arc keeps its circle's interior on
    the left, so the face on that dart's side is the exterior side: the
    edge runs from the face of the clockwise dart to the face of the
    counterclockwise dart.
    """
    ext = extract_with_arcs(r)
    g = ext.graph
    outer = outer_face_of(r, ext)
    edges = []
    for arc_idx, (d_ccw, d_cw) in enumerate(ext.arc_darts):
        head = g.dart_face[d_ccw]
        tail = g.dart_face[d_cw]
        edges.append((tail, head, arc_idx))
    nodes = tuple(f for f in range(g.face_count) if f != outer)
    return OrientedDual(nodes=nodes, edges=tuple(edges), outer=outer)


def digraph_isomorphic(d1: OrientedDual, d2: OrientedDual) -> bool:
    mapping = digraph_isomorphism(
        list(d1.nodes) + [d1.outer],
        [(t, h) for t, h, _ in d1.edges],
        list(d2.nodes) + [d2.outer],
        [(t, h) for t, h, _ in d2.edges],
        forced=[(d1.outer, d2.outer)],
    )
    return mapping is not None


def equivalent(r1: Realization, r2: Realization) -> bool:
    """Smooth both realizations, build oriented duals, test isomorphism."""
    d1 = oriented_dual(smooth_degree_two(r1))
    d2 = oriented_dual(smooth_degree_two(r2))
    return digraph_isomorphic(d1, d2)


def classify_octahedron(r: Realization) -> RealizationClass:
    """Match an octahedron realization against the three known classes."""
    from . import generators

    d = oriented_dual(smooth_degree_two(r))
    for kind in RealizationClass:
        canon = generators.canonical_octahedron_realization(kind)
        if digraph_isomorphic(d, oriented_dual(canon)):
            return kind
    raise NoClassMatch("realization matches none of the octahedron classes")
