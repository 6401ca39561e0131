"""Bipartite face 2-coloring and the intersection graph of gray faces.

For an Eulerian plane graph the dual is bipartite, so the faces split into
two classes; the outer face is fixed white.  The gray-face intersection
graph has one vertex per gray face and, for a 4-regular input, exactly one
edge per graph vertex (its two gray corners).  The embedding is inherited:
around each gray face the incident edges follow the face's boundary order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .embedding import EmbeddedGraph
from .errors import NotBipartiteDual, VertexNotOnTwoGrayFaces

GRAY = "GRAY"
WHITE = "WHITE"


@dataclass(frozen=True)
class TwoColoring:
    """Face id -> GRAY/WHITE with the outer face white."""

    colors: tuple
    outer_face: int

    def gray_faces(self):
        return [f for f, c in enumerate(self.colors) if c == GRAY]

    def white_faces(self):
        return [f for f, c in enumerate(self.colors) if c == WHITE]


def two_color_faces(g: EmbeddedGraph) -> TwoColoring:
    """Proper 2-coloring of the face adjacency graph, outer face white.

    Raises NotBipartiteDual when the face graph has an odd cycle, which
    happens exactly when the input is not Eulerian.
    """
    f_count = g.face_count
    colors = [None] * f_count
    colors[g.outer_face] = WHITE
    queue = deque([g.outer_face])
    while queue:
        f = queue.popleft()
        other = GRAY if colors[f] == WHITE else WHITE
        for d in g.faces[f]:
            nb = g.dart_face[g.dart_rev[d]]
            if colors[nb] is None:
                colors[nb] = other
                queue.append(nb)
            elif colors[nb] == colors[f]:
                raise NotBipartiteDual(
                    f"faces {f} and {nb} share an edge but need equal colors"
                )
    if any(c is None for c in colors):
        raise NotBipartiteDual("face adjacency graph is disconnected")
    return TwoColoring(tuple(colors), g.outer_face)


@dataclass
class ILGraph:
    """Intersection graph of gray faces with its inherited embedding.

    ``graph`` vertex i corresponds to gray face ``gray_faces[i]``; edge j
    corresponds to graph vertex ``edge_vertex[j]`` of the source graph.
    """

    graph: EmbeddedGraph
    gray_faces: list
    edge_vertex: list
    vertex_gray_pair: list
    multiplicity: dict = field(default_factory=dict)
    selfloops: int = 0


@dataclass(frozen=True)
class SimplicityReport:
    simple: bool
    multi_pairs: tuple
    selfloop_faces: tuple


def build_il(g: EmbeddedGraph, coloring: TwoColoring) -> ILGraph:
    """Construct the gray-face intersection graph of a 4-regular input.

    Every graph vertex lies on exactly two gray corners; these become one
    edge of the result.  Kept even when multiplicities exceed one so that
    non-3-connected inputs can be inspected.
    """
    gray = coloring.gray_faces()
    il_index = {f: i for i, f in enumerate(gray)}

    # corner j of face f sits at the tail of the j-th dart of its cycle
    gray_corners = [[] for _ in range(g.n)]
    for f in gray:
        for j, d in enumerate(g.faces[f]):
            gray_corners[g.dart_tail[d]].append((f, j))

    for v, cs in enumerate(gray_corners):
        if len(cs) != 2:
            raise VertexNotOnTwoGrayFaces(
                f"vertex {v} lies on {len(cs)} gray corners, expected 2"
            )

    # dart pair (2v, 2v+1) realizes the edge of graph vertex v, one dart at
    # each of its two gray corners (ordered by face id, then corner index)
    corner_dart = {}
    dart_tail = [0] * (2 * g.n)
    dart_rev = [0] * (2 * g.n)
    for v, cs in enumerate(gray_corners):
        cs_sorted = sorted(cs)
        for k, (f, j) in enumerate(cs_sorted):
            d = 2 * v + k
            corner_dart[(f, j)] = d
            dart_tail[d] = il_index[f]
        dart_rev[2 * v] = 2 * v + 1
        dart_rev[2 * v + 1] = 2 * v

    rotation = []
    for f in gray:
        rotation.append([corner_dart[(f, j)] for j in range(len(g.faces[f]))])

    il_graph = EmbeddedGraph(rotation, dart_tail, dart_rev)

    edge_vertex = []
    for d, _ in il_graph.edge_darts:
        edge_vertex.append(d // 2)
    vertex_gray_pair = []
    for v, cs in enumerate(gray_corners):
        cs_sorted = sorted(cs)
        vertex_gray_pair.append(
            (il_index[cs_sorted[0][0]], il_index[cs_sorted[1][0]])
        )

    multiplicity = {}
    selfloops = 0
    for a, b in vertex_gray_pair:
        if a == b:
            selfloops += 1
        else:
            key = (a, b) if a < b else (b, a)
            multiplicity[key] = multiplicity.get(key, 0) + 1

    return ILGraph(
        graph=il_graph,
        gray_faces=gray,
        edge_vertex=edge_vertex,
        vertex_gray_pair=vertex_gray_pair,
        multiplicity=multiplicity,
        selfloops=selfloops,
    )


def il_simplicity(il: ILGraph) -> SimplicityReport:
    multi = tuple(
        (a, b, c) for (a, b), c in sorted(il.multiplicity.items()) if c > 1
    )
    loops = tuple(
        sorted(a for (a, b) in il.vertex_gray_pair if a == b)
    )
    return SimplicityReport(
        simple=not multi and not loops,
        multi_pairs=multi,
        selfloop_faces=loops,
    )
