"""Planar graphs stored as combinatorial rotation systems.

Every undirected edge contributes two darts paired by a fixed-point-free
reversal involution; every vertex owns the counterclockwise cyclic order of
its outgoing darts.  Faces are traced with ``next = successor(reverse(d))``,
which places each face on the right-hand side of its darts.  The embedding
supplied by the caller is trusted and then validated through the Euler
formula per connected component; no planarity test for abstract graphs is
performed here.
"""

from __future__ import annotations

from collections import Counter, deque

from .errors import Disconnected, MalformedRotation, NonPlanarEmbedding


class EmbeddedGraph:
    """Immutable planar embedding with traced faces.

    Construct through :func:`build_embedding` (neighbor lists) or the
    dart-level constructor used by the structural transformations below.
    """

    __slots__ = (
        "n",
        "rotation",
        "dart_tail",
        "dart_head",
        "dart_rev",
        "dart_pos",
        "faces",
        "dart_face",
        "outer_face",
        "edge_of_dart",
        "edge_darts",
    )

    def __init__(self, rotation, dart_tail, dart_rev, outer_face=None):
        m = len(dart_tail)
        if len(dart_rev) != m:
            raise MalformedRotation("reversal involution size mismatch")
        for d in range(m):
            r = dart_rev[d]
            if r == d or not (0 <= r < m) or dart_rev[r] != d:
                raise MalformedRotation("reversal is not a fixed-point-free involution")
        self.n = len(rotation)
        self.rotation = [list(r) for r in rotation]
        self.dart_tail = list(dart_tail)
        self.dart_rev = list(dart_rev)
        self.dart_head = [dart_tail[dart_rev[d]] for d in range(m)]
        self.dart_pos = [0] * m
        seen = [False] * m
        for v, rot in enumerate(self.rotation):
            if not rot:
                raise MalformedRotation(f"vertex {v} has no incident darts")
            for i, d in enumerate(rot):
                if seen[d] or dart_tail[d] != v:
                    raise MalformedRotation("rotation lists do not partition the darts")
                seen[d] = True
                self.dart_pos[d] = i
        if not all(seen):
            raise MalformedRotation("some darts missing from the rotation lists")

        self.faces, self.dart_face = self._trace_faces()
        self._check_euler()

        self.edge_of_dart = [-1] * m
        self.edge_darts = []
        for d in range(m):
            if d < self.dart_rev[d]:
                eid = len(self.edge_darts)
                self.edge_darts.append((d, self.dart_rev[d]))
                self.edge_of_dart[d] = eid
                self.edge_of_dart[self.dart_rev[d]] = eid

        if outer_face is None:
            outer_face = max(
                range(len(self.faces)), key=lambda f: (len(self.faces[f]), -f)
            )
        if not 0 <= outer_face < len(self.faces):
            raise MalformedRotation(f"outer face id {outer_face} out of range")
        self.outer_face = outer_face

    # -- derived quantities ------------------------------------------------

    @property
    def edge_count(self):
        return len(self.edge_darts)

    @property
    def face_count(self):
        return len(self.faces)

    def degree(self, v):
        return len(self.rotation[v])

    def sigma_next(self, d):
        rot = self.rotation[self.dart_tail[d]]
        return rot[(self.dart_pos[d] + 1) % len(rot)]

    def sigma_prev(self, d):
        rot = self.rotation[self.dart_tail[d]]
        return rot[(self.dart_pos[d] - 1) % len(rot)]

    def next_in_face(self, d):
        return self.sigma_next(self.dart_rev[d])

    def face_tails(self, f):
        return [self.dart_tail[d] for d in self.faces[f]]

    def neighbors(self, v):
        return [self.dart_head[d] for d in self.rotation[v]]

    def edges(self):
        return [(self.dart_tail[d], self.dart_head[d]) for d, _ in self.edge_darts]

    def adjacency_sets(self):
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges():
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def adjacency_with_edges(self):
        """Per-vertex list of (neighbor, edge id), in rotation order."""
        return [
            [(self.dart_head[d], self.edge_of_dart[d]) for d in rot]
            for rot in self.rotation
        ]

    def to_neighbor_lists(self):
        return [[self.dart_head[d] for d in rot] for rot in self.rotation]

    def is_simple(self):
        seen = set()
        for u, v in self.edges():
            if u == v:
                return False
            key = (u, v) if u < v else (v, u)
            if key in seen:
                return False
            seen.add(key)
        return True

    def is_regular(self, k):
        return all(len(rot) == k for rot in self.rotation)

    def with_outer_face(self, outer_face):
        return EmbeddedGraph(self.rotation, self.dart_tail, self.dart_rev, outer_face)

    def connected_components(self):
        comp = [-1] * self.n
        comps = []
        for s in range(self.n):
            if comp[s] != -1:
                continue
            cid = len(comps)
            members = [s]
            comp[s] = cid
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for d in self.rotation[v]:
                    w = self.dart_head[d]
                    if comp[w] == -1:
                        comp[w] = cid
                        members.append(w)
                        queue.append(w)
            comps.append(members)
        return comps

    def __eq__(self, other):
        if not isinstance(other, EmbeddedGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.to_neighbor_lists() == other.to_neighbor_lists()
            and self.outer_face == other.outer_face
        )

    def __repr__(self):
        return (
            f"EmbeddedGraph(n={self.n}, edges={self.edge_count}, "
            f"faces={self.face_count})"
        )

    # -- internals ----------------------------------------------------------

    def _trace_faces(self):
        m = len(self.dart_tail)
        dart_face = [-1] * m
        faces = []
        for d0 in range(m):
            if dart_face[d0] != -1:
                continue
            fid = len(faces)
            cycle = []
            d = d0
            while dart_face[d] == -1:
                dart_face[d] = fid
                cycle.append(d)
                d = self.sigma_next(self.dart_rev[d])
            if d != d0:
                raise MalformedRotation("face tracing did not close")
            faces.append(tuple(cycle))
        return faces, dart_face

    def _check_euler(self):
        comps = self.connected_components()
        comp_of = [0] * self.n
        for cid, members in enumerate(comps):
            for v in members:
                comp_of[v] = cid
        face_comp_counts = Counter()
        for cycle in self.faces:
            face_comp_counts[comp_of[self.dart_tail[cycle[0]]]] += 1
        edge_comp_counts = Counter()
        for d in range(len(self.dart_tail)):
            if d < self.dart_rev[d]:
                edge_comp_counts[comp_of[self.dart_tail[d]]] += 1
        for cid, members in enumerate(comps):
            v = len(members)
            e = edge_comp_counts[cid]
            f = face_comp_counts[cid]
            if v - e + f != 2:
                raise NonPlanarEmbedding(
                    f"component {cid}: V-E+F = {v}-{e}+{f} != 2"
                )


def build_embedding(neighbor_lists, outer_face=None, require_simple=False):
    """Build an embedding from per-vertex counterclockwise neighbor lists.

    Each undirected edge must appear in both endpoints' lists.  Parallel
    edges are paired occurrence-by-occurrence (i-th of v in u's list with
    i-th of u in v's list); loop occurrences pair up consecutively.
    """
    n = len(neighbor_lists)
    for u, nbrs in enumerate(neighbor_lists):
        for v in nbrs:
            if not 0 <= v < n:
                raise MalformedRotation(f"vertex {u} lists unknown neighbor {v}")

    if require_simple:
        for u, nbrs in enumerate(neighbor_lists):
            if u in nbrs:
                raise MalformedRotation(f"self-loop at vertex {u}")
            if len(set(nbrs)) != len(nbrs):
                raise MalformedRotation(f"parallel edges at vertex {u}")

    dart_tail = []
    rotation = []
    for u, nbrs in enumerate(neighbor_lists):
        rot = []
        for _ in nbrs:
            rot.append(len(dart_tail))
            dart_tail.append(u)
        rotation.append(rot)

    occurrences = {}
    for u, nbrs in enumerate(neighbor_lists):
        for i, v in enumerate(nbrs):
            occurrences.setdefault((u, v), []).append(rotation[u][i])

    m = len(dart_tail)
    dart_rev = [-1] * m
    for (u, v), darts in occurrences.items():
        if u < v:
            back = occurrences.get((v, u), [])
            if len(back) != len(darts):
                raise MalformedRotation(
                    f"adjacency between {u} and {v} is asymmetric"
                )
            for a, b in zip(darts, back):
                dart_rev[a] = b
                dart_rev[b] = a
        elif u == v:
            if len(darts) % 2 != 0:
                raise MalformedRotation(f"odd number of loop darts at {u}")
            for i in range(0, len(darts), 2):
                dart_rev[darts[i]] = darts[i + 1]
                dart_rev[darts[i + 1]] = darts[i]
    if any(r == -1 for r in dart_rev):
        raise MalformedRotation("unpaired darts remain")

    return EmbeddedGraph(rotation, dart_tail, dart_rev, outer_face)


# -- connectivity -----------------------------------------------------------


def _has_articulation(adj, n, skip=-1):
    """True if the graph (minus the skipped vertex) has a cut vertex or is
    disconnected.  ``adj`` is per-vertex [(neighbor, edge id)]."""
    start = 0
    while start == skip:
        start += 1
    if start >= n:
        return False
    disc = [-1] * n
    low = [0] * n
    parent_eid = [-1] * n
    ptr = [0] * n
    disc[start] = low[start] = 0
    timer = 1
    root_children = 0
    stack = [start]
    while stack:
        v = stack[-1]
        if ptr[v] < len(adj[v]):
            w, eid = adj[v][ptr[v]]
            ptr[v] += 1
            if w == skip:
                continue
            if disc[w] == -1:
                parent_eid[w] = eid
                disc[w] = low[w] = timer
                timer += 1
                if v == start:
                    root_children += 1
                stack.append(w)
            elif eid != parent_eid[v]:
                if disc[w] < low[v]:
                    low[v] = disc[w]
        else:
            stack.pop()
            if stack:
                u = stack[-1]
                if low[v] < low[u]:
                    low[u] = low[v]
                if u != start and low[v] >= disc[u]:
                    return True
    if root_children >= 2:
        return True
    expected = n - (1 if 0 <= skip < n else 0)
    if timer < expected:
        return True
    return False


def connectivity_level(g):
    """0 for disconnected input, otherwise the largest k <= 3 such that the
    graph is k-connected (higher connectivity still reports 3)."""
    if len(g.connected_components()) != 1:
        return 0
    n = g.n
    if n == 1:
        return 0
    if n == 2:
        return 1
    adj = g.adjacency_with_edges()
    if _has_articulation(adj, n):
        return 1
    if n == 3:
        return 2
    for a in range(n):
        if _has_articulation(adj, n, skip=a):
            return 2
    return 3


# -- structural transformations ----------------------------------------------


def dual(g):
    """Dual embedding: one vertex per face, one edge crossing each edge."""
    if len(g.connected_components()) != 1:
        raise Disconnected("dual requires a connected graph")
    # dual dart ids coincide with primal dart ids; dual dart d sits at the
    # face containing d and points to the face containing reverse(d)
    rotation = [list(cycle) for cycle in g.faces]
    dart_tail = [g.dart_face[d] for d in range(len(g.dart_tail))]
    return EmbeddedGraph(rotation, dart_tail, list(g.dart_rev))


def medial(g):
    """Medial embedding: one vertex per edge, one edge per face corner.

    Always 4-regular; preserves 3-connectivity of simple inputs.
    """
    corner_ids = {}
    corners = []
    for u in range(g.n):
        rot = g.rotation[u]
        k = len(rot)
        for i in range(k):
            corner_ids[(u, i)] = len(corners)
            corners.append((rot[i], rot[(i + 1) % k]))

    # medial darts 2c and 2c+1 live at the medial vertices of the corner's
    # first and second edge respectively
    dart_tail = []
    dart_rev = []
    for c, (da, db) in enumerate(corners):
        dart_tail.append(g.edge_of_dart[da])
        dart_tail.append(g.edge_of_dart[db])
        dart_rev.append(2 * c + 1)
        dart_rev.append(2 * c)

    def corner_at(d):
        # corner starting with dart d: (d, sigma(d))
        return corner_ids[(g.dart_tail[d], g.dart_pos[d])]

    def corner_before(d):
        # corner ending with dart d: (sigma_inv(d), d)
        u = g.dart_tail[d]
        k = len(g.rotation[u])
        return corner_ids[(u, (g.dart_pos[d] - 1) % k)]

    rotation = []
    for eid, (d, dr) in enumerate(g.edge_darts):
        rotation.append(
            [
                2 * corner_before(dr) + 1,
                2 * corner_at(d),
                2 * corner_before(d) + 1,
                2 * corner_at(dr),
            ]
        )
    return EmbeddedGraph(rotation, dart_tail, dart_rev)


def subdivide_edges(g, k):
    """Replace every edge by a path with k internal degree-2 vertices."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return EmbeddedGraph(g.rotation, g.dart_tail, g.dart_rev, g.outer_face)
    n = g.n
    e_count = g.edge_count

    def chain(eid):
        return [n + eid * k + j for j in range(k)]

    neighbor_lists = []
    for u in range(n):
        row = []
        for d in g.rotation[u]:
            eid = g.edge_of_dart[d]
            nodes = chain(eid)
            rep, _ = g.edge_darts[eid]
            row.append(nodes[0] if d == rep else nodes[-1])
        neighbor_lists.append(row)
    for eid in range(e_count):
        rep, _ = g.edge_darts[eid]
        u, v = g.dart_tail[rep], g.dart_head[rep]
        nodes = chain(eid)
        path = [u] + nodes + [v]
        for j, mid in enumerate(nodes):
            neighbor_lists.append([path[j], path[j + 2]])
            assert len(neighbor_lists) - 1 == mid
    return build_embedding(neighbor_lists)
