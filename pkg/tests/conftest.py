"""Shared builders and brute-force oracles for the test suite."""

import itertools

import pytest

from circlesystems.embedding import build_embedding
from circlesystems.generators import octahedron


def brute_force_connectivity(g, cap=3):
    """Exhaustive vertex-cut search; the oracle connectivity_level must match.

    Removes every vertex subset of size < k and checks connectedness; only
    usable for small graphs.
    """
    n = g.n
    adj = g.adjacency_sets()

    def connected_without(removed):
        remaining = [v for v in range(n) if v not in removed]
        if not remaining:
            return True
        seen = {remaining[0]}
        stack = [remaining[0]]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in removed and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(remaining)

    if not connected_without(set()):
        return 0
    level = 0
    for k in range(1, cap + 1):
        if n <= k:
            break
        ok = all(
            connected_without(set(cut))
            for cut in itertools.combinations(range(n), k - 1)
        )
        if not ok:
            break
        level = k
    return level


def _subst(row, old, new):
    return [new if w == old else w for w in row]


def joined_octahedra():
    """Two octahedra sharing a single degree-4 vertex (an explicit cut)."""
    base = octahedron().to_neighbor_lists()
    lists = [row[:] for row in base]
    # subdivision vertex 12 absorbs one edge of each copy
    lists[0] = _subst(lists[0], 1, 12)
    lists[1] = _subst(lists[1], 0, 12)
    for v in range(6):
        lists.append([w + 6 for w in base[v]])
    lists[6] = _subst(lists[6], 7, 12)
    lists[7] = _subst(lists[7], 6, 12)
    lists.append([0, 1, 6, 7])
    return build_embedding(lists)


def pinched_octahedra():
    """Simple biconnected 4-regular plane graph whose gray-face graph has a
    double edge: two octahedron blobs meeting at two junction vertices.

    The outer face is chosen so that the two pinch faces come out gray.
    """
    base = octahedron().to_neighbor_lists()
    lists = [row[:] for row in base]
    lists[3] = _subst(_subst(lists[3], 4, 12), 5, 13)
    lists[4] = _subst(lists[4], 3, 12)
    lists[5] = _subst(lists[5], 3, 13)
    for v in range(6):
        lists.append([w + 6 for w in base[v]])
    lists[6] = _subst(_subst(lists[6], 7, 12), 8, 13)
    lists[7] = _subst(lists[7], 6, 12)
    lists[8] = _subst(lists[8], 6, 13)
    lists.append([3, 7, 6, 4])
    lists.append([3, 5, 6, 8])
    g = build_embedding(lists)
    pinch = [
        f for f in range(g.face_count) if {12, 13} <= set(g.face_tails(f))
    ]
    neighbor_faces = {
        g.dart_face[g.dart_rev[d]] for d in g.faces[pinch[0]]
    }
    return g.with_outer_face(sorted(neighbor_faces)[0])


@pytest.fixture
def octa():
    return octahedron()
