"""Backtracking isomorphism tests for small graphs and digraphs.

Plain depth-first search with degree-signature pruning; adequate for the
desk-scale graphs this package produces (tens of vertices).  Multigraphs
are handled by matching adjacency multiplicities.
"""

from __future__ import annotations

from collections import Counter


def _multi_adjacency(n, edges):
    adj = [Counter() for _ in range(n)]
    for u, v in edges:
        adj[u][v] += 1
        if u != v:
            adj[v][u] += 1
    return adj


def _signature(adj, v):
    deg = sum(adj[v].values())
    nbr_degs = tuple(sorted(sum(adj[w].values()) for w in adj[v] for _ in range(adj[v][w])))
    return (deg, adj[v][v], nbr_degs)


def find_isomorphism(n1, edges1, n2, edges2):
    """Mapping list (vertex of graph 1 -> vertex of graph 2) or None."""
    if n1 != n2 or len(edges1) != len(edges2):
        return None
    adj1 = _multi_adjacency(n1, edges1)
    adj2 = _multi_adjacency(n2, edges2)
    sig1 = [_signature(adj1, v) for v in range(n1)]
    sig2 = [_signature(adj2, v) for v in range(n2)]
    if sorted(sig1) != sorted(sig2):
        return None

    candidates = [
        [w for w in range(n2) if sig2[w] == sig1[v]] for v in range(n1)
    ]
    mapping = [-1] * n1
    used = [False] * n2

    def pick_next():
        best, best_key = -1, None
        for v in range(n1):
            if mapping[v] != -1:
                continue
            mapped_nbrs = sum(1 for w in adj1[v] if mapping[w] != -1)
            key = (-mapped_nbrs, len(candidates[v]), v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def consistent(v, x):
        for w, cnt in adj1[v].items():
            mw = mapping[w] if w != v else x
            if mw != -1 and adj2[x][mw] != cnt:
                return False
        for w in range(n1):
            if mapping[w] != -1 and adj2[x][mapping[w]] != adj1[v][w]:
                return False
        return True

    def dfs(depth):
        if depth == n1:
            return True
        v = pick_next()
        for x in candidates[v]:
            if used[x] or not consistent(v, x):
                continue
            mapping[v] = x
            used[x] = True
            if dfs(depth + 1):
                return True
            mapping[v] = -1
            used[x] = False
        return False

    return list(mapping) if dfs(0) else None


def graphs_isomorphic(g1, g2):
    """Abstract (embedding-ignoring) isomorphism of two EmbeddedGraphs."""
    return find_isomorphism(g1.n, g1.edges(), g2.n, g2.edges()) is not None


def digraph_isomorphism(nodes1, edges1, nodes2, edges2, forced=()):
    """Directed-graph isomorphism over explicit node lists.

    ``edges*`` are (tail, head) pairs, possibly with multiplicity; ``forced``
    lists node pairs the bijection must contain.  Returns a dict or None.
    """
    if len(nodes1) != len(nodes2) or len(edges1) != len(edges2):
        return None
    out1 = {v: Counter() for v in nodes1}
    in1 = {v: Counter() for v in nodes1}
    for t, h in edges1:
        out1[t][h] += 1
        in1[h][t] += 1
    out2 = {v: Counter() for v in nodes2}
    in2 = {v: Counter() for v in nodes2}
    for t, h in edges2:
        out2[t][h] += 1
        in2[h][t] += 1

    def sig(outs, ins, v):
        return (sum(outs[v].values()), sum(ins[v].values()))

    sig1 = {v: sig(out1, in1, v) for v in nodes1}
    sig2 = {v: sig(out2, in2, v) for v in nodes2}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None

    mapping = {}
    used = set()
    for a, b in forced:
        if sig1[a] != sig2[b]:
            return None
        mapping[a] = b
        used.add(b)

    order = sorted((v for v in nodes1 if v not in mapping),
                   key=lambda v: (sig1[v], v))

    def consistent(v, x):
        for w, m in mapping.items():
            if out1[v][w] != out2[x][m] or in1[v][w] != in2[x][m]:
                return False
        return out1[v][v] == out2[x][x]

    def dfs(i):
        if i == len(order):
            return True
        v = order[i]
        for x in nodes2:
            if x in used or sig2[x] != sig1[v] or not consistent(v, x):
                continue
            mapping[v] = x
            used.add(x)
            if dfs(i + 1):
                return True
            del mapping[v]
            used.discard(x)
        return False

    return dict(mapping) if dfs(0) else None
