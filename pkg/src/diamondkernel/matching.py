"""Bounded maximum-cardinality matching on general graphs (Edmonds' blossoms).

The sunflower rules only need to know whether a matching of some target size
exists, so the search stops as soon as that many pairs are matched.
"""

from __future__ import annotations

from collections import deque

from .graph import Graph, Pair, common_neighbors, induced_subgraph, pair

Matching = frozenset[Pair]


def _augmenting_path(adj: list[list[int]], match: list[int], root: int) -> bool:
    """Grow an alternating tree from ``root``; augment ``match`` if a path exists."""
    n = len(adj)
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                # odd cycle: contract the blossom
                cur = lca(v, to)
                in_blossom = [False] * n
                mark_path(v, cur, to, in_blossom)
                mark_path(to, cur, v, in_blossom)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    while to != -1:
                        pv = parent[to]
                        nxt = match[pv]
                        match[to] = pv
                        match[pv] = to
                        to = nxt
                    return True
                used[match[to]] = True
                queue.append(match[to])
    return False


def max_matching_at_least(g: Graph, t: int) -> Matching | None:
    """A matching of exactly ``t`` pairs if ``g`` has one, else None."""
    if t <= 0:
        return frozenset()
    if 2 * t > g.n:
        return None
    labels = g.vertices
    index = {v: i for i, v in enumerate(labels)}
    adj = [[index[w] for w in sorted(g.neighbors(v))] for v in labels]
    n = len(labels)
    match = [-1] * n
    size = 0
    # greedy start; augmenting paths repair any suboptimal choice
    for i in range(n):
        if match[i] == -1:
            for j in adj[i]:
                if match[j] == -1:
                    match[i], match[j] = j, i
                    size += 1
                    break
        if size >= t:
            break
    for i in range(n):
        if size >= t:
            break
        if match[i] == -1 and _augmenting_path(adj, match, i):
            size += 1
    if size < t:
        return None
    pairs = sorted({pair(labels[i], labels[j]) for i, j in enumerate(match) if j != -1})
    return frozenset(pairs[:t])


def complement(g: Graph) -> Graph:
    vs = g.vertices
    return Graph(vs, g.non_edges())


def disjoint_adjacent_pairs(g: Graph, u: int, v: int, t: int) -> Matching | None:
    """``t`` disjoint edges inside the common neighbourhood of ``u`` and ``v``."""
    cn = common_neighbors(g, u, v)
    if len(cn) < 2 * t:
        return None
    return max_matching_at_least(induced_subgraph(g, cn), t)


def disjoint_nonadjacent_pairs(g: Graph, u: int, v: int, t: int) -> Matching | None:
    """``t`` disjoint non-edges inside the common neighbourhood of ``u`` and ``v``."""
    cn = common_neighbors(g, u, v)
    if len(cn) < 2 * t:
        return None
    return max_matching_at_least(complement(induced_subgraph(g, cn)), t)
