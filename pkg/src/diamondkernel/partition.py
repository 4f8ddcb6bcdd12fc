"""Five-part vertex classification of a reduced instance.

Works from cross edges alone, never enumerating maximal cliques:

1. every edge whose common neighbourhood is not a clique is a cross edge; its
   ends and common neighbours are type-I vertices, and all edges among them
   are type-I edges;
2. a type-I vertex is small if its neighbourhood is not a cluster graph, or
   if one of its neighbourhood components has at most 3k vertices (so the
   maximal clique with the vertex has at most 3k+1) and carries a cross edge;
3. every other edge lies in exactly one (type-II) maximal clique; a clique
   holding a small vertex makes all its vertices vulnerable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .diamonds import _nonadjacent_pair
from .graph import Graph, GraphError, Instance, Pair, common_neighbors, pair
from .reduction import is_reduced


class Part(str, enum.Enum):
    SMALL_TYPE1 = "i"
    VULNERABLE_BIG = "ii"
    VULNERABLE_TYPE2 = "iii"
    GUARDED_TYPE1 = "iv"
    GUARDED_TYPE2 = "v"


@dataclass
class PartitionLabels:
    k: int
    vertices: frozenset[int]
    vertex_type1: set[int] = field(default_factory=set)
    vertex_small: set[int] = field(default_factory=set)
    vertex_vulnerable: set[int] = field(default_factory=set)
    edge_cross: set[Pair] = field(default_factory=set)
    edge_type1: set[Pair] = field(default_factory=set)
    # number of type-II cliques inspected in the last step
    cliques_visited: int = 0

    @property
    def small(self) -> set[int]:
        """S(G): vertices of small type-I maximal cliques."""
        return self.vertex_small

    @property
    def only_type2(self) -> set[int]:
        """T(G): vertices in no type-I maximal clique."""
        return set(self.vertices) - self.vertex_type1

    @property
    def guarded(self) -> set[int]:
        return set(self.vertices) - self.vertex_vulnerable

    def part(self, v: int) -> Part:
        return part_of(self, v)

    def parts(self) -> dict[Part, list[int]]:
        out: dict[Part, list[int]] = {p: [] for p in Part}
        for v in sorted(self.vertices):
            out[part_of(self, v)].append(v)
        return out


def part_of(labels: PartitionLabels, v: int) -> Part:
    if v not in labels.vertices:
        raise GraphError(f"unknown vertex {v}")
    if v in labels.vertex_small:
        return Part.SMALL_TYPE1
    vulnerable = v in labels.vertex_vulnerable
    type1 = v in labels.vertex_type1
    if vulnerable:
        return Part.VULNERABLE_BIG if type1 else Part.VULNERABLE_TYPE2
    return Part.GUARDED_TYPE1 if type1 else Part.GUARDED_TYPE2


def neighborhood_components(g: Graph, v: int) -> list[set[int]] | None:
    """Components of G[N(v)] if they are all cliques, else None."""
    nb = g.neighbors(v)
    seen: set[int] = set()
    comps = []
    for s in sorted(nb):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y in nb and y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        for x in comp:
            # x is adjacent to everything in its component iff the component is a clique
            if len(g.neighbors(x) & comp) != len(comp) - 1:
                return None
        comps.append(comp)
    return comps


def _has_cross_edge(clique: set[int], cross_adj: dict[int, set[int]]) -> bool:
    return any(cross_adj.get(x, set()) & clique for x in clique)


def compute_partition(inst: Instance, check: bool = True) -> PartitionLabels:
    """Classify vertices and edges of a reduced instance.

    With ``check`` the instance is first verified to be reduced, since the
    small-vertex step is only sound when big cliques pairwise share at most
    one vertex.
    """
    if check and not is_reduced(inst):
        raise GraphError("partition needs a reduced instance")
    g, k = inst.graph, inst.k
    labels = PartitionLabels(k=k, vertices=frozenset(g.vertices))

    # step 1: cross edges and type-I marks
    cross_adj: dict[int, set[int]] = {}
    for u, v in g.edges():
        cn = common_neighbors(g, u, v)
        if _nonadjacent_pair(g, cn) is None:
            continue
        labels.edge_cross.add((u, v))
        cross_adj.setdefault(u, set()).add(v)
        cross_adj.setdefault(v, set()).add(u)
        members = sorted(cn | {u, v})
        labels.vertex_type1.update(members)
        for i, x in enumerate(members):
            nb = g.neighbors(x)
            for y in members[i + 1:]:
                if y in nb:
                    labels.edge_type1.add((x, y))

    # step 2: small vertices
    for v in sorted(labels.vertex_type1):
        comps = neighborhood_components(g, v)
        if comps is None:
            labels.vertex_small.add(v)
            continue
        for comp in comps:
            # |comp| <= 3k  <=>  the maximal clique comp + v has <= 3k+1 vertices
            if len(comp) <= 3 * k and _has_cross_edge(comp | {v}, cross_adj):
                labels.vertex_small.add(v)
                break

    # step 3: vulnerable vertices via type-II cliques
    labels.vertex_vulnerable = set(labels.vertex_small)
    checked: set[Pair] = set()
    for u, v in g.edges():
        if (u, v) in labels.edge_type1 or (u, v) in checked:
            continue
        clique = common_neighbors(g, u, v) | {u, v}
        labels.cliques_visited += 1
        if clique & labels.vertex_small:
            labels.vertex_vulnerable |= clique
        members = sorted(clique)
        for i, x in enumerate(members):
            for y in members[i + 1:]:
                checked.add((x, y))
    return labels


@dataclass
class GuardedCliqueView:
    owner: int
    cliques: list[frozenset[int]]
    type1_flags: list[bool]

    def type1_cliques(self) -> list[frozenset[int]]:
        return [c for c, t in zip(self.cliques, self.type1_flags) if t]


def guarded_cliques(inst: Instance, labels: PartitionLabels, x: int) -> GuardedCliqueView:
    """The maximal cliques through a guarded vertex, read off its neighbourhood."""
    if x not in labels.vertices:
        raise GraphError(f"unknown vertex {x}")
    if x in labels.vertex_vulnerable:
        raise GraphError(f"vertex {x} is vulnerable")
    g = inst.graph
    comps = neighborhood_components(g, x)
    if comps is None:
        raise GraphError(f"neighbourhood of guarded vertex {x} is not a cluster graph")
    cross = labels.edge_cross
    cliques, flags = [], []
    for comp in comps:
        clique = frozenset(comp | {x})
        members = sorted(clique)
        flag = any(pair(a, b) in cross for i, a in enumerate(members) for b in members[i + 1:])
        cliques.append(clique)
        flags.append(flag)
    return GuardedCliqueView(x, cliques, flags)
