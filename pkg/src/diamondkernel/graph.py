"""Undirected simple graphs with stable integer vertex labels."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator

Pair = tuple[int, int]


class GraphError(ValueError):
    """Raised on invalid vertex labels or violated edit preconditions."""


def pair(a: int, b: int) -> Pair:
    """Canonical unordered pair, smaller label first."""
    if a == b:
        raise GraphError(f"a pair needs two distinct vertices, got {a} twice")
    return (a, b) if a < b else (b, a)


class Graph:
    """Adjacency-set graph.

    Labels are opaque non-negative integers and are never renumbered, so a
    vertex keeps its label through any sequence of deletions.  ``neighbors``
    hands out the internal set; callers must not mutate it.
    """

    __slots__ = ("_adj",)

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Pair] = ()):
        self._adj: dict[int, set[int]] = {}
        for v in vertices:
            self.add_vertex(v)
        for u, v in edges:
            self.add_edge(u, v)

    # construction / mutation

    def add_vertex(self, v: int) -> None:
        if v < 0:
            raise GraphError(f"vertex labels must be non-negative, got {v}")
        self._adj.setdefault(v, set())

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise GraphError(f"self-loop on {u}")
        self.add_vertex(u)
        self.add_vertex(v)
        self._adj[u].add(v)
        self._adj[v].add(u)

    def remove_edge(self, u: int, v: int) -> None:
        if not self.has_edge(u, v):
            raise GraphError(f"edge {pair(u, v)} not present")
        self._adj[u].discard(v)
        self._adj[v].discard(u)

    def remove_vertex(self, v: int) -> None:
        self._check(v)
        for w in self._adj.pop(v):
            self._adj[w].discard(v)

    def copy(self) -> Graph:
        g = Graph.__new__(Graph)
        g._adj = {v: set(nb) for v, nb in self._adj.items()}
        return g

    # queries

    def _check(self, *vs: int) -> None:
        for v in vs:
            if v not in self._adj:
                raise GraphError(f"unknown vertex {v}")

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    @property
    def vertices(self) -> list[int]:
        return sorted(self._adj)

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self._adj.values()) // 2

    def neighbors(self, v: int) -> set[int]:
        self._check(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> Iterator[Pair]:
        """Edges in canonical sorted order."""
        for u in sorted(self._adj):
            for v in sorted(self._adj[u]):
                if u < v:
                    yield (u, v)

    def non_edges(self) -> Iterator[Pair]:
        vs = self.vertices
        for i, u in enumerate(vs):
            nb = self._adj[u]
            for v in vs[i + 1:]:
                if v not in nb:
                    yield (u, v)

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        for i, u in enumerate(vs):
            nb = self._adj[u]
            for v in vs[i + 1:]:
                if v not in nb:
                    return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class EditSet:
    """Added non-edges and deleted edges, each as canonical pairs."""

    additions: frozenset[Pair] = field(default_factory=frozenset)
    deletions: frozenset[Pair] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "additions", frozenset(pair(*p) for p in self.additions))
        object.__setattr__(self, "deletions", frozenset(pair(*p) for p in self.deletions))
        both = self.additions & self.deletions
        if both:
            raise GraphError(f"pairs both added and deleted: {sorted(both)}")

    @classmethod
    def from_pairs(cls, g: Graph, pairs: Iterable[Pair]) -> EditSet:
        """Split edited pairs into additions and deletions relative to ``g``."""
        adds, dels = set(), set()
        for u, v in pairs:
            (dels if g.has_edge(u, v) else adds).add(pair(u, v))
        return cls(frozenset(adds), frozenset(dels))

    def pairs(self) -> frozenset[Pair]:
        return self.additions | self.deletions

    def swapped(self) -> EditSet:
        return EditSet(self.deletions, self.additions)

    def __len__(self) -> int:
        return len(self.additions) + len(self.deletions)


class Mode(str, enum.Enum):
    EDITING = "editing"
    DELETION = "deletion"


@dataclass
class Instance:
    graph: Graph
    k: int
    mode: Mode = Mode.EDITING

    def __post_init__(self):
        self.mode = Mode(self.mode)
        if self.k < 0:
            raise GraphError(f"budget must be non-negative, got {self.k}")

    def copy(self) -> Instance:
        return Instance(self.graph.copy(), self.k, self.mode)


def common_neighbors(g: Graph, u: int, v: int) -> set[int]:
    if u == v:
        raise GraphError(f"common neighbors need two distinct vertices, got {u} twice")
    nu, nv = g.neighbors(u), g.neighbors(v)
    if len(nu) > len(nv):
        nu, nv = nv, nu
    return {w for w in nu if w in nv}


def apply_edits(g: Graph, edits: EditSet) -> Graph:
    """Return ``g`` with the additions inserted and the deletions removed."""
    for u, v in edits.additions:
        g._check(u, v)
        if g.has_edge(u, v):
            raise GraphError(f"cannot add {(u, v)}: already an edge")
    for u, v in edits.deletions:
        if not g.has_edge(u, v):
            raise GraphError(f"cannot delete {(u, v)}: not an edge")
    h = g.copy()
    for u, v in edits.additions:
        h.add_edge(u, v)
    for u, v in edits.deletions:
        h.remove_edge(u, v)
    return h


def induced_subgraph(g: Graph, vs: Iterable[int]) -> Graph:
    keep = set(vs)
    g._check(*keep)
    h = Graph.__new__(Graph)
    h._adj = {v: g._adj[v] & keep for v in keep}
    return h


def delete_vertex(g: Graph, v: int) -> Graph:
    h = g.copy()
    h.remove_vertex(v)
    return h


def complete_graph(vs: Iterable[int]) -> Graph:
    vs = list(vs)
    return Graph(vs, ((a, b) for i, a in enumerate(vs) for b in vs[i + 1:]))


def cycle_graph(n: int) -> Graph:
    return Graph(range(n), ((i, (i + 1) % n) for i in range(n)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(range(10), outer + spokes + inner)


def diamond_graph(x: int = 0, u: int = 1, v: int = 2, y: int = 3) -> Graph:
    """Two triangles xuv and yuv sharing the cross edge uv."""
    return Graph([x, u, v, y], [(u, v), (x, u), (x, v), (y, u), (y, v)])
