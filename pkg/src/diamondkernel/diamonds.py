"""Diamond detection and the unique maximal clique of a non-cross edge."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, GraphError, Pair, common_neighbors


@dataclass(frozen=True)
class Diamond:
    cross: Pair
    wings: Pair

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.cross + self.wings)

    def edges(self) -> list[Pair]:
        (u, v), (x, y) = self.cross, self.wings
        return [(u, v)] + sorted(tuple(sorted(p)) for p in ((u, x), (u, y), (v, x), (v, y)))


def _nonadjacent_pair(g: Graph, vs: set[int]) -> Pair | None:
    """Lowest nonadjacent pair in ``vs``, or None if ``vs`` is a clique."""
    order = sorted(vs)
    for i, x in enumerate(order):
        nb = g.neighbors(x)
        for y in order[i + 1:]:
            if y not in nb:
                return (x, y)
    return None


def is_cross_edge(g: Graph, u: int, v: int) -> bool:
    if not g.has_edge(u, v):
        raise GraphError(f"{(u, v)} is not an edge")
    return _nonadjacent_pair(g, common_neighbors(g, u, v)) is not None


def iter_diamonds(g: Graph) -> Iterator[Diamond]:
    """Every induced diamond once, cross edges in canonical order."""
    for u, v in g.edges():
        cn = sorted(common_neighbors(g, u, v))
        for i, x in enumerate(cn):
            nb = g.neighbors(x)
            for y in cn[i + 1:]:
                if y not in nb:
                    yield Diamond((u, v), (x, y))


def count_diamonds(g: Graph, cap: int | None = None) -> int:
    count = 0
    for _ in iter_diamonds(g):
        count += 1
        if cap is not None and count >= cap:
            break
    return count


def find_diamond(g: Graph) -> Diamond | None:
    for u, v in g.edges():
        wings = _nonadjacent_pair(g, common_neighbors(g, u, v))
        if wings is not None:
            return Diamond((u, v), wings)
    return None


def is_diamond_free(g: Graph) -> bool:
    return find_diamond(g) is None


def unique_maximal_clique_of_edge(g: Graph, u: int, v: int) -> set[int]:
    """The only maximal clique through a non-cross edge ``uv``."""
    if not g.has_edge(u, v):
        raise GraphError(f"{(u, v)} is not an edge")
    cn = common_neighbors(g, u, v)
    if _nonadjacent_pair(g, cn) is not None:
        raise GraphError(f"{(u, v)} is a cross edge and lies in several maximal cliques")
    cn.update((u, v))
    return cn
