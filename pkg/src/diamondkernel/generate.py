"""Seeded instance generators."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .diamonds import is_diamond_free
from .graph import Graph, Instance, Mode, complete_graph


@dataclass(frozen=True)
class GenSpec:
    kind: str = "gnp"  # gnp | planted | cliques | figure3
    n: int = 10
    p: float = 0.5
    clique_sizes: tuple[int, int] = (2, 5)
    r: int = 1
    k: int = 1
    mode: Mode = Mode.EDITING
    seed: int = 0


class GenerationError(RuntimeError):
    pass


def gen_gnp(spec: GenSpec) -> Instance:
    if not 0 <= spec.p <= 1:
        raise ValueError(f"edge probability {spec.p} outside [0, 1]")
    rng = random.Random(spec.seed)
    g = Graph(range(1, spec.n + 1))
    for u in range(1, spec.n + 1):
        for v in range(u + 1, spec.n + 1):
            if rng.random() < spec.p:
                g.add_edge(u, v)
    return Instance(g, spec.k, spec.mode)


def diamond_free_base(n: int, sizes: tuple[int, int], rng: random.Random,
                      max_failures: int = 50) -> tuple[Graph, list[frozenset[int]]]:
    """Pack random cliques that pairwise share at most one vertex.

    Sharing at most one vertex is not enough on its own (three cliques meeting
    pairwise can close a triangle that extends to a diamond), so a candidate
    clique is also rejected if the union stops being diamond-free.
    """
    lo, hi = sizes
    if lo < 2 or hi < lo:
        raise ValueError(f"bad clique size range {sizes}")
    g = Graph(range(1, n + 1))
    cliques: list[frozenset[int]] = []
    failures = 0
    while failures < max_failures:
        size = rng.randint(lo, min(hi, n))
        if size < 2:
            break
        cand = frozenset(rng.sample(range(1, n + 1), size))
        if any(len(cand & c) > 1 for c in cliques):
            failures += 1
            continue
        trial = g.copy()
        members = sorted(cand)
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                trial.add_edge(a, b)
        if not is_diamond_free(trial):
            failures += 1
            continue
        g = trial
        cliques.append(cand)
        failures = 0
    if n >= 2 and not cliques:
        raise GenerationError(f"no clique of size {sizes} could be placed on {n} vertices")
    return g, cliques


def gen_planted(spec: GenSpec) -> Instance:
    """A diamond-free base perturbed by ``r`` random edits; ``k = r``.

    In deletion mode the edits are additions only, so deleting them again
    is a solution of size ``r``.
    """
    rng = random.Random(spec.seed)
    g, _ = diamond_free_base(spec.n, spec.clique_sizes, rng)
    if spec.mode is Mode.EDITING:
        pool = [(u, v) for u in g.vertices for v in g.vertices if u < v]
    else:
        pool = list(g.non_edges())
    if spec.r > len(pool):
        raise GenerationError(f"cannot plant {spec.r} edits among {len(pool)} pairs")
    for u, v in rng.sample(pool, spec.r):
        if g.has_edge(u, v):
            g.remove_edge(u, v)
        else:
            g.add_edge(u, v)
    return Instance(g, spec.r, spec.mode)


def gen_clique_union(spec: GenSpec) -> Instance:
    """Two to four overlapping random cliques plus ``r`` random pair toggles.

    Dense overlapping cliques are where the clique-based rules fire, which
    plain G(n, p) graphs on few vertices rarely provide.
    """
    rng = random.Random(spec.seed)
    lo, hi = spec.clique_sizes
    if lo < 2 or hi < lo:
        raise ValueError(f"bad clique size range {spec.clique_sizes}")
    g = Graph(range(1, spec.n + 1))
    if spec.n >= 2:
        for _ in range(rng.randint(2, 4)):
            members = sorted(rng.sample(range(1, spec.n + 1), rng.randint(min(lo, spec.n), min(hi, spec.n))))
            for i, a in enumerate(members):
                for b in members[i + 1:]:
                    g.add_edge(a, b)
    pool = [(u, v) for u in range(1, spec.n + 1) for v in range(u + 1, spec.n + 1)]
    for u, v in rng.sample(pool, min(spec.r, len(pool))):
        if g.has_edge(u, v):
            g.remove_edge(u, v)
        else:
            g.add_edge(u, v)
    return Instance(g, spec.k, spec.mode)


# Labels of the named vertices of the 24-vertex worked example.  The ten unnamed
# vertices of the big clique get labels 5..14.
FIGURE3 = {
    "u1": 1, "u2": 2, "u3": 3, "u4": 4,
    **{f"v{i}": 15 + i for i in range(10)},
}


def gen_figure3(mode: Mode = Mode.EDITING, k: int = 4) -> Instance:
    """A 14-clique with five smaller cliques around it; 4 edits are optimal."""
    f = FIGURE3
    g = complete_graph(range(1, 15))

    def clique(*names: str) -> None:
        vs = [f[x] for x in names]
        for i, a in enumerate(vs):
            for b in vs[i + 1:]:
                g.add_edge(a, b)

    clique("v0", "v1", "v2", "u1")
    clique("v2", "v3", "v4", "v5", "v6")
    clique("u2", "v3", "v4", "v5", "v6")
    clique("u3", "v7", "v8")
    clique("u3", "u4", "v9")
    return Instance(g, k, mode)


def generate(spec: GenSpec) -> Instance:
    if spec.kind == "gnp":
        return gen_gnp(spec)
    if spec.kind == "planted":
        return gen_planted(spec)
    if spec.kind == "cliques":
        return gen_clique_union(spec)
    if spec.kind == "figure3":
        return gen_figure3(spec.mode, spec.k)
    raise ValueError(f"unknown generator kind {spec.kind!r}")
