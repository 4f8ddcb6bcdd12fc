"""Exact solvers and brute-force classifiers used as ground truth.

Graphs are converted to integer bitmasks indexed by sorted label position;
everything here is meant for instances of a few dozen vertices at most.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import EditSet, Graph, Instance, Mode, Pair, apply_edits, pair


@dataclass(frozen=True)
class SolveResult:
    feasible: bool
    opt_size: int | None
    witness: EditSet | None


class _Bits:
    def __init__(self, g: Graph):
        self.labels = g.vertices
        self.index = {v: i for i, v in enumerate(self.labels)}
        self.n = len(self.labels)
        self.adj = [0] * self.n
        for u, v in g.edges():
            a, b = self.index[u], self.index[v]
            self.adj[a] |= 1 << b
            self.adj[b] |= 1 << a


def _low(x: int) -> int:
    return (x & -x).bit_length() - 1


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _find_diamond(adj: list[int]) -> tuple[int, int, int, int] | None:
    for u, au in enumerate(adj):
        for v in _bits(au >> (u + 1) << (u + 1)):
            c = au & adj[v]
            for x in _bits(c):
                far = c & ~adj[x] & ~(1 << x)
                if far:
                    return u, v, x, _low(far)
    return None


def _has_diamond(adj: list[int]) -> bool:
    return _find_diamond(adj) is not None


def _diamond_pairs(d: tuple[int, int, int, int], editing: bool) -> list[tuple[int, int]]:
    u, v, x, y = d
    out = [(u, v), (u, x), (u, y), (v, x), (v, y)]
    if editing:
        out.append((x, y))
    return [(a, b) if a < b else (b, a) for a, b in out]


def _pack(adj: list[int], n: int, budget: int, blocked: set, editing: bool):
    """Greedy lower bound from diamonds with pairwise disjoint editable pairs.

    Returns (prune, branch_pairs): ``prune`` when more disjoint diamonds than
    budget exist (or one cannot be fixed at all); otherwise the unblocked
    pairs of the diamond with the fewest of them.
    """
    used: set = set()
    count = 0
    best = None
    for u, au in enumerate(adj):
        for v in _bits(au >> (u + 1) << (u + 1)):
            c = au & adj[v]
            for x in _bits(c):
                for y in _bits(c & ~adj[x] & (~0 << (x + 1))):
                    free = [p for p in _diamond_pairs((u, v, x, y), editing) if p not in blocked]
                    if not free:
                        return True, None
                    if best is None or len(free) < len(best):
                        best = free
                    if used.isdisjoint(free):
                        used.update(free)
                        count += 1
                        if count > budget:
                            return True, None
    return False, best


def _search(adj: list[int], n: int, budget: int, blocked: set, editing: bool,
            path: list[tuple[int, int]]) -> bool:
    prune, branch = _pack(adj, n, budget, blocked, editing)
    if prune:
        return False
    if branch is None:
        return True
    for a, b in branch:
        adj[a] ^= 1 << b
        adj[b] ^= 1 << a
        blocked.add((a, b))
        path.append((a, b))
        if _search(adj, n, budget - 1, blocked, editing, path):
            adj[a] ^= 1 << b
            adj[b] ^= 1 << a
            return True
        path.pop()
        blocked.discard((a, b))
        adj[a] ^= 1 << b
        adj[b] ^= 1 << a
    return False


def _witness(g: Graph, bits: _Bits, path) -> EditSet:
    return EditSet.from_pairs(g, [(bits.labels[a], bits.labels[b]) for a, b in path])


def solve_within(inst: Instance, budget: int) -> EditSet | None:
    """A solution with at most ``budget`` edits, or None."""
    bits = _Bits(inst.graph)
    path: list[tuple[int, int]] = []
    ok = _search(list(bits.adj), bits.n, budget, set(), inst.mode is Mode.EDITING, path)
    return _witness(inst.graph, bits, path) if ok else None


def solve(inst: Instance) -> SolveResult:
    """Exact decision for budget ``inst.k``; the optimum by iterative deepening."""
    for budget in range(inst.k + 1):
        sol = solve_within(inst, budget)
        if sol is not None:
            return SolveResult(True, len(sol), sol)
    return SolveResult(False, None, None)


def is_yes(inst: Instance) -> bool:
    return solve_within(inst, inst.k) is not None


def optimum(inst: Instance, limit: int) -> int | None:
    """Minimum number of edits if it is at most ``limit``."""
    res = solve(Instance(inst.graph, limit, inst.mode))
    return res.opt_size


def is_solution(g: Graph, edits: EditSet, k: int, mode: Mode) -> bool:
    if mode is Mode.DELETION and edits.additions:
        return False
    if len(edits) > k:
        return False
    try:
        h = apply_edits(g, edits)
    except ValueError:
        return False
    return not _has_diamond(_Bits(h).adj)


def enumerate_min_solutions(inst: Instance, cap: int = 4) -> list[EditSet]:
    """Every minimum solution, by trying all pair subsets of growing size."""
    g = inst.graph
    if g.n > 10 or cap > 4:
        raise ValueError(f"exhaustive enumeration refused: n={g.n}, cap={cap} (limits 10 and 4)")
    bits = _Bits(g)
    n = bits.n
    if inst.mode is Mode.EDITING:
        candidates = [(a, b) for a in range(n) for b in range(a + 1, n)]
    else:
        candidates = [(a, b) for a in range(n) for b in range(a + 1, n) if bits.adj[a] >> b & 1]
    for size in range(cap + 1):
        found = []
        for combo in itertools.combinations(candidates, size):
            adj = list(bits.adj)
            for a, b in combo:
                adj[a] ^= 1 << b
                adj[b] ^= 1 << a
            if not _has_diamond(adj):
                found.append(_witness(g, bits, combo))
        if found:
            return found
    raise ValueError(f"optimum exceeds cap {cap}")


def complete_diamonds(inst: Instance) -> SolveResult:
    """Completion: every diamond forces its missing edge, so add them all."""
    g = inst.graph.copy()
    added = []
    bits = _Bits(g)
    adj = list(bits.adj)
    while (d := _find_diamond(adj)) is not None:
        _, _, x, y = d
        adj[x] |= 1 << y
        adj[y] |= 1 << x
        added.append((x, y))
    edits = EditSet(frozenset(pair(bits.labels[a], bits.labels[b]) for a, b in added))
    ok = len(edits) <= inst.k
    return SolveResult(ok, len(edits) if ok else None, edits if ok else None)


# maximal cliques

def enumerate_maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """Bron-Kerbosch with Tomita pivoting; output sorted canonically."""
    bits = _Bits(g)
    adj = bits.adj
    out: list[frozenset[int]] = []

    def expand(r: list[int], p: int, x: int) -> None:
        if not p and not x:
            out.append(frozenset(bits.labels[i] for i in r))
            return
        pivot = max(_bits(p | x), key=lambda w: (p & adj[w]).bit_count())
        for v in list(_bits(p & ~adj[pivot])):
            r.append(v)
            expand(r, p & adj[v], x & adj[v])
            r.pop()
            p &= ~(1 << v)
            x |= 1 << v

    if bits.n:
        expand([], (1 << bits.n) - 1, 0)
    return sorted(out, key=lambda c: sorted(c))


@dataclass
class CliqueClassification:
    k: int
    big_type1: list[frozenset[int]]
    small_type1: list[frozenset[int]]
    type2: list[frozenset[int]]

    @property
    def type1(self) -> list[frozenset[int]]:
        return sorted(self.big_type1 + self.small_type1, key=sorted)

    @property
    def all(self) -> list[frozenset[int]]:
        return sorted(self.big_type1 + self.small_type1 + self.type2, key=sorted)


def is_big(clique, k: int) -> bool:
    return len(clique) >= 3 * k + 2


def classify_cliques(g: Graph, k: int) -> CliqueClassification:
    cliques = enumerate_maximal_cliques(g)
    type1 = [False] * len(cliques)
    for i, j in itertools.combinations(range(len(cliques)), 2):
        if len(cliques[i] & cliques[j]) >= 2:
            type1[i] = type1[j] = True
    res = CliqueClassification(k, [], [], [])
    for c, t in zip(cliques, type1):
        if not t:
            res.type2.append(c)
        elif is_big(c, k):
            res.big_type1.append(c)
        else:
            res.small_type1.append(c)
    return res


def vulnerable_set_bruteforce(g: Graph, k: int) -> set[int]:
    cls = classify_cliques(g, k)
    small = set().union(*cls.small_type1)
    out = set(small)
    for c in cls.type2:
        if c & small:
            out |= c
    return out


@dataclass
class BruteLabels:
    """Partition marks recomputed from the full maximal-clique list."""

    type1: set[int]
    small: set[int]
    vulnerable: set[int]
    type1_edges: set[Pair]


def bruteforce_labels(g: Graph, k: int) -> BruteLabels:
    cls = classify_cliques(g, k)
    type1 = set().union(*cls.type1)
    small = set().union(*cls.small_type1)
    edges = set()
    for c in cls.type1:
        edges.update(pair(a, b) for a, b in itertools.combinations(c, 2))
    return BruteLabels(type1, small, vulnerable_set_bruteforce(g, k), edges)
