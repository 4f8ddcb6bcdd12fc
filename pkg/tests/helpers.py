"""Shared instance streams and brute-force references for the tests."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from diamondkernel.deletion import dd3_strip
from diamondkernel.editing import _rule3_candidate, rule5_mark
from diamondkernel.generate import GenSpec, gen_clique_union, gen_gnp, gen_planted
from diamondkernel.graph import Graph, Instance, Mode, delete_vertex
from diamondkernel.partition import Part, compute_partition
from diamondkernel.reduction import (dd2_mark_and_check, is_no_instance_trace, is_reduced,
                                     no_instance, reduce_sunflower, rule1_find_and_apply,
                                     rule2_find_and_apply)


def brute_max_matching(g: Graph) -> int:
    """Maximum matching size by memoised recursion over vertex subsets."""
    vs = g.vertices
    index = {v: i for i, v in enumerate(vs)}
    nbr = [0] * len(vs)
    for u, v in g.edges():
        nbr[index[u]] |= 1 << index[v]
        nbr[index[v]] |= 1 << index[u]

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if not mask:
            return 0
        low = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << low)
        out = best(rest)
        cand = nbr[low] & rest
        while cand:
            b = cand & -cand
            out = max(out, 1 + best(rest & ~b))
            cand ^= b
        return out

    return best((1 << len(vs)) - 1)


def is_matching(g: Graph, pairs) -> bool:
    seen = set()
    for u, v in pairs:
        if not g.has_edge(u, v) or u in seen or v in seen:
            return False
        seen |= {u, v}
    return True


def harness_instances(mode: Mode, count: int, seed: int = 0):
    """The equivalence harness: G(n,p) and planted instances, n in [6,12], k in [0,4]."""
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(6, 12)
        if i % 2 == 0:
            yield gen_gnp(GenSpec(n=n, p=rng.choice([0.3, 0.5, 0.7]), k=rng.randint(0, 4),
                                  mode=mode, seed=seed * 100003 + i))
        else:
            yield gen_planted(GenSpec(kind="planted", n=n, clique_sizes=(2, 5),
                                      r=rng.randint(0, 4), mode=mode, seed=seed * 100003 + i))


def mixed_instance(s: int, mode: Mode, n_range=(5, 10), k_range=(1, 3)) -> Instance:
    """Seeded instance from one of three families, dense ones favoured."""
    rng = random.Random(s)
    n = rng.randint(*n_range)
    k = rng.randint(*k_range)
    family = s % 4
    if family == 0:
        return gen_gnp(GenSpec(n=n, p=rng.choice([0.5, 0.7, 0.9]), k=k, mode=mode, seed=s))
    if family == 1:
        try:
            inst = gen_planted(GenSpec(kind="planted", n=n, clique_sizes=(2, 5),
                                       r=rng.randint(1, 3), mode=mode, seed=s))
            inst.k = min(inst.k, k_range[1])
            return inst
        except Exception:
            pass
    return gen_clique_union(GenSpec(kind="cliques", n=n, clique_sizes=(3, n),
                                    r=rng.randint(0, 2), k=k, mode=mode, seed=s))


def reduced(inst: Instance) -> Instance | None:
    red, trace = reduce_sunflower(inst.copy())
    if is_no_instance_trace(trace) or not is_reduced(red):
        return None
    return red


def _delete(inst: Instance, v: int) -> Instance:
    return Instance(delete_vertex(inst.graph, v), inst.k, inst.mode)


def _case(rule: str, s: int):
    """One before/after pair for ``rule`` from seed ``s``, or None."""
    deletion_rules = {"DD1", "DD2", "DD3", "DD4"}
    mode = Mode.DELETION if rule in deletion_rules else Mode.EDITING
    # the vertex-deletion rules need a big clique, which n <= 10 only allows for small k
    k_range = (1, 1) if rule in {"R3", "DD4"} and s % 2 else (1, 3)
    if rule == "R3":
        # one guarded vertex private to a clique of >= 3k+3 vertices: few, large cliques
        rng = random.Random(s)
        n = rng.randint(7, 10)
        inst = gen_clique_union(GenSpec(kind="cliques", n=n, clique_sizes=(3, n), r=rng.randint(0, 1),
                                        k=rng.choice([1, 1, 2]), mode=mode, seed=s))
    else:
        inst = mixed_instance(s, mode, k_range=k_range)
    if rule == "R1":
        step = rule1_find_and_apply(inst)
        return (inst, step[0]) if step else None
    if rule in ("R2", "DD1"):
        step = rule2_find_and_apply(inst)
        return (inst, step[0]) if step else None
    red, trace = reduce_sunflower(inst.copy())
    if is_no_instance_trace(trace):
        return None
    if rule == "DD2":
        if red.k >= 1 and dd2_mark_and_check(red)[1]:
            return red, no_instance(Mode.DELETION)
        return None
    if not is_reduced(red):
        return None
    labels = compute_partition(red)
    if rule == "R3":
        x = _rule3_candidate(red, labels)
        return (red, _delete(red, x)) if x is not None else None
    if rule == "R4":
        free = labels.parts()[Part.GUARDED_TYPE2]
        return (red, _delete(red, free[0])) if free else None
    if rule == "R5":
        unmarked = sorted(labels.only_type2 - rule5_mark(red, labels))
        return (red, _delete(red, unmarked[0])) if unmarked else None
    stripped, strip_trace = dd3_strip(red, labels)
    if rule == "DD3":
        return (red, stripped) if strip_trace else None
    if rule == "DD4":
        after = compute_partition(stripped, check=False)
        rest = sorted(after.vertices - after.vertex_small)
        return (stripped, _delete(stripped, rest[0])) if rest else None
    raise ValueError(rule)


RULES = ("R1", "R2", "R3", "R4", "R5", "DD1", "DD2", "DD3", "DD4")


def rule_cases(rule: str, need: int, max_seeds: int = 40000):
    """``need`` before/after pairs for one rule application, n <= 10 and k <= 3."""
    out = []
    for s in range(max_seeds):
        case = _case(rule, s)
        if case is not None:
            out.append(case)
            if len(out) == need:
                break
    return out


def reduced_editing_yes_instances(need: int, max_n: int = 8, max_opt: int = 3):
    """Reduced editing yes-instances with a nonzero optimum of at most ``max_opt``."""
    from diamondkernel.oracle import optimum

    out = []
    for s in itertools.count():
        if len(out) == need or s > 50000:
            return out
        red = reduced(mixed_instance(s, Mode.EDITING, n_range=(5, max_n)))
        if red is None or red.graph.n > max_n or red.k == 0:
            continue
        opt = optimum(red, min(max_opt, red.k))
        if opt:
            out.append((red, opt))
