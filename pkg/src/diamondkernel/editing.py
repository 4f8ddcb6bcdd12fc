"""Vertex-deletion rules for diamond-free editing and the full kernelization."""

from __future__ import annotations

from math import comb

from .graph import Instance, Mode, common_neighbors
from .kernel import (KernelResult, delete_vertex_logged, part_counts, rule_counts,
                     size_no_instance, zero_budget)
from .partition import Part, PartitionLabels, compute_partition, guarded_cliques
from .reduction import RuleApplication, RuleId, reduce_sunflower

MarkedSet = frozenset[int]


def editing_bound(k: int) -> int:
    """Vertex count no reduced yes-instance can exceed once Rules 3-5 are done.

    Small type-I vertices (18k^3 + 2k), at most 6k^2 big type-I cliques of at
    most 18k^3 + 6k^2 + 2k vertices each, and (k+1)(2k+3) marked vertices for
    each pair of small type-I vertices.
    """
    s = 18 * k**3 + 2 * k
    return s + 6 * k**2 * (18 * k**3 + 6 * k**2 + 2 * k) + comb(s, 2) * (k + 1) * (2 * k + 3)


def _rule3_candidate(inst: Instance, labels: PartitionLabels) -> int | None:
    threshold = 3 * inst.k + 3
    for x in sorted(labels.vertex_type1 - labels.vertex_vulnerable):
        type1 = guarded_cliques(inst, labels, x).type1_cliques()
        if len(type1) == 1 and len(type1[0]) >= threshold:
            return x
    return None


def rule3_apply_exhaustively(inst: Instance, labels: PartitionLabels):
    """Delete guarded vertices private to one type-I clique of >= 3k+3 vertices."""
    inst = inst.copy()
    trace: list[RuleApplication] = []
    while (x := _rule3_candidate(inst, labels)) is not None:
        delete_vertex_logged(inst, x, RuleId.R3_DELETE_VERTEX, trace)
        labels = compute_partition(inst, check=False)
    return inst, trace


def rule4_apply_exhaustively(inst: Instance, labels: PartitionLabels):
    """Delete guarded vertices that lie in no type-I maximal clique."""
    inst = inst.copy()
    trace: list[RuleApplication] = []
    while True:
        free = labels.parts()[Part.GUARDED_TYPE2]
        if not free:
            return inst, trace
        delete_vertex_logged(inst, free[0], RuleId.R4_DELETE_VERTEX, trace)
        labels = compute_partition(inst, check=False)


def _private(g, u: int, v: int, small: set[int]) -> list[int]:
    return sorted(common_neighbors(g, u, v) - small)


def rule5_mark(inst: Instance, labels: PartitionLabels) -> MarkedSet:
    """Keep k+1 common neighbours outside S(G) for every pair in S(G).

    When a pair has at most k of them, each of those also keeps k+1 common
    neighbours with either end.  Lowest labels are kept first.
    """
    g, k = inst.graph, inst.k
    small = labels.vertex_small
    order = sorted(small)
    marked: set[int] = set()
    for i, u in enumerate(order):
        for v in order[i + 1:]:
            nuv = _private(g, u, v, small)
            marked.update(nuv[:k + 1])
            if len(nuv) <= k:
                for w in nuv:
                    marked.update(_private(g, u, w, small)[:k + 1])
                    marked.update(_private(g, v, w, small)[:k + 1])
    return frozenset(marked)


def rule5_apply(inst: Instance, labels: PartitionLabels, marks: MarkedSet):
    """Delete every unmarked vertex of T(G) in one batch."""
    inst = inst.copy()
    trace: list[RuleApplication] = []
    for x in sorted(labels.only_type2 - marks):
        delete_vertex_logged(inst, x, RuleId.R5_DELETE_VERTEX, trace)
    return inst, trace


def kernelize_editing(inst: Instance) -> KernelResult:
    """Sunflower rules, then Rules 4, 3 and 5 until none applies, then the size check."""
    if inst.mode is not Mode.EDITING:
        raise ValueError("kernelize_editing needs an editing-mode instance")
    trace: list[RuleApplication] = []
    stats: dict = {"n_in": inst.graph.n, "m_in": inst.graph.m, "k_in": inst.k}
    inst, sunflower = reduce_sunflower(inst.copy())
    trace += sunflower
    if not trace or trace[-1].rule is not RuleId.BUDGET_NO_INSTANCE:
        if inst.k == 0:
            inst = zero_budget(inst, trace)
        else:
            labels = compute_partition(inst, check=False)
            stats["parts_before"] = part_counts(labels)
            while True:
                before = len(trace)
                inst, t = rule4_apply_exhaustively(inst, labels)
                trace += t
                labels = compute_partition(inst, check=False)
                inst, t = rule3_apply_exhaustively(inst, labels)
                trace += t
                labels = compute_partition(inst, check=False)
                inst, t = rule5_apply(inst, labels, rule5_mark(inst, labels))
                trace += t
                labels = compute_partition(inst, check=False)
                if len(trace) == before:
                    break
            stats["parts_after"] = part_counts(labels)
            inst = size_no_instance(inst, editing_bound(inst.k), trace)
    result = KernelResult(inst, trace, stats)
    stats.update(n_out=inst.graph.n, m_out=inst.graph.m, k_out=inst.k,
                 rules=rule_counts(trace), answer=result.answer)
    return result
