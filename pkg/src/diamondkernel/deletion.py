"""Cubic-vertex kernel for diamond-free edge deletion (rules DD-1 to DD-4)."""

from __future__ import annotations

from .graph import Instance, Mode
from .kernel import (KernelResult, delete_vertex_logged, part_counts, rule_counts,
                     size_no_instance, zero_budget)
from .partition import PartitionLabels, compute_partition
from .reduction import (RuleApplication, RuleId, dd2_mark_and_check, no_instance,
                        reduce_sunflower)


def deletion_bound(k: int) -> int:
    return 18 * k**3 + 2 * k


def dd3_strip(inst: Instance, labels: PartitionLabels):
    """Drop every edge and vertex outside the type-I maximal cliques."""
    inst = inst.copy()
    g = inst.graph
    trace: list[RuleApplication] = []
    for u, v in list(g.edges()):
        if (u, v) not in labels.edge_type1:
            g.remove_edge(u, v)
            trace.append(RuleApplication(RuleId.DD3_STRIP, (u, v), inst.k))
    for v in g.vertices:
        if v not in labels.vertex_type1:
            delete_vertex_logged(inst, v, RuleId.DD3_STRIP, trace)
    return inst, trace


def dd4_apply_exhaustively(inst: Instance, labels: PartitionLabels):
    """Delete vertices in no small type-I maximal clique, one at a time."""
    inst = inst.copy()
    trace: list[RuleApplication] = []
    while True:
        rest = sorted(labels.vertices - labels.vertex_small)
        if not rest:
            return inst, trace
        delete_vertex_logged(inst, rest[0], RuleId.DD4_DELETE_VERTEX, trace)
        labels = compute_partition(inst, check=False)


def kernelize_deletion(inst: Instance) -> KernelResult:
    if inst.mode is not Mode.DELETION:
        raise ValueError("kernelize_deletion needs a deletion-mode instance")
    trace: list[RuleApplication] = []
    stats: dict = {"n_in": inst.graph.n, "m_in": inst.graph.m, "k_in": inst.k}
    inst, sunflower = reduce_sunflower(inst.copy())
    trace += sunflower
    if not trace or trace[-1].rule is not RuleId.BUDGET_NO_INSTANCE:
        if inst.k == 0:
            inst = zero_budget(inst, trace, RuleId.DD3_STRIP)
        elif dd2_mark_and_check(inst)[1]:
            trace.append(RuleApplication(RuleId.DD2_NO_INSTANCE, None, 0))
            inst = no_instance(Mode.DELETION)
        else:
            labels = compute_partition(inst, check=False)
            stats["parts_before"] = part_counts(labels)
            inst, t = dd3_strip(inst, labels)
            trace += t
            labels = compute_partition(inst, check=False)
            inst, t = dd4_apply_exhaustively(inst, labels)
            trace += t
            stats["parts_after"] = part_counts(compute_partition(inst, check=False))
            inst = size_no_instance(inst, deletion_bound(inst.k), trace)
    result = KernelResult(inst, trace, stats)
    stats.update(n_out=inst.graph.n, m_out=inst.graph.m, k_out=inst.k,
                 rules=rule_counts(trace), answer=result.answer)
    return result
