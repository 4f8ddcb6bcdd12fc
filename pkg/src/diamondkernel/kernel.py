"""Shared pieces of the two kernelization drivers."""

from __future__ import annotations

from dataclasses import dataclass, field

from .diamonds import is_diamond_free
from .graph import Instance
from .partition import PartitionLabels
from .reduction import NO_INSTANCE_RULES, RuleApplication, RuleId, no_instance


@dataclass
class KernelResult:
    instance: Instance
    trace: list[RuleApplication]
    stats: dict = field(default_factory=dict)

    @property
    def is_no_instance(self) -> bool:
        return bool(self.trace) and self.trace[-1].rule in NO_INSTANCE_RULES

    @property
    def answer(self) -> str:
        """'yes' or 'no' when the kernel is trivially decided, else 'unknown'."""
        if self.is_no_instance:
            return "no"
        if is_diamond_free(self.instance.graph):
            return "yes"
        return "unknown"


def part_counts(labels: PartitionLabels) -> dict[str, int]:
    return {p.value: len(vs) for p, vs in labels.parts().items()}


def rule_counts(trace: list[RuleApplication]) -> dict[str, int]:
    out: dict[str, int] = {}
    for rec in trace:
        out[rec.rule.value] = out.get(rec.rule.value, 0) + 1
    return out


def delete_vertex_logged(inst: Instance, v: int, rule: RuleId, trace: list) -> None:
    inst.graph.remove_vertex(v)
    trace.append(RuleApplication(rule, v, inst.k))


def zero_budget(inst: Instance, trace: list[RuleApplication],
                rule: RuleId = RuleId.R4_DELETE_VERTEX) -> Instance:
    """With k = 0 the question is just whether the graph is diamond-free.

    A diamond-free graph is answered by the empty kernel (every vertex is a
    guarded type-II vertex, so Rule 4 or DD-3 removes it); otherwise the canonical
    no-instance.
    """
    if not is_diamond_free(inst.graph):
        trace.append(RuleApplication(RuleId.BUDGET_NO_INSTANCE, None, 0))
        return no_instance(inst.mode)
    inst = inst.copy()
    for v in inst.graph.vertices:
        delete_vertex_logged(inst, v, rule, trace)
    return inst


def size_no_instance(inst: Instance, bound: int, trace: list[RuleApplication]) -> Instance:
    if inst.graph.n <= bound:
        return inst
    trace.append(RuleApplication(RuleId.SIZE_NO_INSTANCE, None, 0))
    return no_instance(inst.mode)
