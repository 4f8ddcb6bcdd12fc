"""Sunflower rules shared by both kernels, and the permanent-edge check.

Rule 1 adds a non-edge whose common neighbourhood holds k+1 disjoint edges,
Rule 2 (DD-1 in deletion mode) deletes an edge whose common neighbourhood
holds k+1 disjoint non-edges.  With k = 0 either pattern is itself a diamond
that no edit is left to fix, so the instance is declared a no-instance
instead of driving the budget negative.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .graph import Graph, Instance, Mode, Pair, common_neighbors, diamond_graph, pair
from .matching import disjoint_adjacent_pairs, disjoint_nonadjacent_pairs

Target = Union[Pair, int, None]


class RuleId(str, enum.Enum):
    R1_ADD = "R1_add"
    R2_DELETE = "R2_delete"
    DD2_NO_INSTANCE = "DD2_no_instance"
    R3_DELETE_VERTEX = "R3_delete_vertex"
    R4_DELETE_VERTEX = "R4_delete_vertex"
    R5_DELETE_VERTEX = "R5_delete_vertex"
    DD3_STRIP = "DD3_strip"
    DD4_DELETE_VERTEX = "DD4_delete_vertex"
    SIZE_NO_INSTANCE = "SIZE_NO_INSTANCE"
    # a sunflower pattern (hence a diamond) survives with k = 0
    BUDGET_NO_INSTANCE = "BUDGET_NO_INSTANCE"


NO_INSTANCE_RULES = frozenset(
    {RuleId.DD2_NO_INSTANCE, RuleId.SIZE_NO_INSTANCE, RuleId.BUDGET_NO_INSTANCE}
)


@dataclass(frozen=True)
class RuleApplication:
    rule: RuleId
    target: Target
    k_after: int


def no_instance(mode: Mode = Mode.EDITING) -> Instance:
    """The canonical trivial no-instance: one diamond and no budget."""
    return Instance(diamond_graph(1, 2, 3, 4), 0, mode)


def is_no_instance_trace(trace: list[RuleApplication]) -> bool:
    return bool(trace) and trace[-1].rule in NO_INSTANCE_RULES


def _rule1_candidate(g: Graph, k: int) -> Pair | None:
    need = 2 * k + 2
    for u, v in g.non_edges():
        if len(common_neighbors(g, u, v)) < need:
            continue
        if disjoint_adjacent_pairs(g, u, v, k + 1) is not None:
            return (u, v)
    return None


def _rule2_candidate(g: Graph, k: int) -> Pair | None:
    need = 2 * k + 2
    for u, v in g.edges():
        if len(common_neighbors(g, u, v)) < need:
            continue
        if disjoint_nonadjacent_pairs(g, u, v, k + 1) is not None:
            return (u, v)
    return None


def _budget_exhausted(inst: Instance, target: Pair):
    return no_instance(inst.mode), RuleApplication(RuleId.BUDGET_NO_INSTANCE, target, 0)


def rule1_find_and_apply(inst: Instance) -> tuple[Instance, RuleApplication] | None:
    """Add the first non-edge (canonical order) that Rule 1 forces."""
    if inst.mode is not Mode.EDITING:
        raise ValueError("Rule 1 adds edges and only applies in editing mode")
    uv = _rule1_candidate(inst.graph, inst.k)
    if uv is None:
        return None
    if inst.k == 0:
        return _budget_exhausted(inst, uv)
    out = inst.copy()
    out.graph.add_edge(*uv)
    out.k -= 1
    return out, RuleApplication(RuleId.R1_ADD, uv, out.k)


def rule2_find_and_apply(inst: Instance) -> tuple[Instance, RuleApplication] | None:
    """Delete the first edge (canonical order) that Rule 2 / DD-1 forces."""
    uv = _rule2_candidate(inst.graph, inst.k)
    if uv is None:
        return None
    if inst.k == 0:
        return _budget_exhausted(inst, uv)
    out = inst.copy()
    out.graph.remove_edge(*uv)
    out.k -= 1
    return out, RuleApplication(RuleId.R2_DELETE, uv, out.k)


def reduce_sunflower(inst: Instance) -> tuple[Instance, list[RuleApplication]]:
    """Apply the sunflower rules of the instance's mode to a fixed point.

    The scan restarts from the first pair after every application.  If the
    budget runs out while a pattern remains, the canonical no-instance is
    returned and the trace ends with a ``BUDGET_NO_INSTANCE`` record.
    """
    trace: list[RuleApplication] = []
    while True:
        step = None
        if inst.mode is Mode.EDITING:
            step = rule1_find_and_apply(inst)
        if step is None:
            step = rule2_find_and_apply(inst)
        if step is None:
            return inst, trace
        inst, record = step
        trace.append(record)
        if record.rule in NO_INSTANCE_RULES:
            return inst, trace


def _has_adjacent_pair(g: Graph, vs: set[int]) -> bool:
    return any(g.neighbors(w) & vs for w in vs)


def permanent_edges(g: Graph, k: int) -> set[Pair]:
    """Edges no solution of size <= k can delete.

    An edge is marked when its common neighbourhood holds k+1 disjoint edges.
    For k <= 1 it is also marked when the common neighbourhood holds k+1
    pairwise adjacent vertices (one vertex, resp. one edge): deleting it would
    force k more deletions inside that clique.  The matching test alone misses
    the edges of a 5-vertex clique at k = 1 (three common neighbours in the
    clique carry only one disjoint edge), and then two big cliques can share
    more than one vertex without a permanent diamond, which DD-4 relies on.
    """
    need = 2 * k + 2
    marks = set()
    for u, v in g.edges():
        cn = common_neighbors(g, u, v)
        if len(cn) >= need and disjoint_adjacent_pairs(g, u, v, k + 1):
            marks.add((u, v))
        elif k == 1 and _has_adjacent_pair(g, cn) or k == 0 and cn:
            marks.add((u, v))
    return marks


def dd2_mark_and_check(inst: Instance) -> tuple[set[Pair], bool]:
    """Permanent edges, and whether some diamond consists of them only."""
    g = inst.graph
    permanent = permanent_edges(g, inst.k)
    for u, v in sorted(permanent):
        cn = sorted(w for w in common_neighbors(g, u, v)
                    if pair(u, w) in permanent and pair(v, w) in permanent)
        for i, x in enumerate(cn):
            nb = g.neighbors(x)
            for y in cn[i + 1:]:
                if y not in nb:
                    return permanent, True
    return permanent, False


def is_reduced(inst: Instance) -> bool:
    """No sunflower rule of the instance's mode applies.

    In deletion mode this also requires that the permanent-edge check does
    not report a no-instance.
    """
    g, k = inst.graph, inst.k
    if _rule2_candidate(g, k) is not None:
        return False
    if inst.mode is Mode.EDITING:
        return _rule1_candidate(g, k) is None
    return not dd2_mark_and_check(inst)[1]

