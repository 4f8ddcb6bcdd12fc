"""Instance, trace and edit-set text formats.

Instance files are DIMACS-flavoured::

    c k 4
    p edge 4 5
    e 1 2
    ...

Vertex ids in a file are 1..n.  A graph whose labels are not exactly 1..n
(a kernel, after vertex deletions) is written with ``c label <id> <label>``
lines so that parsing restores the original labels.
"""

from __future__ import annotations

import io
import os
from pathlib import Path
from typing import IO, Iterable, Union

from .graph import EditSet, Graph, Instance, Mode, pair
from .reduction import NO_INSTANCE_RULES, RuleApplication, RuleId, no_instance

Source = Union[str, os.PathLike, IO[str]]


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _lines(source: Source) -> list[str]:
    if isinstance(source, (str, os.PathLike)):
        return Path(source).read_text().splitlines()
    return source.read().splitlines()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def parse_instance(source: Source, k: int | None = None,
                   mode: Mode | str = Mode.EDITING) -> Instance:
    """Read an instance; an explicit ``k`` overrides a ``c k`` comment."""
    header = None
    file_k = None
    labels: dict[int, int] = {}
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(_lines(source), 1):
        toks = raw.split()
        if not toks:
            continue
        kind = toks[0]
        if kind == "c":
            if len(toks) == 3 and toks[1] == "k":
                file_k = _int(toks[2], lineno)
            elif len(toks) == 4 and toks[1] == "label":
                labels[_int(toks[2], lineno)] = _int(toks[3], lineno)
        elif kind == "p":
            if header is not None:
                raise ParseError("second problem line", lineno)
            if len(toks) != 4 or toks[1] != "edge":
                raise ParseError("expected 'p edge <n> <m>'", lineno)
            header = (_int(toks[2], lineno), _int(toks[3], lineno), lineno)
            if header[0] < 0 or header[1] < 0:
                raise ParseError("negative counts", lineno)
        elif kind == "e":
            if header is None:
                raise ParseError("edge before problem line", lineno)
            if len(toks) != 3:
                raise ParseError("expected 'e <u> <v>'", lineno)
            edges.append((_int(toks[1], lineno), _int(toks[2], lineno), lineno))
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)
    if header is None:
        raise ParseError("missing 'p edge' line")
    n, m, hline = header
    seen: set[tuple[int, int]] = set()
    for u, v, lineno in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"vertex id out of range 1..{n}", lineno)
        if u == v:
            raise ParseError(f"self-loop on {u}", lineno)
        p = pair(u, v)
        if p in seen:
            raise ParseError(f"duplicate edge {u} {v}", lineno)
        seen.add(p)
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}", hline)
    for i in labels:
        if not 1 <= i <= n:
            raise ParseError(f"label line for id {i} outside 1..{n}")
    relabel = {i: labels.get(i, i) for i in range(1, n + 1)}
    if len(set(relabel.values())) != n:
        raise ParseError("label lines map two ids to the same label")
    budget = k if k is not None else file_k
    if budget is None:
        raise ParseError("no budget: pass k explicitly or add a 'c k <k>' line")
    if budget < 0:
        raise ParseError(f"negative budget {budget}")
    g = Graph(relabel.values(), ((relabel[u], relabel[v]) for u, v, _ in edges))
    return Instance(g, budget, Mode(mode))


def format_instance(inst: Instance | Graph, k: int | None = None) -> str:
    """Canonical serialization: ids follow sorted label order."""
    if isinstance(inst, Instance):
        g, k = inst.graph, inst.k if k is None else k
    else:
        g = inst
    order = g.vertices
    ident = {v: i for i, v in enumerate(order, 1)}
    out = io.StringIO()
    if k is not None:
        out.write(f"c k {k}\n")
    if order != list(range(1, len(order) + 1)):
        for v in order:
            out.write(f"c label {ident[v]} {v}\n")
    out.write(f"p edge {g.n} {g.m}\n")
    for u, v in g.edges():
        out.write(f"e {ident[u]} {ident[v]}\n")
    return out.getvalue()


def write_instance(inst: Instance, path: str | os.PathLike) -> None:
    Path(path).write_text(format_instance(inst))


# traces

def format_trace(trace: Iterable[RuleApplication]) -> str:
    lines = []
    for rec in trace:
        if rec.target is None:
            target = "-"
        elif isinstance(rec.target, tuple):
            target = f"{rec.target[0]} {rec.target[1]}"
        else:
            target = str(rec.target)
        lines.append(f"{rec.rule.value} {target} {rec.k_after}\n")
    return "".join(lines)


def parse_trace(source: Source) -> list[RuleApplication]:
    out = []
    for lineno, raw in enumerate(_lines(source), 1):
        toks = raw.split()
        if not toks:
            continue
        try:
            rule = RuleId(toks[0])
        except ValueError:
            raise ParseError(f"unknown rule id {toks[0]!r}", lineno) from None
        if len(toks) == 4:
            target = pair(_int(toks[1], lineno), _int(toks[2], lineno))
        elif len(toks) == 3:
            target = None if toks[1] == "-" else _int(toks[1], lineno)
        else:
            raise ParseError("expected '<rule> <target> <k_after>'", lineno)
        out.append(RuleApplication(rule, target, _int(toks[-1], lineno)))
    return out


def replay_trace(inst: Instance, trace: Iterable[RuleApplication]) -> Instance:
    """Fold a trace over its input instance."""
    inst = inst.copy()
    for rec in trace:
        if rec.rule in NO_INSTANCE_RULES:
            return no_instance(inst.mode)
        g = inst.graph
        if isinstance(rec.target, tuple):
            if rec.rule is RuleId.R1_ADD:
                g.add_edge(*rec.target)
            else:
                g.remove_edge(*rec.target)
        elif rec.target is not None:
            g.remove_vertex(rec.target)
        inst.k = rec.k_after
    return inst


# edit sets

def format_editset(edits: EditSet) -> str:
    lines = [f"add {u} {v}\n" for u, v in sorted(edits.additions)]
    lines += [f"del {u} {v}\n" for u, v in sorted(edits.deletions)]
    return "".join(lines)


def parse_editset(source: Source) -> EditSet:
    adds, dels = set(), set()
    for lineno, raw in enumerate(_lines(source), 1):
        toks = raw.split()
        if not toks or toks[0] == "c":
            continue
        if len(toks) != 3 or toks[0] not in ("add", "del"):
            raise ParseError("expected 'add <u> <v>' or 'del <u> <v>'", lineno)
        u, v = _int(toks[1], lineno), _int(toks[2], lineno)
        if u == v:
            raise ParseError(f"self-loop on {u}", lineno)
        p = pair(u, v)
        if p in adds or p in dels:
            raise ParseError(f"pair {u} {v} listed twice", lineno)
        (adds if toks[0] == "add" else dels).add(p)
    return EditSet(frozenset(adds), frozenset(dels))
