"""Command-line interface.

Exit codes: 0 for yes / a valid solution, 1 for no / an invalid solution,
2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .deletion import kernelize_deletion
from .diamonds import count_diamonds
from .editing import kernelize_editing
from .formats import (ParseError, format_editset, format_instance, format_trace,
                      parse_editset, parse_instance)
from .generate import GenerationError, GenSpec, generate
from .graph import GraphError, Mode
from .oracle import classify_cliques, is_solution, solve
from .partition import compute_partition
from .reduction import is_no_instance_trace, reduce_sunflower

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2
INSTANCE_SUFFIXES = (".gr", ".dimacs", ".txt", ".col")


def _kernelize_file(path: str, k: int | None, mode: str, out: str | None,
                    trace: str | None) -> tuple[str, dict, bool]:
    inst = parse_instance(path, k=k, mode=mode)
    run = kernelize_editing if inst.mode is Mode.EDITING else kernelize_deletion
    res = run(inst)
    if out:
        Path(out).write_text(format_instance(res.instance))
    if trace:
        Path(trace).write_text(format_trace(res.trace))
    return path, res.stats, res.is_no_instance


def cmd_kernelize(args) -> int:
    src = Path(args.input)
    if not src.is_dir():
        _, stats, no = _kernelize_file(str(src), args.k, args.mode, args.out, args.trace)
        print(json.dumps(stats, sort_keys=True))
        return EXIT_NO if no else EXIT_YES

    files = sorted(str(p) for p in src.iterdir() if p.suffix in INSTANCE_SUFFIXES)
    for d in (args.out, args.trace):
        if d:
            Path(d).mkdir(parents=True, exist_ok=True)

    def target(d, f, suffix):
        return str(Path(d) / (Path(f).stem + suffix)) if d else None

    jobs = [(f, args.k, args.mode, target(args.out, f, ".gr"), target(args.trace, f, ".trace"))
            for f in files]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_kernelize_file, *zip(*jobs))) if jobs else []
    else:
        results = [_kernelize_file(*job) for job in jobs]
    for path, stats, _ in results:
        print(json.dumps({"file": Path(path).name, **stats}, sort_keys=True))
    return EXIT_YES


def cmd_solve(args) -> int:
    inst = parse_instance(args.input, k=args.k, mode=args.mode)
    res = solve(inst)
    if not res.feasible:
        print("no")
        return EXIT_NO
    print(f"yes opt={res.opt_size}")
    if args.witness:
        Path(args.witness).write_text(format_editset(res.witness))
    return EXIT_YES


def cmd_verify(args) -> int:
    inst = parse_instance(args.input, k=args.k, mode=args.mode)
    edits = parse_editset(args.edits)
    ok = is_solution(inst.graph, edits, inst.k, inst.mode)
    print("valid" if ok else "invalid")
    return EXIT_YES if ok else EXIT_NO


def cmd_partition(args) -> int:
    inst = parse_instance(args.input, k=args.k, mode=args.mode)
    reduced, trace = reduce_sunflower(inst)
    if is_no_instance_trace(trace):
        print("no-instance (sunflower rules exhausted the budget)")
        return EXIT_NO
    if trace:
        print(f"c reduced first: {len(trace)} rule applications, k={reduced.k}")
    labels = compute_partition(reduced, check=False)
    for part, vs in labels.parts().items():
        print(f"{part.value}: {' '.join(map(str, vs))}".rstrip())
    return EXIT_YES


def cmd_gen(args) -> int:
    spec = GenSpec(kind=args.kind, n=args.n, p=args.p,
                   clique_sizes=(args.clique_min, args.clique_max), r=args.r,
                   k=args.k if args.k is not None else args.r, mode=Mode(args.mode),
                   seed=args.seed)
    text = format_instance(generate(spec))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_YES


def cmd_stats(args) -> int:
    inst = parse_instance(args.input, k=args.k, mode=args.mode)
    g = inst.graph
    diamonds = count_diamonds(g, cap=args.cap)
    out = {"n": g.n, "m": g.m, "k": inst.k,
           "diamonds": diamonds if diamonds < args.cap else f">={args.cap}"}
    if g.n <= args.oracle_limit:
        cls = classify_cliques(g, inst.k)
        out["cliques"] = {"big_type1": len(cls.big_type1), "small_type1": len(cls.small_type1),
                          "type2": len(cls.type2)}
    print(json.dumps(out, sort_keys=True))
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="diamondkernel",
                                 description="Kernels and exact solvers for diamond-free edge modification.")
    sub = ap.add_subparsers(dest="command", required=True)

    def instance_args(p):
        p.add_argument("input")
        p.add_argument("--k", type=int, default=None,
                       help="budget (falls back to a 'c k' line in the file)")
        p.add_argument("--mode", choices=[m.value for m in Mode], default="editing")

    p = sub.add_parser("kernelize", help="kernelize an instance file or a directory of them")
    instance_args(p)
    p.add_argument("--out", help="kernel output file (directory in batch mode)")
    p.add_argument("--trace", help="trace output file (directory in batch mode)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("solve", help="exact branching solver")
    instance_args(p)
    p.add_argument("--witness", help="write a minimum solution here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check an edit set against an instance")
    instance_args(p)
    p.add_argument("edits")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("partition", help="print the five vertex parts")
    instance_args(p)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("--kind", choices=["gnp", "planted", "cliques", "figure3"], default="gnp")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--clique-min", type=int, default=2)
    p.add_argument("--clique-max", type=int, default=5)
    p.add_argument("--mode", choices=[m.value for m in Mode], default="editing")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("stats", help="size, diamond count and clique classification")
    instance_args(p)
    p.add_argument("--cap", type=int, default=10000, help="stop counting diamonds here")
    p.add_argument("--oracle-limit", type=int, default=200,
                   help="skip clique classification above this many vertices")
    p.set_defaults(func=cmd_stats)
    return ap


def run_cli(argv: list[str] | None = None) -> int:
    """Run one command and return its exit code; argparse exits become return codes."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except (ParseError, GraphError, GenerationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
