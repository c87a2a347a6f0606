"""Command line interface.

Every subcommand reads and writes the plain text stream format, so stages
compose through files.  Exit codes: 0 for success (including "yes" answers),
1 for a proven negative answer or failed validation, 2 for errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .approx import greedy_matching
from .compress import delta_compress
from .core import enumerate_gamma_edges, validate_stream
from .exact import BudgetExceededError, DEFAULT_NODE_BUDGET, exact_decision, exact_maximum
from .generator import GeneratorConfig, generate
from .kernel import KernelVerdict, kernel_gamma_edge_ratio, kernelize, prune_candidates
from .pipeline import run_pipeline, sweep, write_records_csv
from .reduction import parse_dimacs, reduce_formula
from .stream_io import (
    StreamParseError,
    parse_stream,
    resolve_dataset,
    serialize_matching,
    serialize_stream,
    stream_to_text,
)

EXIT_OK = 0
EXIT_NO = 1
EXIT_ERROR = 2

DEFAULT_EXACT_CAP = 5000


def _load(name: str, strict: bool = True):
    return parse_stream(resolve_dataset(name), strict=strict)


def _emit_stream(stream, output, extra=None):
    if output is None:
        sys.stdout.write(stream_to_text(stream, extra))
    else:
        serialize_stream(stream, output, extra)


def _cmd_generate(args) -> int:
    config = GeneratorConfig(
        groups=args.groups,
        particles=args.particles,
        radius=args.radius,
        friction=args.friction,
        wind=args.wind,
        max_speed=args.max_speed,
        width=args.width,
        height=args.height,
        duration=args.steps,
        seed=args.seed,
    )
    stream = generate(config)
    _emit_stream(stream, args.output)
    if args.meta:
        with open(args.meta, "w") as handle:
            json.dump(config.metadata(), handle, indent=2, sort_keys=True)
            handle.write("\n")
    print(f"generated |E|={stream.edge_count} over T=[0,{stream.t_max}]", file=sys.stderr)
    return EXIT_OK


def _cmd_compress(args) -> int:
    stream = _load(args.input)
    _emit_stream(delta_compress(stream, args.delta), args.output)
    return EXIT_OK


def _cmd_gamma_edges(args) -> int:
    stream = _load(args.input)
    edges = enumerate_gamma_edges(stream, args.gamma)
    if args.count:
        print(len(edges))
    else:
        for edge in edges:
            print(f"{edge.start} {edge.u} {edge.v}")
    return EXIT_OK


def _cmd_approx(args) -> int:
    stream = _load(args.input)
    matching = greedy_matching(stream, args.gamma)
    if args.output:
        serialize_matching(matching, args.output, gamma=args.gamma)
    print(len(matching))
    return EXIT_OK


def _cmd_kernelize(args) -> int:
    stream = _load(args.input)
    matching = greedy_matching(stream, args.gamma)
    k = args.k if args.k is not None else max(1, len(matching))
    stats = {
        "gamma": args.gamma,
        "k": k,
        "greedy_size": len(matching),
        "edge_count": stream.edge_count,
    }
    code = EXIT_OK
    if args.prune_only:
        kernel, pool = prune_candidates(stream, args.gamma, k, matching)
        stats["mode"] = "prune"
        stats["pool_size"] = len(pool)
        kernel_out = kernel
    else:
        outcome = kernelize(stream, args.gamma, k, matching)
        stats["mode"] = outcome.verdict.value
        kernel_out = outcome.kernel
        if outcome.verdict is KernelVerdict.KERNEL:
            stats["pool_size"] = len(outcome.pool)
        elif outcome.verdict is KernelVerdict.NO_SOLUTION:
            code = EXIT_NO
    if kernel_out is not None:
        stats["kernel_edge_count"] = kernel_out.edge_count
        stats["kernel_edge_ratio"] = (
            kernel_out.edge_count / stream.edge_count if stream.edge_count else 1.0
        )
        stats["kernel_gamma_edge_ratio"] = kernel_gamma_edge_ratio(
            stream, kernel_out, args.gamma
        )
        if args.output:
            serialize_stream(kernel_out, args.output)
    if args.stats:
        with open(args.stats, "w") as handle:
            json.dump(stats, handle, indent=2, sort_keys=True)
            handle.write("\n")
    print(stats["mode"])
    return code


def _cmd_exact(args) -> int:
    stream = _load(args.input)
    candidates = len(enumerate_gamma_edges(stream, args.gamma))
    if candidates > args.cap and not args.force:
        print(
            f"refusing exact search on {candidates} gamma-edges "
            f"(cap {args.cap}); pass --force to override",
            file=sys.stderr,
        )
        return EXIT_ERROR
    try:
        if args.k is not None:
            answer = exact_decision(stream, args.gamma, args.k, node_budget=args.budget)
            print("yes" if answer else "no")
            return EXIT_OK if answer else EXIT_NO
        result = exact_maximum(stream, args.gamma, node_budget=args.budget)
    except BudgetExceededError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_ERROR
    if args.output:
        serialize_matching(result.witness, args.output, gamma=args.gamma)
    print(result.optimum)
    return EXIT_OK


def _cmd_reduce_sat(args) -> int:
    with open(args.cnf) as handle:
        formula = parse_dimacs(handle.read())
    instance = reduce_formula(formula, args.gamma)
    _emit_stream(instance.stream, args.output, extra={"target": str(instance.target)})
    print(instance.target)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    stream = _load(args.input)
    deltas = [None] if args.deltas is None else [int(d) for d in args.deltas.split(",")]
    gammas = [int(g) for g in args.gammas.split(",")]
    records = sweep(
        stream,
        gammas,
        deltas=deltas,
        k=args.k,
        prune_only=not args.kernelize,
        dataset=args.dataset or args.input,
    )
    write_records_csv(records, args.output)
    print(f"wrote {len(records)} records to {args.output}")
    return EXIT_OK


def _cmd_validate(args) -> int:
    stream = _load(args.input, strict=False)
    report = validate_stream(stream)
    if report.ok:
        print("ok")
        return EXIT_OK
    for violation in report.violations:
        print(violation)
    return EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tmatch",
        description="Temporal matchings in link streams.",
    )
    parser.add_argument("--version", action="version", version=f"tmatch {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="simulate drifting particle groups")
    p.add_argument("--groups", type=int, default=100)
    p.add_argument("--particles", type=int, default=650)
    p.add_argument("--radius", type=float, default=40.0)
    p.add_argument("--friction", type=float, default=0.75)
    p.add_argument("--wind", type=float, default=8.0)
    p.add_argument("--max-speed", type=float, default=18.0)
    p.add_argument("--width", type=float, default=1000.0)
    p.add_argument("--height", type=float, default=1000.0)
    p.add_argument("--steps", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.add_argument("--meta", help="write the config as a JSON sidecar")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("compress", help="delta-compress the time axis")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_compress)

    p = sub.add_parser("gamma-edges", help="enumerate gamma-edges in canonical order")
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--count", action="store_true", help="print only the count")
    p.add_argument("input")
    p.set_defaults(func=_cmd_gamma_edges)

    p = sub.add_parser("approx", help="greedy maximal matching (2-approximation)")
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("input")
    p.add_argument("-o", "--output", help="write the matching file")
    p.set_defaults(func=_cmd_approx)

    p = sub.add_parser("kernelize", help="shrink the instance for a target size k")
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--prune-only", action="store_true",
                   help="always build the pruned stream, skip the direct answers")
    p.add_argument("input")
    p.add_argument("-o", "--output", help="write the kernel stream")
    p.add_argument("--stats", help="write a JSON stats record")
    p.set_defaults(func=_cmd_kernelize)

    p = sub.add_parser("exact", help="provably maximum matching (small instances)")
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--k", type=int, help="decide size >= k instead of optimizing")
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--cap", type=int, default=DEFAULT_EXACT_CAP,
                   help="refuse instances with more gamma-edges than this")
    p.add_argument("--force", action="store_true")
    p.add_argument("input")
    p.add_argument("-o", "--output", help="write the witness matching")
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("reduce-sat", help="build the hardness instance of a CNF formula")
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("cnf", help="DIMACS CNF file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_reduce_sat)

    p = sub.add_parser("sweep", help="run the pipeline over a (delta, gamma) grid")
    p.add_argument("--gammas", required=True, help="comma-separated gamma values")
    p.add_argument("--deltas", help="comma-separated delta values (default: none)")
    p.add_argument("--k", type=int)
    p.add_argument("--kernelize", action="store_true",
                   help="use the answering kernelization instead of prune-only")
    p.add_argument("--dataset", help="label for the CSV rows")
    p.add_argument("input")
    p.add_argument("-o", "--output", required=True, help="CSV output path")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("validate", help="report link stream invariant violations")
    p.add_argument("input")
    p.set_defaults(func=_cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (StreamParseError, FileNotFoundError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def entrypoint() -> None:
    sys.exit(main())
