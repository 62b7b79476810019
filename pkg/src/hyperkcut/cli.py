"""Command-line interface.

Reports go to stdout as JSON, diagnostics to stderr. Exit status is 0 on
success, 1 when a verification suite finds a failing case and 2 on usage or
input errors. ``-`` reads the instance from stdin.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import instances
from .core import InvalidArgument
from .enumerate import enum_min_cutsets_k2, enum_min_k_cutsets
from .flow import min_terminal_cut
from .io import emit_instance, parse_instance, report_to_json, terminal_cut_to_json
from .oracle import brute_force_min_k_cutsets
from .verify import SUITES, run_suites

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _vertex_list(text: str) -> list[int]:
    """Parse '1,3' into 0-indexed vertices."""
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertices, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("vertex list is empty")
    if any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("vertices are 1-indexed")
    return [v - 1 for v in values]


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperkcut",
        description="Enumerate minimum k-cut-sets of hypergraphs and check the supporting structure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum", help="all minimum k-cut-sets of an instance")
    p.add_argument("-k", type=_positive, required=True)
    p.add_argument("--fast-k2", action="store_true", help="use the single-sink scan (k=2 only)")
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--no-timing", action="store_true", help="report millis as 0 for byte-stable output")
    p.add_argument("file", help="instance file, or - for stdin")

    p = sub.add_parser("mincut", help="alias for enum -k 2 --fast-k2")
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--no-timing", action="store_true")
    p.add_argument("file")

    p = sub.add_parser("stcut", help="minimum (S,T)-terminal cut")
    p.add_argument("-S", type=_vertex_list, required=True, help="source vertices, e.g. 1,2")
    p.add_argument("-T", type=_vertex_list, required=True, help="sink vertices")
    p.add_argument("file")

    p = sub.add_parser("oracle", help="brute-force minimum k-cut-sets (small instances only)")
    p.add_argument("-k", type=_positive, required=True)
    p.add_argument("--no-timing", action="store_true")
    p.add_argument("file")

    p = sub.add_parser("verify", help="run structural check suites")
    p.add_argument("--suite", choices=SUITES, action="append", help="repeatable; default runs all")
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--max-uncross", type=int, default=120, help="uncrossing cases per instance (0 = all)")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("file", nargs="?")
    src.add_argument("--corpus", nargs=4, type=int, metavar=("N", "M", "COUNT", "SEED"))

    p = sub.add_parser("gen", help="write a generated instance to stdout")
    kinds = p.add_subparsers(dest="kind", required=True)
    for name in ("cycle", "spanning", "path"):
        kinds.add_parser(name).add_argument("n", type=int)
    r = kinds.add_parser("random")
    r.add_argument("n", type=int)
    r.add_argument("m", type=int)
    r.add_argument("max_size", type=int)
    r.add_argument("max_cost", type=int)
    r.add_argument("seed", type=int)
    return parser


def _cmd_enum(args) -> int:
    G = parse_instance(_read(args.file))
    k = getattr(args, "k", 2)
    if getattr(args, "fast_k2", True):
        if k != 2:
            raise InvalidArgument("--fast-k2 requires -k 2")
        report = enum_min_cutsets_k2(G, threads=args.threads)
    else:
        report = enum_min_k_cutsets(G, k, threads=args.threads)
    sys.stdout.write(report_to_json(report, timing=not args.no_timing))
    return EXIT_OK


def _cmd_stcut(args) -> int:
    G = parse_instance(_read(args.file))
    result = min_terminal_cut(G, args.S, args.T)
    sys.stdout.write(terminal_cut_to_json(args.S, args.T, result))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    G = parse_instance(_read(args.file))
    report = brute_force_min_k_cutsets(G, args.k)
    sys.stdout.write(report_to_json(report, timing=not args.no_timing))
    return EXIT_OK


def _cmd_verify(args) -> int:
    from .verify import Limits

    if args.corpus:
        n, m, count, seed = args.corpus
        graphs = instances.corpus(n, m, count, seed)
    else:
        graphs = [parse_instance(_read(args.file))]
    limits = Limits(uncross_cases=args.max_uncross or None)
    summary = run_suites(graphs, tuple(args.suite or SUITES), limits, threads=args.threads)
    json.dump(summary, sys.stdout, indent=2)
    sys.stdout.write("\n")
    if not summary["ok"]:
        print("verification failed; see 'failures' in the report", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def _cmd_gen(args) -> int:
    if args.kind == "random":
        G = instances.random_hypergraph(args.n, args.m, args.max_size, args.max_cost, args.seed)
    else:
        G = getattr(instances, args.kind)(args.n)
    sys.stdout.write(emit_instance(G))
    return EXIT_OK


COMMANDS = {
    "enum": _cmd_enum,
    "mincut": _cmd_enum,
    "stcut": _cmd_stcut,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
    "gen": _cmd_gen,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except InvalidArgument as exc:
        print(f"hyperkcut {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"hyperkcut {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
