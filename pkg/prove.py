#!/usr/bin/env python3
"""
Command line entry point

Usage:
    python prove.py prove corpus/sum_rev_sort.spec --trace --json out.json
    python prove.py bench corpus/ --jobs 4 --csv summary.csv --chart solved.html
    python prove.py check corpus/plus3.spec
    python prove.py replay out.json
"""
from __future__ import annotations

import argparse
import sys

from cli.commands import EXIT_INPUT_ERROR, cmd_bench, cmd_check, cmd_prove, cmd_replay
from config.logging_config import setup_logging
from config.prover_config import (
    DEDUCT_BUDGET, DEDUCT_DEPTH, DEFAULT_SEED, DEFAULT_TIMEOUT, MAX_DEPTH, SYNTH_SIZE,
    SYNTH_TESTS, ProverConfig,
)


def _add_search_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT, help="seconds per file")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="random test seed (u64)")
    parser.add_argument("--max-depth", type=int, default=MAX_DEPTH)
    parser.add_argument("--synth-size", type=int, default=SYNTH_SIZE)
    parser.add_argument("--synth-tests", type=int, default=SYNTH_TESTS)
    parser.add_argument("--deduct-depth", type=int, default=DEDUCT_DEPTH)
    parser.add_argument("--deduct-budget", type=int, default=DEDUCT_BUDGET)
    parser.add_argument("--json", dest="json_path", metavar="PATH", help="write the JSON report here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Inductive prover for equations over algebraic data types")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    parser.add_argument("--log-file", help="also write the log to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    prove = sub.add_parser("prove", help="prove the goal of one spec file")
    prove.add_argument("file")
    prove.add_argument("--trace", action="store_true", help="print the proof tree")
    _add_search_flags(prove)

    bench = sub.add_parser("bench", help="prove every .spec file of a directory")
    bench.add_argument("directory")
    bench.add_argument("--jobs", type=int, default=1, help="worker processes")
    bench.add_argument("--csv", dest="csv_path", metavar="PATH")
    bench.add_argument("--chart", dest="chart_path", metavar="PATH", help="solved-vs-time plot as HTML")
    _add_search_flags(bench)

    check = sub.add_parser("check", help="parse and typecheck a spec file")
    check.add_argument("file")

    replay = sub.add_parser("replay", help="re-check the proof trace of a JSON report")
    replay.add_argument("report")
    return parser


def config_from_args(args: argparse.Namespace) -> ProverConfig:
    if args.seed < 0 or args.seed >= 2 ** 64:
        raise ValueError("--seed must be an unsigned 64-bit integer")
    return ProverConfig(
        timeout=args.timeout,
        seed=args.seed,
        max_depth=args.max_depth,
        synth_size=args.synth_size,
        synth_tests=args.synth_tests,
        deduct_depth=args.deduct_depth,
        deduct_budget=args.deduct_budget,
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose, args.log_file)
    try:
        config = config_from_args(args) if args.command in ("prove", "bench") else None
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    if args.command == "prove":
        return cmd_prove(args.file, config, args.json_path, args.trace)
    if args.command == "bench":
        return cmd_bench(args.directory, config, args.jobs, args.csv_path,
                         args.chart_path, args.json_path)
    if args.command == "check":
        return cmd_check(args.file)
    return cmd_replay(args.report)


if __name__ == "__main__":
    sys.exit(main())
