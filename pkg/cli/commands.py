"""
Commands - prove, bench, check and replay
Each returns the process exit code.
"""
from __future__ import annotations

import logging
from pathlib import Path

from rich.console import Console

from checker.replay import replay_file
from cli.bench import render_summary, run_bench, summary_frame
from cli.report import build_report, write_report
from config.prover_config import ProverConfig
from engine.prover import DISPROVED, PROVED, Prover
from engine.trace import render_text
from lang.errors import SpecError
from lang.parser import parse_spec
from scripts.bench_chart import generate_solved_chart

logger = logging.getLogger(__name__)

EXIT_CODES = {PROVED: 0, DISPROVED: 1}
EXIT_UNKNOWN = 2
EXIT_INPUT_ERROR = 3

console = Console()


def _load(path: str):
    try:
        return parse_spec(Path(path).read_text(encoding="utf-8")), None
    except OSError as exc:
        return None, f"cannot read {path}: {exc.strerror or exc}"
    except SpecError as exc:
        return None, f"{path}: {exc}"


def cmd_prove(path: str, config: ProverConfig, json_path: str | None = None, show_trace: bool = False) -> int:
    spec, error = _load(path)
    if spec is None:
        console.print(f"[bold red]error:[/bold red] {error}")
        return EXIT_INPUT_ERROR
    prover = Prover(spec, config)
    result = prover.prove()
    report = build_report(path, result, config)
    console.print(f"[bold]{result.verdict}[/bold] {path} ({result.wall_time_ms} ms)")
    if "counterexample" in report:
        console.print(f"counterexample: {result.trace.outcome.counterexample.describe()}")
    if result.verdict == PROVED:
        problems = prover.audit(result)
        for problem in problems:
            logger.error("audit refuted %s", problem)
    if show_trace:
        console.print("\n".join(render_text(result.trace)), markup=False, highlight=False)
    if json_path:
        write_report(report, json_path)
    return EXIT_CODES.get(result.verdict, EXIT_UNKNOWN)


def cmd_bench(directory: str, config: ProverConfig, jobs: int = 1, csv_path: str | None = None,
              chart_path: str | None = None, json_path: str | None = None) -> int:
    if not Path(directory).is_dir():
        console.print(f"[bold red]error:[/bold red] {directory} is not a directory")
        return EXIT_INPUT_ERROR
    reports = run_bench(directory, config, jobs)
    df = summary_frame(reports)
    render_summary(df, console)
    if csv_path:
        df.to_csv(csv_path, index=False)
    if chart_path:
        generate_solved_chart(df).write_html(chart_path)
    if json_path:
        write_report({"seed": config.seed, "reports": reports}, json_path)
    return 0


def cmd_check(path: str) -> int:
    spec, error = _load(path)
    if spec is None:
        console.print(f"[bold red]error:[/bold red] {error}")
        return EXIT_INPUT_ERROR
    console.print(f"ok: {len(spec.adts)} types, {len(spec.csrs)} functions")
    return 0


def cmd_replay(path: str) -> int:
    try:
        result = replay_file(path)
    except (OSError, ValueError) as exc:
        console.print(f"[bold red]error:[/bold red] {exc}")
        return EXIT_INPUT_ERROR
    for error in result.errors:
        console.print(f"[red]{error}[/red]", markup=True)
    if result.ok and result.complete:
        console.print(f"replayed {result.nodes} steps: complete proof")
        return 0
    if result.ok:
        console.print(f"replayed {result.nodes} steps: proof is incomplete")
        return EXIT_UNKNOWN
    return 1
