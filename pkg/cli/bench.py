"""
Benchmark harness - prove every spec of a directory and summarize
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from pathlib import Path

import pandas as pd
from rich.console import Console
from rich.table import Table

from cli.report import ERROR, build_report, error_report
from config.prover_config import ProverConfig
from engine.prover import PROVED, prove
from lang.errors import SpecError
from lang.parser import parse_spec

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = ["file", "verdict", "time_ms", "lemmas", "inductions", "t1", "t2"]


def prove_file(path: str | Path, config: ProverConfig) -> dict:
    """Report for one file; input errors become an Error report"""
    try:
        spec = parse_spec(Path(path).read_text(encoding="utf-8"))
    except (SpecError, OSError) as exc:
        logger.error("%s: %s", path, exc)
        return error_report(path, str(exc), config)
    try:
        result = prove(spec, config)
    except Exception as exc:
        logger.exception("%s crashed", path)
        return error_report(path, f"crashed: {exc}", config)
    return build_report(path, result, config)


def spec_files(directory: str | Path) -> list[Path]:
    return sorted(Path(directory).glob("*.spec"))


def run_bench(directory: str | Path, config: ProverConfig, jobs: int = 1) -> list[dict]:
    """Reports in file-name order, whatever the completion order"""
    files = spec_files(directory)
    if jobs <= 1 or len(files) <= 1:
        return [prove_file(f, config) for f in files]
    reports: dict[Path, dict] = {}
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        futures = {executor.submit(prove_file, f, config): f for f in files}
        for future in as_completed(futures):
            path = futures[future]
            try:
                reports[path] = future.result()
            except Exception as exc:
                logger.error("%s crashed: %s", path, exc)
                reports[path] = error_report(path, f"crashed: {exc}", config)
    return [reports[f] for f in files]


def summary_frame(reports: list[dict]) -> pd.DataFrame:
    rows = []
    for report in reports:
        stats = report["stats"]
        rows.append({
            "file": Path(report["file"]).name,
            "verdict": report["verdict"],
            "time_ms": stats["wall_time_ms"],
            "lemmas": stats["lemma_count"],
            "inductions": stats["induction_count"],
            "t1": stats["tactic1_count"],
            "t2": stats["tactic2_count"],
        })
    return pd.DataFrame(rows, columns=SUMMARY_COLUMNS)


def solved_stats(df: pd.DataFrame) -> tuple[int, float]:
    """Number of proved files and their average time in ms"""
    solved = df[df["verdict"] == PROVED]
    average = float(solved["time_ms"].mean()) if len(solved) else 0.0
    return len(solved), average


VERDICT_STYLES = {"Proved": "green", "Disproved": "yellow", "Unknown": "red", ERROR: "bold red"}


def render_summary(df: pd.DataFrame, console: Console) -> None:
    table = Table(show_header=True, header_style="bold cyan")
    table.add_column("file")
    table.add_column("verdict")
    for column in ("time (ms)", "lemmas", "inductions", "T1", "T2"):
        table.add_column(column, justify="right")
    for row in df.itertuples(index=False):
        style = VERDICT_STYLES.get(row.verdict, "white")
        table.add_row(row.file, f"[{style}]{row.verdict}[/{style}]", str(row.time_ms), str(row.lemmas),
                      str(row.inductions), str(row.t1), str(row.t2))
    console.print(table)
    solved, average = solved_stats(df)
    console.print(f"[bold]solved:[/bold] {solved}/{len(df)}  [bold]average time (solved):[/bold] {average:.0f} ms")
