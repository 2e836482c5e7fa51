"""
Run reports - the JSON document written for every proved file
"""
from __future__ import annotations

import json
from pathlib import Path

from config.prover_config import ProverConfig
from engine.prover import ProofResult
from engine.trace import DeductStep
from lang.printer import pretty_print

ERROR = "Error"

STAT_KEYS = ("wall_time_ms", "lemma_count", "induction_count", "tactic1_count", "tactic2_count")


def build_report(path: str | Path, result: ProofResult, config: ProverConfig) -> dict:
    stats = {"wall_time_ms": result.wall_time_ms, **result.stats}
    report = {
        "file": str(path),
        "verdict": result.verdict,
        "seed": config.seed,
        "stats": stats,
        "spec": pretty_print(result.spec),
        "trace": result.trace.to_json(),
    }
    if result.timed_out:
        report["timed_out"] = True
    root = result.trace
    if isinstance(root, DeductStep) and root.outcome.disproved:
        report["counterexample"] = root.outcome.counterexample.to_json()
    return report


def error_report(path: str | Path, message: str, config: ProverConfig) -> dict:
    return {
        "file": str(path),
        "verdict": ERROR,
        "seed": config.seed,
        "stats": {key: 0 for key in STAT_KEYS},
        "error": message,
    }


def write_report(report: dict, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(report, handle, sort_keys=True, indent=2)
        handle.write("\n")
