"""
Report loader - read bench or single-file JSON reports for the viewer
"""
import json
from pathlib import Path

from cli.bench import summary_frame

REPORT_KEYS = ("file", "verdict", "stats")


def _collect(document):
    """Reports held by one JSON document: a bench run or a single report"""
    if isinstance(document, dict) and isinstance(document.get("reports"), list):
        return document["reports"]
    if isinstance(document, dict):
        return [document]
    return None


def load_reports(path):
    """
    Load reports from a JSON file or from every JSON file of a directory.

    Returns:
        (DataFrame, list of reports) on success, (None, message) otherwise
    """
    if not path:
        return None, "No report path given."
    source = Path(path)
    if source.is_dir():
        files = sorted(source.glob("*.json"))
        if not files:
            return None, f"No JSON reports found in {source}."
    elif source.is_file():
        files = [source]
    else:
        return None, f"{source} does not exist."

    reports = []
    for file in files:
        try:
            document = json.loads(file.read_text(encoding="utf-8"))
        except (OSError, ValueError) as exc:
            return None, f"Could not read {file.name}: {exc}"
        found = _collect(document)
        if found is None:
            return None, f"{file.name} is not a prover report."
        for report in found:
            missing = [key for key in REPORT_KEYS if key not in report]
            if missing:
                return None, f"{file.name}: report is missing {', '.join(missing)}."
            reports.append(report)
    return summary_frame(reports), reports


def trace_outline(node, indent=0):
    """Indented text outline of a serialized proof tree"""
    pad = "  " * indent
    info = node.get("justification", {})
    kind = node.get("kind")
    head = f"{pad}{node['equation']}"
    if kind == "deduct":
        lines = [f"{head}  [by deduction, {len(info.get('steps', []))} steps]"]
    elif kind == "induction":
        lines = [f"{head}  [induction on {info.get('variable')}, {info.get('route')}]"]
    elif kind == "tactic":
        lines = [f"{head}  [tactic {info.get('tactic')}: lemma {info.get('lemma')}]"]
        lines += [pad + "  " + line for line in (info.get("definition") or "").splitlines()]
    elif kind == "failure":
        lines = [f"{head}  [failed: {info.get('reason')}]"]
    else:
        lines = [head]
    for child in node.get("children", []):
        lines += trace_outline(child, indent + 1)
    return lines


def trace_lemmas(node):
    """Lemmas introduced by tactic steps, in proof order"""
    found = []
    if node.get("kind") == "tactic":
        found.append(node["justification"]["lemma"])
    for child in node.get("children", []):
        found += trace_lemmas(child)
    return found
