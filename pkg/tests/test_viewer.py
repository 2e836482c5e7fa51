import json

import plotly.graph_objects as go

from layouts.main_layout import get_layout
from scripts.bench_chart import generate_solved_chart, generate_verdict_chart
from utils.report_loader import load_reports, trace_lemmas, trace_outline

STATS = {"wall_time_ms": 40, "lemma_count": 1, "induction_count": 2, "tactic1_count": 1, "tactic2_count": 0}

TRACE = {
    "kind": "induction",
    "equation": "forall (xs: List). sum (rev xs) = sum xs",
    "context": [], "premises": [],
    "justification": {"variable": "xs", "route": "direct", "cases": []},
    "children": [
        {"kind": "deduct", "equation": "0 = 0", "context": [], "premises": [], "children": [],
         "justification": {"status": "proved", "steps": []}},
        {"kind": "tactic", "equation": "forall (h: Int) (r: List). sum (snoc h r) = h + sum r",
         "context": [], "premises": [], "children": [],
         "justification": {"tactic": 1, "lemma": "forall (a: List). sum a = f_1 a", "definition": None}},
    ],
}


def _report(name, verdict, time_ms=40, trace=True):
    report = {"file": f"corpus/{name}", "verdict": verdict, "stats": dict(STATS, wall_time_ms=time_ms)}
    if trace:
        report["trace"] = TRACE
    return report


def test_load_single_report(tmp_path):
    path = tmp_path / "one.json"
    path.write_text(json.dumps(_report("sum_rev.spec", "Proved")), encoding="utf-8")
    df, reports = load_reports(str(path))
    assert list(df["file"]) == ["sum_rev.spec"]
    assert reports[0]["verdict"] == "Proved"


def test_load_bench_document_and_directory(tmp_path):
    bench = {"seed": 0, "reports": [_report("a.spec", "Proved"), _report("b.spec", "Unknown", trace=False)]}
    (tmp_path / "bench.json").write_text(json.dumps(bench), encoding="utf-8")
    (tmp_path / "c.json").write_text(json.dumps(_report("c.spec", "Disproved")), encoding="utf-8")
    df, reports = load_reports(str(tmp_path))
    assert list(df["verdict"]) == ["Proved", "Unknown", "Disproved"]
    assert len(reports) == 3


def test_load_errors(tmp_path):
    assert load_reports("")[0] is None
    assert load_reports(str(tmp_path / "missing.json"))[0] is None
    assert load_reports(str(tmp_path))[0] is None

    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    df, message = load_reports(str(bad))
    assert df is None and "bad.json" in message

    partial = tmp_path / "partial.json"
    partial.write_text(json.dumps({"file": "x.spec"}), encoding="utf-8")
    df, message = load_reports(str(partial))
    assert df is None and "missing" in message


def test_trace_outline_and_lemmas():
    lines = trace_outline(TRACE)
    assert lines[0].endswith("[induction on xs, direct]")
    assert lines[1].startswith("  0 = 0")
    assert "tactic 1" in lines[2]
    assert trace_lemmas(TRACE) == ["forall (a: List). sum a = f_1 a"]


def test_charts(tmp_path):
    df, _ = load_reports(_write_bench(tmp_path))
    solved = generate_solved_chart(df)
    assert isinstance(solved, go.Figure)
    assert list(solved.data[0].y) == [0, 1, 2]
    assert list(solved.data[0].x) == [0, 0.01, 0.5]
    bars = generate_verdict_chart(df)
    assert len(bars.data[0].y) == 3


def _write_bench(tmp_path):
    bench = {"reports": [_report("a.spec", "Proved", 500), _report("b.spec", "Proved", 10),
                         _report("c.spec", "Unknown", 900)]}
    path = tmp_path / "bench.json"
    path.write_text(json.dumps(bench), encoding="utf-8")
    return str(path)


def _ids(component):
    found = set()
    if getattr(component, "id", None):
        found.add(component.id)
    children = getattr(component, "children", None)
    if isinstance(children, (list, tuple)):
        for child in children:
            found |= _ids(child)
    elif children is not None and hasattr(children, "children"):
        found |= _ids(children)
    return found


def test_layout_has_callback_targets():
    ids = _ids(get_layout("reports/bench.json"))
    assert {"report-path", "load-button", "load-feedback", "report-store", "results-section",
            "summary-table", "solved-chart", "verdict-chart", "file-dropdown", "trace-text"} <= ids
