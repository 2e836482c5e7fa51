"""
Report callbacks - load reports, fill the summary and show proof trees
"""
import dash
from dash import html, Input, Output, State
import dash_bootstrap_components as dbc
import pandas as pd

from cli.bench import solved_stats
from scripts.bench_chart import generate_solved_chart, generate_verdict_chart
from utils.report_loader import load_reports, trace_lemmas, trace_outline

TABLE_HEADERS = {
    "file": "File", "verdict": "Verdict", "time_ms": "Time (ms)", "lemmas": "Lemmas",
    "inductions": "Inductions", "t1": "T1", "t2": "T2",
}


def register_report_callbacks(app):
    """Register report-related callbacks"""

    @app.callback(
        Output("report-store", "data"),
        Output("load-feedback", "children"),
        Input("load-button", "n_clicks"),
        State("report-path", "value"),
        prevent_initial_call=True
    )
    def handle_load(n_clicks, path):
        if not n_clicks:
            raise dash.exceptions.PreventUpdate
        result = load_reports((path or "").strip())
        if result[0] is None:
            return dash.no_update, html.Div(result[-1], className="alert alert-danger")
        df, reports = result
        status = f"Loaded {len(reports)} report(s)."
        return {"df": df.to_dict("records"), "reports": reports}, html.Div(status, className="alert alert-success")

    @app.callback(
        Output("results-section", "style"),
        Output("solved-summary", "children"),
        Output("summary-table", "children"),
        Output("solved-chart", "figure"),
        Output("verdict-chart", "figure"),
        Output("file-dropdown", "options"),
        Output("file-dropdown", "value"),
        Input("report-store", "data"),
        prevent_initial_call=True
    )
    def update_summary(data):
        if not data:
            raise dash.exceptions.PreventUpdate
        df = pd.DataFrame(data["df"], columns=list(TABLE_HEADERS))
        solved, average = solved_stats(df)
        summary = html.P([
            html.Strong(f"{solved}/{len(df)} proved"),
            f", average time over proved files {average:.0f} ms",
        ])
        table = dbc.Table.from_dataframe(df.rename(columns=TABLE_HEADERS), striped=True, bordered=False,
                                         hover=True, size="sm")
        options = [{"label": name, "value": idx} for idx, name in enumerate(df["file"])]
        first = 0 if options else None
        return ({"display": "block"}, summary, table, generate_solved_chart(df),
                generate_verdict_chart(df), options, first)

    @app.callback(
        Output("lemma-list", "children"),
        Output("trace-text", "children"),
        Input("file-dropdown", "value"),
        State("report-store", "data"),
        prevent_initial_call=True
    )
    def show_trace(index, data):
        if index is None or not data:
            raise dash.exceptions.PreventUpdate
        report = data["reports"][index]
        if "trace" not in report:
            return None, report.get("error", "No proof trace recorded.")
        lemmas = trace_lemmas(report["trace"])
        lemma_list = html.Div([
            html.Strong(f"{report['verdict']}. "),
            f"{len(lemmas)} lemma(s) synthesized" if lemmas else "No lemmas needed",
            html.Ul([html.Li(html.Code(lemma)) for lemma in lemmas]) if lemmas else None,
        ])
        return lemma_list, "\n".join(trace_outline(report["trace"]))
