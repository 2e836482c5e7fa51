"""
Results section layout - summary table, charts and proof trees
"""
from dash import dcc, html
import dash_bootstrap_components as dbc

GRAPH_CONFIG = {
    "displayModeBar": True,
    "displaylogo": False,
    "modeBarButtonsToRemove": ["lasso2d", "select2d", "autoScale2d"],
    "toImageButtonOptions": {"format": "png", "filename": "prover_bench", "scale": 2},
}


def get_summary_section():
    return html.Div([
        html.H3("Summary", className="mb-3"),
        html.Div(id="solved-summary", className="mb-2"),
        html.Div(id="summary-table"),
    ], className="mb-4")


def get_chart_section():
    return dbc.Row([
        dbc.Col([
            html.H5("Solved within time", className="mb-3"),
            dcc.Graph(id="solved-chart", config=GRAPH_CONFIG),
        ], width=12, lg=6),
        dbc.Col([
            html.H5("Time per file", className="mb-3"),
            dcc.Graph(id="verdict-chart", config=GRAPH_CONFIG),
        ], width=12, lg=6),
    ], className="mb-4")


def get_trace_section():
    """File picker, lemma list and proof outline of the picked file"""
    return html.Div([
        html.H3("Proof", className="mb-3"),
        dcc.Dropdown(id="file-dropdown", placeholder="Select a file", clearable=False, className="mb-3"),
        html.Div(id="lemma-list", className="mb-3"),
        html.Pre(id="trace-text", style={
            "backgroundColor": "#f8f9fa",
            "padding": "16px",
            "borderRadius": "8px",
            "fontSize": "13px",
            "whiteSpace": "pre",
            "overflowX": "auto",
        }),
    ], className="mb-5")


def get_results_section():
    """Return the results section, hidden until reports are loaded"""
    return html.Div([
        get_summary_section(),
        get_chart_section(),
        get_trace_section(),
    ], id="results-section", style={"display": "none"})
