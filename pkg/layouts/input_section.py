"""
Input section layout - choose the report file or directory to load
"""
from dash import html
import dash_bootstrap_components as dbc


def get_input_section(default_path=""):
    """Return the report source form"""
    return dbc.Card([
        dbc.CardBody([
            html.H5("Report source", className="mb-3"),
            dbc.InputGroup([
                dbc.Input(
                    id="report-path",
                    value=default_path,
                    placeholder="bench.json, a single report, or a directory of reports",
                    type="text",
                ),
                dbc.Button([html.I(className="fas fa-folder-open me-2"), "Load"],
                           id="load-button", color="primary"),
            ]),
            html.Div(id="load-feedback", className="mt-3"),
        ])
    ], className="mb-4")
