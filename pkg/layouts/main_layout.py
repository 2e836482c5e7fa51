"""
Main layout - combines all layout components
"""
import os

from dash import dcc
import dash_bootstrap_components as dbc

from layouts.header import get_header
from layouts.input_section import get_input_section
from layouts.results_section import get_results_section


def get_layout(default_path=""):
    """Return the complete app layout"""
    return dbc.Container([
        *get_header(),
        dbc.Row([
            dbc.Col([
                get_input_section(default_path),
                get_results_section(),
            ], width=12)
        ], justify="center"),

        # Loaded reports
        dcc.Store(id="report-store"),

    ], fluid=False, style={"maxWidth": "1200px"})


layout = get_layout(os.environ.get("REPORT_PATH", ""))
