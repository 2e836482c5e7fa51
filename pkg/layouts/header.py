"""
Header layout component - title and short description
"""
from dash import html
import dash_bootstrap_components as dbc


def get_header():
    """Return the header section with title"""
    return [
        dbc.Row([
            dbc.Col([
                html.H1([html.I(className="fas fa-project-diagram me-3"), "Proof Report Viewer"],
                        className="mt-4 mb-2 text-center"),
                html.P(
                    "Browse bench runs of the inductive prover: verdicts, timings, synthesized lemmas and proof trees",
                    className="text-center text-muted mb-4 lead"
                ),
            ], width=12)
        ]),
    ]
