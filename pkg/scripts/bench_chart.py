"""
Generate benchmark charts
"""

import pandas as pd
import plotly.graph_objects as go

VERDICT_COLORS = {
    "Proved": "#2a9d8f",
    "Disproved": "#e9c46a",
    "Unknown": "#e76f51",
    "Error": "#6c757d",
}


def generate_solved_chart(df: pd.DataFrame) -> go.Figure:
    """
    Cumulative number of proved files against the time limit needed to prove them.

    Args:
        df: DataFrame with columns 'verdict' and 'time_ms'

    Returns:
        Plotly Figure with a step line
    """
    times = sorted(df.loc[df["verdict"] == "Proved", "time_ms"].tolist())
    x = [0] + [t / 1000.0 for t in times]
    y = list(range(len(x)))

    fig = go.Figure()
    fig.add_trace(go.Scatter(
        x=x,
        y=y,
        mode="lines+markers",
        line=dict(shape="hv", color=VERDICT_COLORS["Proved"]),
        hovertemplate="%{y} solved within %{x:.2f} s<extra></extra>",
    ))
    fig.update_layout(
        xaxis=dict(title="<b>Time (s)</b>", rangemode="tozero", showgrid=True, gridcolor="lightgray"),
        yaxis=dict(title="<b>Solved</b>", range=[0, max(len(df), 1) + 0.5], showgrid=True, gridcolor="lightgray"),
        height=360,
        margin=dict(l=60, r=20, t=20, b=60),
        plot_bgcolor="white",
        paper_bgcolor="white",
        font=dict(size=12),
    )
    return fig


def generate_verdict_chart(df: pd.DataFrame) -> go.Figure:
    """Horizontal bars of proof time per file, colored by verdict"""
    fig = go.Figure()
    fig.add_trace(go.Bar(
        y=df["file"],
        x=df["time_ms"],
        orientation="h",
        marker=dict(color=[VERDICT_COLORS.get(v, "#6c757d") for v in df["verdict"]]),
        text=df["verdict"],
        textposition="auto",
        hovertemplate="%{y}: %{x} ms<extra></extra>",
    ))
    fig.update_layout(
        xaxis=dict(title="<b>Time (ms)</b>", showgrid=True, gridcolor="lightgray"),
        yaxis=dict(title="", autorange="reversed"),
        height=max(300, len(df) * 28),
        margin=dict(l=160, r=40, t=20, b=60),
        plot_bgcolor="white",
        paper_bgcolor="white",
        font=dict(size=12),
    )
    return fig
