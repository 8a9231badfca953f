"""plotly backend"""

try:
    import plotly.graph_objects as go
except ImportError as missing_module:  # pragma: no cover
    msg = """In order to use the plotly plotting backend, you need to install plotly via pip or conda,
        see https://github.com/plotly/plotly.py"""
    raise ModuleNotFoundError(msg) from missing_module


def plot_plotly(labels, counts, *, path, line=False, title="", xlabel=""):
    """Draw counts as a line or bar chart and write it as a standalone html page."""
    trace = go.Scatter(x=labels, y=counts, mode="lines+markers") if line else go.Bar(x=labels, y=counts)
    fig = go.Figure(trace)
    fig.update_layout(title=title, xaxis_title=xlabel, yaxis_title="count")
    fig.write_html(str(path), include_plotlyjs="cdn")
    return fig
