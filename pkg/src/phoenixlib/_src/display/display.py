"""Plotting of report tables"""

from importlib import import_module
from pathlib import Path

from phoenixlib._src.exceptions import PhoenixBadUserInput
from phoenixlib._src.input_checks import check_format_input_backend

PLOTTABLE_KINDS = (
    "daily_counts",
    "top_sources",
    "top_actors",
    "top_entities",
    "top_roles",
    "top_issues",
    "top_events",
    "quad_histogram",
)


def get_plot_func(backend):
    """Return the backend plot function"""
    # deferred so that a missing optional backend only fails when it is asked for
    return lambda *args, backend=backend, **kwargs: getattr(
        import_module(f"phoenixlib._src.display.backend_{backend}"), f"plot_{backend}"
    )(*args, **kwargs)


def plot_report(table, path, backend=None, title=None):
    """Write a chart of a report table to a file.

    Parameters
    ----------
    table: ReportTable
        Any report kind except 'entity_filter'.

    path: str or Path
        Output file. The matplotlib backend writes the format of the suffix
        (png, svg, pdf), the plotly backend writes html.

    backend: {'matplotlib', 'plotly'}, optional
        By default `defaults.report.backend`.

    title: str, optional
        By default the report kind, and the entity if the report is scoped.

    Returns
    -------
    Path of the written file.
    """
    backend = check_format_input_backend(backend)
    if table.kind not in PLOTTABLE_KINDS:
        msg = (
            f"Input parameter `table` must be a report of kind {PLOTTABLE_KINDS}."
            f"\nInstead received kind {table.kind!r}."
        )
        raise PhoenixBadUserInput(msg)
    if title is None:
        title = table.kind if table.entity is None else f"{table.kind} ({table.entity})"
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    labels = [str(row[0]) for row in table.rows]
    counts = [row[1] for row in table.rows]
    get_plot_func(backend)(
        labels,
        counts,
        path=path,
        line=table.kind == "daily_counts",
        title=title,
        xlabel=table.columns[0],
    )
    return path
