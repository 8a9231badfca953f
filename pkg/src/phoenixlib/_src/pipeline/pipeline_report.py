"""
Aggregate reports over daily events files.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass, field

import numpy as np

from phoenixlib._src.defaults.defaults_classes import default_settings
from phoenixlib._src.exceptions import PhoenixBadUserInput, PhoenixUnknownKind
from phoenixlib._src.pipeline.pipeline_records import COLUMNS, read_records

REPORT_KINDS = (
    "daily_counts",
    "top_sources",
    "top_actors",
    "top_entities",
    "top_roles",
    "top_issues",
    "top_events",
    "quad_histogram",
    "entity_filter",
)


@dataclass
class ReportTable:
    """Result of a report: a header and rows of plain values."""

    kind: str
    columns: tuple[str, ...]
    rows: list[tuple] = field(default_factory=list)
    entity: str | None = None

    def to_text(self) -> str:
        """Tab separated text, header row first."""
        lines = ["\t".join(self.columns)]
        lines.extend("\t".join(str(v) for v in row) for row in self.rows)
        return "\n".join(lines) + "\n"

    def as_dict(self) -> dict:
        """First column -> second column, for two-column tables."""
        return {row[0]: row[1] for row in self.rows}


def ranked_counts(values, top_n) -> list[tuple[str, int]]:
    """Counts of the non-empty `values`, count descending then value ascending,
    first `top_n`."""
    values = [str(v) for v in values if v]
    if not values:
        return []
    uniq, counts = np.unique(np.array(values), return_counts=True)
    # np.unique sorts values, a stable sort on -counts keeps that order on ties
    order = np.argsort(-counts, kind="stable")[:top_n]
    return [(str(uniq[i]), int(counts[i])) for i in order]


def _top(kind, column, values, top_n):
    return ReportTable(kind, (column, "count"), ranked_counts(values, top_n))


def daily_counts(records) -> list[tuple[str, int]]:
    """Events per day, days without events included as zeros."""
    if not records:
        return []
    days = np.array([np.datetime64(r.date, "D") for r in records])
    span = np.arange(days.min(), days.max() + np.timedelta64(1, "D"))
    counts = np.zeros(span.size, dtype=int)
    np.add.at(counts, (days - span[0]).astype(int), 1)
    return [
        (dt.date.fromisoformat(str(day)).strftime("%Y%m%d"), int(n))
        for day, n in zip(span, counts, strict=True)
    ]


def quad_histogram(records) -> list[tuple[int, int]]:
    if not records:
        return []
    counts = np.bincount([r.quad_class for r in records], minlength=5)
    return [(q, int(n)) for q, n in enumerate(counts) if n]


def filter_entity(records, entity):
    return [r for r in records if entity in (r.source_entity, r.target_entity)]


def report(paths, kind, entity=None, top_n=None) -> ReportTable:
    """Aggregate one or more events files.

    Parameters
    ----------
    paths: path or list of paths
        Events files.

    kind: str
        One of `REPORT_KINDS`:

        - 'daily_counts': events per day
        - 'top_sources', 'top_actors', 'top_entities', 'top_roles': most frequent
          news sources, full actor codes, entities and roles (source and target
          side together)
        - 'top_issues': records per issue tag
        - 'top_events': records per event root code
        - 'quad_histogram': records per QuadClass
        - 'entity_filter': the records whose source or target entity is `entity`

    entity: str, optional
        Restrict any report to records with this source or target entity.
        Required for 'entity_filter'.

    top_n: int, optional
        Rows kept by the `top_*` kinds, by default `defaults.report.topn`.

    Returns
    -------
    ReportTable

    Raises
    ------
    PhoenixUnknownKind
    PhoenixRecordsFormatError
        on a malformed events file, with the line number.
    """
    if kind not in REPORT_KINDS:
        msg = f"Input parameter `kind` must be one of {REPORT_KINDS}.\nInstead received {kind!r}."
        raise PhoenixUnknownKind(msg)
    if kind == "entity_filter" and not entity:
        msg = "Report kind 'entity_filter' needs an `entity`."
        raise PhoenixBadUserInput(msg)
    top_n = default_settings.report.topn if top_n is None else top_n
    if isinstance(paths, str) or not hasattr(paths, "__iter__"):
        paths = [paths]
    records = [rec for p in paths for rec in read_records(p)]
    if entity:
        records = filter_entity(records, entity)

    if kind == "entity_filter":
        table = ReportTable(kind, COLUMNS, [r.as_row() for r in records])
    elif kind == "daily_counts":
        table = ReportTable(kind, ("Date", "count"), daily_counts(records))
    elif kind == "quad_histogram":
        table = ReportTable(kind, ("QuadClass", "count"), quad_histogram(records))
    elif kind == "top_sources":
        values = [s for r in records for s in r.news_sources]
        table = _top(kind, "NewsSource", values, top_n)
    elif kind == "top_actors":
        values = [a for r in records for a in (r.source_full, r.target_full)]
        table = _top(kind, "Actor", values, top_n)
    elif kind == "top_entities":
        values = [a for r in records for a in (r.source_entity, r.target_entity)]
        table = _top(kind, "Entity", values, top_n)
    elif kind == "top_roles":
        values = [a for r in records for a in (r.source_role, r.target_role)]
        table = _top(kind, "Role", values, top_n)
    elif kind == "top_issues":
        values = [tag for r in records for tag, _ in r.issues]
        table = _top(kind, "Issue", values, top_n)
    else:
        values = [r.event_root_code for r in records]
        table = _top(kind, "EventRootCode", values, top_n)
    table.entity = entity
    return table
