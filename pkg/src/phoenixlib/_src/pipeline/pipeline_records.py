"""
The 27-column event record and its tab separated file format.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass
from pathlib import Path

from phoenixlib._src.exceptions import PhoenixMissingFile, PhoenixRecordsFormatError

COLUMNS = (
    "EventID",
    "Date",
    "Year",
    "Month",
    "Day",
    "SourceActorFull",
    "SourceActorEntity",
    "SourceActorRole",
    "SourceActorAttribute",
    "TargetActorFull",
    "TargetActorEntity",
    "TargetActorRole",
    "TargetActorAttribute",
    "EventCode",
    "EventRootCode",
    "QuadClass",
    "GoldsteinScore",
    "Issues",
    "ActionLat",
    "ActionLong",
    "LocationName",
    "GeoCountryName",
    "GeoStateName",
    "SentenceID",
    "URLs",
    "NewsSources",
    "StoryID",
)
HEADER = "\t".join(COLUMNS)


def _opt(val) -> str:
    return "" if val is None else str(val)


def _fmt_float(val, digits) -> str:
    return "" if val is None else f"{val:.{digits}f}"


def format_issues(issues) -> str:
    """[('SECURITY', 2), ('TERROR_GROUP', 1)] -> 'SECURITY:2;TERROR_GROUP:1'"""
    return ";".join(f"{tag}:{count}" for tag, count in issues)


def parse_issues(text: str) -> tuple[tuple[str, int], ...]:
    out = []
    for item in filter(None, text.split(";")):
        tag, sep, count = item.rpartition(":")
        if not sep or not tag:
            raise ValueError(item)
        out.append((tag, int(count)))
    return tuple(out)


def event_id_key(event_id: str) -> tuple[str, int, str]:
    """Sort key of an EventID `YYYYMMDD-NNNNNN`, the sequence compared as a number.

    Sequences past 999999 are wider than six digits and still sort after the
    shorter ones.
    """
    day, _, seq = event_id.partition("-")
    return (day, int(seq) if seq.isdigit() else -1, seq)


@dataclass(frozen=True)
class EventRecord:
    """One row of a daily events file.

    Attribute order follows `COLUMNS`. Absent values are `None` (or empty
    strings and tuples) and are written as empty fields.
    """

    event_id: str
    date: dt.date
    source_full: str
    source_entity: str
    source_role: str | None
    source_attribute: str | None
    target_full: str | None
    target_entity: str | None
    target_role: str | None
    target_attribute: str | None
    event_code: str
    quad_class: int
    goldstein: float
    issues: tuple[tuple[str, int], ...] = ()
    action_lat: float | None = None
    action_lon: float | None = None
    location_name: str | None = None
    geo_country_name: str | None = None
    geo_state_name: str | None = None
    sentence_id: int = 0
    urls: tuple[str, ...] = ()
    news_sources: tuple[str, ...] = ()
    story_id: str = ""

    @property
    def event_root_code(self) -> str:
        return self.event_code[:2]

    @property
    def sort_key(self) -> tuple:
        """(Date, EventID) order of the events file."""
        return (self.date, *event_id_key(self.event_id))

    @property
    def dedup_key(self) -> tuple:
        """Fields identifying the same event reported by several stories of one day."""
        return (self.source_full, self.target_full or "", self.event_code, self.date)

    def as_row(self) -> tuple[str, ...]:
        """The 27 column values as strings."""
        return (
            self.event_id,
            self.date.strftime("%Y%m%d"),
            str(self.date.year),
            str(self.date.month),
            str(self.date.day),
            self.source_full,
            self.source_entity,
            _opt(self.source_role),
            _opt(self.source_attribute),
            _opt(self.target_full),
            _opt(self.target_entity),
            _opt(self.target_role),
            _opt(self.target_attribute),
            self.event_code,
            self.event_root_code,
            str(self.quad_class),
            _fmt_float(self.goldstein, 1),
            format_issues(self.issues),
            _fmt_float(self.action_lat, 4),
            _fmt_float(self.action_lon, 4),
            _opt(self.location_name),
            _opt(self.geo_country_name),
            _opt(self.geo_state_name),
            str(self.sentence_id),
            ";".join(self.urls),
            ";".join(self.news_sources),
            self.story_id,
        )

    def as_dict(self) -> dict[str, str]:
        """Column name -> formatted value, as written to the events file."""
        return dict(zip(COLUMNS, self.as_row(), strict=True))

    @classmethod
    def from_row(cls, values, path=None, lineno=None) -> EventRecord:
        """Parse the 27 string values of a records file row."""
        if len(values) != len(COLUMNS):
            msg = f"Expected {len(COLUMNS)} tab separated columns, found {len(values)}."
            raise PhoenixRecordsFormatError(msg, path=path, lineno=lineno)
        row = dict(zip(COLUMNS, values, strict=True))

        def opt(name):
            return row[name] or None

        def opt_float(name):
            return float(row[name]) if row[name] else None

        try:
            date = dt.datetime.strptime(row["Date"], "%Y%m%d").date()
            record = cls(
                event_id=row["EventID"],
                date=date,
                source_full=row["SourceActorFull"],
                source_entity=row["SourceActorEntity"],
                source_role=opt("SourceActorRole"),
                source_attribute=opt("SourceActorAttribute"),
                target_full=opt("TargetActorFull"),
                target_entity=opt("TargetActorEntity"),
                target_role=opt("TargetActorRole"),
                target_attribute=opt("TargetActorAttribute"),
                event_code=row["EventCode"],
                quad_class=int(row["QuadClass"]),
                goldstein=float(row["GoldsteinScore"]),
                issues=parse_issues(row["Issues"]),
                action_lat=opt_float("ActionLat"),
                action_lon=opt_float("ActionLong"),
                location_name=opt("LocationName"),
                geo_country_name=opt("GeoCountryName"),
                geo_state_name=opt("GeoStateName"),
                sentence_id=int(row["SentenceID"]),
                urls=tuple(filter(None, row["URLs"].split(";"))),
                news_sources=tuple(filter(None, row["NewsSources"].split(";"))),
                story_id=row["StoryID"],
            )
        except ValueError as err:
            msg = f"Invalid value in records row: {err}"
            raise PhoenixRecordsFormatError(msg, path=path, lineno=lineno) from err
        derived = (row["Year"], row["Month"], row["Day"], row["EventRootCode"])
        expected = (str(date.year), str(date.month), str(date.day), record.event_root_code)
        if derived != expected:
            msg = "Year, Month, Day or EventRootCode disagree with Date and EventCode."
            raise PhoenixRecordsFormatError(msg, path=path, lineno=lineno)
        return record


def write_records(records, path) -> Path:
    """Write records as UTF-8 TSV with LF line endings, header row first."""
    path = Path(path)
    lines = [HEADER]
    lines.extend("\t".join(r.as_row()) for r in records)
    with path.open("w", encoding="utf-8", newline="\n") as f:
        f.write("\n".join(lines) + "\n")
    return path


def read_records(path) -> list[EventRecord]:
    """Read an events file written by `write_records`.

    Raises
    ------
    PhoenixMissingFile
    PhoenixRecordsFormatError
        on a wrong header or a malformed row, with its line number.
    """
    path = Path(path)
    if not path.is_file():
        msg = f"Records file {str(path)!r} does not exist."
        raise PhoenixMissingFile(msg)
    records = []
    with path.open(encoding="utf-8", newline="") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.rstrip("\n").rstrip("\r")
            if lineno == 1:
                if line != HEADER:
                    msg = "Missing or wrong header row."
                    raise PhoenixRecordsFormatError(msg, path=path, lineno=lineno)
                continue
            if not line:
                continue
            records.append(EventRecord.from_row(line.split("\t"), path=path, lineno=lineno))
    return records
