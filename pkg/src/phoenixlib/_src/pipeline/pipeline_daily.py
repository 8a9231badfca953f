"""
Daily runs: code and enrich the stored parses of one day and write the
events file with its manifest.
"""

from __future__ import annotations

import dataclasses
import datetime as dt
import logging
from dataclasses import dataclass
from pathlib import Path

from phoenixlib._src.coder.coder_story import code_story
from phoenixlib._src.defaults.defaults_classes import default_settings
from phoenixlib._src.enrich.enrich_event import document_context, enrich_event
from phoenixlib._src.exceptions import PhoenixMissingFile, PhoenixNoInput, PhoenixNoParses
from phoenixlib._src.ingest.ingest_documents import DocStatus, utcnow
from phoenixlib._src.input_checks import check_format_input_date
from phoenixlib._src.pipeline.pipeline_records import write_records
from phoenixlib._version import version as software_version

logger = logging.getLogger(__name__)

RECORDS_TEMPLATE = "phoenix-events.{:%Y%m%d}.tsv"
MANIFEST_TEMPLATE = "phoenix-events.{:%Y%m%d}.manifest.txt"
TIMESTAMP_KEYS = ("started_at", "finished_at")


@dataclass(frozen=True)
class DailyRunManifest:
    """Provenance of one daily events file."""

    run_date: dt.date
    dictionary_version: str
    goldstein_version: str
    software_version: str
    input_story_count: int
    coded_event_count: int
    emitted_event_count: int
    dedup: bool
    geolocate: bool
    started_at: dt.datetime
    finished_at: dt.datetime

    def as_lines(self) -> list[str]:
        lines = []
        for f in dataclasses.fields(self):
            val = getattr(self, f.name)
            if isinstance(val, dt.datetime):
                val = val.isoformat()
            elif isinstance(val, dt.date):
                val = val.strftime("%Y%m%d")
            elif isinstance(val, bool):
                val = str(val).lower()
            lines.append(f"{f.name}: {val}")
        return lines


def write_manifest(manifest: DailyRunManifest, path) -> Path:
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="\n") as f:
        f.write("\n".join(manifest.as_lines()) + "\n")
    return path


def read_manifest(path) -> dict[str, str]:
    """`key: value` lines of a manifest file as a dict of strings."""
    path = Path(path)
    if not path.is_file():
        msg = f"Manifest {str(path)!r} does not exist."
        raise PhoenixMissingFile(msg)
    out = {}
    with path.open(encoding="utf-8") as f:
        for line in f:
            key, sep, val = line.rstrip("\n").partition(": ")
            if sep:
                out[key] = val
    return out


def one_a_day(records) -> list:
    """Merge records repeating (source, target, event code, date).

    The merged record is the one with the smallest EventID; its URLs and news
    sources become the unions, in order of first sighting.
    """
    merged: dict[tuple, object] = {}
    for rec in sorted(records, key=lambda r: r.sort_key):
        first = merged.get(rec.dedup_key)
        if first is None:
            merged[rec.dedup_key] = rec
            continue
        merged[rec.dedup_key] = dataclasses.replace(
            first,
            urls=tuple(dict.fromkeys(first.urls + rec.urls)),
            news_sources=tuple(dict.fromkeys(first.news_sources + rec.news_sources)),
        )
    return list(merged.values())


def code_documents(docs, dicts, tables, date, max_depth=None) -> list:
    """Code and enrich stories in the given order.

    EventIDs `YYYYMMDD-NNNNNN` of `date` number the events in story order,
    sentence order within a story. Stories without parse trees are skipped.
    """
    records = []
    seq = 0
    for doc in docs:
        try:
            events = code_story(doc, dicts, max_depth=max_depth)
        except PhoenixNoParses:
            continue
        context = document_context(doc, tables)
        for ev in events:
            seq += 1
            event_id = f"{date:%Y%m%d}-{seq:06d}"
            records.append(enrich_event(ev, doc, tables, event_id=event_id, context=context))
    return records


def run_daily(date, store, dicts, tables, dedup=None, output_dir=None, max_depth=None):
    """Code, enrich, filter and write the events of one day.

    Stories in Parsed or Coded status whose event date is `date` are coded in
    story id order. EventIDs `YYYYMMDD-NNNNNN` follow that order, sentence order
    within a story. Parsed stories move on to Coded afterwards. No network
    access happens here, so a run can be repeated with updated dictionaries
    over the same stored parses.

    Parameters
    ----------
    date: date or str
        Run date.

    store: DocumentStore

    dicts: DictionarySet

    tables: EnrichTables

    dedup: bool, optional
        Apply the one-a-day filter, by default `defaults.pipeline.dedup`.

    output_dir: str or Path, optional
        By default `defaults.pipeline.outputdir`.

    max_depth: int, optional
        By default `defaults.coder.maxdepth`.

    Returns
    -------
    (records_path, DailyRunManifest)

    Raises
    ------
    PhoenixNoInput
        if no story of that day has parse trees.
    """
    started_at = utcnow()
    date = check_format_input_date(date)
    dedup = default_settings.pipeline.dedup if dedup is None else dedup
    output_dir = Path(default_settings.pipeline.outputdir if output_dir is None else output_dir)

    docs = [
        d
        for d in store.load_documents(status=(DocStatus.Parsed, DocStatus.Coded), start=date, end=date)
        if d.parse_trees
    ]
    if not docs:
        msg = f"No parsed stories for {date.isoformat()} in {store!r}."
        raise PhoenixNoInput(msg)

    records = code_documents(docs, dicts, tables, date, max_depth=max_depth)
    coded = len(records)
    if dedup:
        records = one_a_day(records)
    records.sort(key=lambda r: r.sort_key)

    output_dir.mkdir(parents=True, exist_ok=True)
    records_path = write_records(records, output_dir / RECORDS_TEMPLATE.format(date))
    for doc in docs:
        if doc.status is DocStatus.Parsed:
            store.store_document(doc.advance(DocStatus.Coded))

    manifest = DailyRunManifest(
        run_date=date,
        dictionary_version=dicts.version,
        goldstein_version=tables.goldstein.version,
        software_version=software_version,
        input_story_count=len(docs),
        coded_event_count=coded,
        emitted_event_count=len(records),
        dedup=dedup,
        geolocate=tables.geolocate,
        started_at=started_at,
        finished_at=utcnow(),
    )
    write_manifest(manifest, output_dir / MANIFEST_TEMPLATE.format(date))
    logger.info(
        "daily run %s: %d stories, %d events coded, %d written to %s",
        date.isoformat(),
        len(docs),
        coded,
        len(records),
        records_path,
        extra={"event": "pipeline.run_daily", "run_date": date.isoformat()},
    )
    return records_path, manifest
