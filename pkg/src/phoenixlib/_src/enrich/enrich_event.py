"""Assembly of full event records from coded events."""

from __future__ import annotations

from dataclasses import dataclass

from phoenixlib._src.enrich.enrich_actors import decompose_actor
from phoenixlib._src.enrich.enrich_geo import Gazetteer, GeoResult, geolocate
from phoenixlib._src.enrich.enrich_tables import GoldsteinTable, quad_class
from phoenixlib._src.pipeline.pipeline_records import EventRecord


@dataclass(frozen=True)
class EnrichTables:
    """Read-only tables used to enrich events.

    Parameters
    ----------
    dicts: DictionarySet
        Code sets for actor decomposition and the issue keywords.

    goldstein: GoldsteinTable

    gazetteer: Gazetteer, optional
        Needed when `geolocate` is on.

    geolocate: bool, default=False
        Fill the location columns.
    """

    dicts: object
    goldstein: GoldsteinTable
    gazetteer: Gazetteer | None = None
    geolocate: bool = False


@dataclass(frozen=True)
class DocumentContext:
    """Story-level enrichment shared by all events of a story."""

    issues: tuple[tuple[str, int], ...] = ()
    geo: GeoResult | None = None


def document_context(doc, tables: EnrichTables) -> DocumentContext:
    issues = tuple(tables.dicts.match_issues(doc.text))
    geo = None
    if tables.geolocate and tables.gazetteer is not None:
        geo = geolocate(doc, tables.gazetteer)
    return DocumentContext(issues, geo)


def enrich_event(ev, doc, tables: EnrichTables, event_id="", context=None) -> EventRecord:
    """Build the 27-column record of a coded event.

    Parameters
    ----------
    ev: CodedEvent

    doc: StoryDocument
        Story of the event. It provides the date, URL, source, story id, and the
        text searched for issues and places.

    tables: EnrichTables

    event_id: str
        Identifier written to the EventID column.

    context: DocumentContext, optional
        Precomputed story-level issues and location.

    Returns
    -------
    EventRecord

    Examples
    --------
    >>> from phoenixlib.coder import CodedEvent
    >>> from phoenixlib.dictionaries import DictionarySet
    >>> from phoenixlib.enrich import EnrichTables, enrich_event, load_goldstein_table
    >>> from phoenixlib.ingest import StoryDocument
    >>> import datetime as dt
    >>> tables = EnrichTables(DictionarySet(roles={"GOV"}, version="toy"), load_goldstein_table())
    >>> doc = StoryDocument.from_url(
    ...     "https://example.com/a", "example",
    ...     fetched_at=dt.datetime(2014, 6, 20, 12, tzinfo=dt.UTC),
    ... )
    >>> rec = enrich_event(CodedEvent("USAGOV", "RUS", "111"), doc, tables)
    >>> rec.event_root_code, rec.quad_class, rec.date.month
    ('11', 3, 6)
    """
    if context is None:
        context = document_context(doc, tables)
    source = decompose_actor(ev.source_code, tables.dicts)
    target = None if ev.target_code is None else decompose_actor(ev.target_code, tables.dicts)
    geo = context.geo
    return EventRecord(
        event_id=event_id,
        date=doc.event_date,
        source_full=source.full,
        source_entity=source.entity,
        source_role=source.role,
        source_attribute=source.attribute,
        target_full=None if target is None else target.full,
        target_entity=None if target is None else target.entity,
        target_role=None if target is None else target.role,
        target_attribute=None if target is None else target.attribute,
        event_code=ev.event_code,
        quad_class=quad_class(ev.root_code),
        goldstein=tables.goldstein.score(ev.event_code),
        issues=context.issues,
        action_lat=None if geo is None else geo.lat,
        action_lon=None if geo is None else geo.lon,
        location_name=None if geo is None else geo.location_name,
        geo_country_name=None if geo is None else geo.country_name,
        geo_state_name=None if geo is None else geo.state_name,
        sentence_id=ev.sentence_id,
        urls=(doc.url,) if doc.url else (),
        news_sources=(doc.source_name,) if doc.source_name else (),
        story_id=doc.story_id,
    )
