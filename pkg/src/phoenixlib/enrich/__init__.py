"""
The `phoenixlib.enrich` subpackage turns coded events into full event records:
QuadClass, Goldstein score, actor decomposition, issues and geolocation.
"""

__all__ = [
    "QUAD_CLASS",
    "ActorDecomposition",
    "DocumentContext",
    "EnrichTables",
    "Gazetteer",
    "GazetteerEntry",
    "GeoResult",
    "GoldsteinTable",
    "decompose_actor",
    "document_context",
    "enrich_event",
    "geolocate",
    "goldstein",
    "load_gazetteer",
    "load_goldstein_table",
    "quad_class",
]

from phoenixlib._src.enrich.enrich_actors import ActorDecomposition, decompose_actor
from phoenixlib._src.enrich.enrich_event import (
    DocumentContext,
    EnrichTables,
    document_context,
    enrich_event,
)
from phoenixlib._src.enrich.enrich_geo import (
    Gazetteer,
    GazetteerEntry,
    GeoResult,
    geolocate,
    load_gazetteer,
)
from phoenixlib._src.enrich.enrich_tables import (
    QUAD_CLASS,
    GoldsteinTable,
    goldstein,
    load_goldstein_table,
    quad_class,
)
