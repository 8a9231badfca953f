"""
The `phoenixlib.ingest` subpackage polls news feeds, fetches and extracts
articles and keeps them in an append-only document store.
"""

__all__ = [
    "DocStatus",
    "DocumentStore",
    "FeedConfig",
    "FeedEntry",
    "FetchTask",
    "HostThrottle",
    "ImportReport",
    "IngestReport",
    "LinkState",
    "LinkStore",
    "PollResult",
    "StoryDocument",
    "canonicalize_url",
    "extract_content",
    "import_parses",
    "load_feed_config",
    "parse_feed_links",
    "poll_feeds",
    "poll_loop",
    "run_workers",
    "story_id_for",
]

from phoenixlib._src.ingest.ingest_content import extract_content
from phoenixlib._src.ingest.ingest_documents import (
    DocStatus,
    FetchTask,
    StoryDocument,
    canonicalize_url,
    story_id_for,
)
from phoenixlib._src.ingest.ingest_feeds import (
    FeedConfig,
    FeedEntry,
    PollResult,
    load_feed_config,
    parse_feed_links,
    poll_feeds,
)
from phoenixlib._src.ingest.ingest_import import ImportReport, import_parses
from phoenixlib._src.ingest.ingest_store import DocumentStore, LinkState, LinkStore
from phoenixlib._src.ingest.ingest_workers import (
    HostThrottle,
    IngestReport,
    poll_loop,
    run_workers,
)
