"""Attaching externally produced parse trees to stored stories."""

from __future__ import annotations

import datetime as dt
import logging
from dataclasses import dataclass

from phoenixlib._src.exceptions import PhoenixBadUserInput, PhoenixFormatError
from phoenixlib._src.ingest.ingest_documents import DocStatus, StoryDocument, story_id_for
from phoenixlib._src.input_checks import check_format_input_date
from phoenixlib._src.treebank.treebank_tree import read_treebank_batches

logger = logging.getLogger(__name__)


@dataclass
class ImportReport:
    updated: int = 0
    created: int = 0
    skipped: int = 0


def block_story_id(block, path=None) -> str:
    """Story id of a treebank block, from its `story_id` or `url` header."""
    story_id = block.headers.get("story_id")
    if story_id:
        return story_id
    if block.headers.get("url"):
        return story_id_for(block.headers["url"])
    msg = "Treebank block has neither a `# story_id:` nor a `# url:` header."
    raise PhoenixFormatError(msg, path=path, lineno=block.lineno)


def block_fetched_at(block, path=None) -> dt.datetime | None:
    """Midnight UTC of the block's `# date:` header, if any."""
    text = block.headers.get("date")
    if not text:
        return None
    try:
        day = check_format_input_date(text)
    except PhoenixBadUserInput as err:
        raise PhoenixFormatError(str(err), path=path, lineno=block.lineno) from err
    return dt.datetime.combine(day, dt.time(), tzinfo=dt.UTC)


def import_parses(path, store) -> ImportReport:
    """Store the parse trees of a treebank batch file with their stories.

    Each block names its story with a `# story_id:` (or `# url:`) header. Trees
    of a stored story replace its parse trees and move it forward to Parsed.
    Unknown stories are created as Parsed documents from the optional `url`,
    `source`, `title` and `date` headers. Failed stories are skipped.

    Parameters
    ----------
    path: str or Path
        Treebank batch file.

    store: DocumentStore

    Returns
    -------
    ImportReport
    """
    report = ImportReport()
    for block in read_treebank_batches(path):
        story_id = block_story_id(block, path)
        if not block.trees:
            logger.warning(
                "treebank block of story %r has no trees",
                story_id,
                extra={"event": "ingest.import.empty", "story_id": story_id},
            )
            report.skipped += 1
            continue
        doc = store.get(story_id)
        if doc is None:
            fetched_at = block_fetched_at(block, path)
            extra = {} if fetched_at is None else {"fetched_at": fetched_at}
            doc = StoryDocument(
                story_id=story_id,
                url=block.headers.get("url", ""),
                source_name=block.headers.get("source", ""),
                title=block.headers.get("title", ""),
                status=DocStatus.Fetched,
                **extra,
            )
            report.created += 1
        elif doc.status is DocStatus.Failed:
            logger.warning(
                "not attaching parses to failed story %r",
                story_id,
                extra={"event": "ingest.import.failed_story", "story_id": story_id},
            )
            report.skipped += 1
            continue
        else:
            report.updated += 1
        store.store_document(doc.with_parses(block.trees))
    logger.info(
        "imported parses: %d updated, %d created, %d skipped",
        report.updated,
        report.created,
        report.skipped,
        extra={"event": "ingest.import.summary"},
    )
    return report
