"""
Append-only, checksummed JSON-lines stores for story documents and seen links.

A store directory holds `documents.jsonl` and `links.jsonl`. Every line is
`{"sha256": <hex digest of the payload>, "payload": {...}}`; the latest line
for a key wins. Files are replayed into memory when a store is opened, and
every write appends one line under a lock.
"""

from __future__ import annotations

import datetime as dt
import hashlib
import json
import logging
import threading
from enum import Enum
from pathlib import Path

from phoenixlib._src.exceptions import PhoenixStoreCorruption
from phoenixlib._src.ingest.ingest_documents import (
    DocStatus,
    FetchTask,
    StoryDocument,
    canonicalize_url,
    story_id_for,
    utcnow,
)
from phoenixlib._src.input_checks import check_format_input_date

logger = logging.getLogger(__name__)

DOCUMENTS_FILE = "documents.jsonl"
LINKS_FILE = "links.jsonl"


def _digest(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True, ensure_ascii=False, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


class _JsonLinesLog:
    """Keyed append-only log with in-memory replay."""

    def __init__(self, path: Path, key: str):
        self._path = Path(path)
        self._key = key
        self._lock = threading.RLock()
        self._index: dict[str, dict] = {}
        self._path.parent.mkdir(parents=True, exist_ok=True)
        if self._path.exists():
            self._replay()
        else:
            self._path.touch()

    def _replay(self):
        with self._path.open(encoding="utf-8") as f:
            for lineno, raw in enumerate(f, start=1):
                if not raw.strip():
                    continue
                try:
                    line = json.loads(raw)
                    payload = line["payload"]
                    ok = isinstance(payload, dict) and line["sha256"] == _digest(payload)
                except (json.JSONDecodeError, KeyError, TypeError) as err:
                    msg = f"{self._path}:{lineno}: unreadable store line ({err})."
                    raise PhoenixStoreCorruption(msg) from err
                if not ok or self._key not in payload:
                    msg = f"{self._path}:{lineno}: checksum mismatch."
                    raise PhoenixStoreCorruption(msg)
                self._index[payload[self._key]] = payload
        logger.debug(
            "replayed %d entries from %s",
            len(self._index),
            self._path,
            extra={"event": "ingest.store.replay"},
        )

    def append(self, payload: dict) -> None:
        line = json.dumps({"sha256": _digest(payload), "payload": payload}, ensure_ascii=False)
        with self._lock:
            with self._path.open("a", encoding="utf-8", newline="\n") as f:
                f.write(line + "\n")
                f.flush()
            self._index[payload[self._key]] = payload

    @property
    def lock(self):
        return self._lock

    def get(self, key):
        return self._index.get(key)

    def values(self):
        with self._lock:
            return list(self._index.values())

    def __contains__(self, key):
        return key in self._index

    def __len__(self):
        return len(self._index)


class DocumentStore:
    """Story documents keyed by `story_id`.

    Parameters
    ----------
    root: str or Path
        Store directory, created if missing.
    """

    def __init__(self, root):
        self.root = Path(root)
        self._log = _JsonLinesLog(self.root / DOCUMENTS_FILE, key="story_id")

    def __repr__(self):
        return f"DocumentStore({str(self.root)!r}, documents={len(self)})"

    def __len__(self):
        return len(self._log)

    def __contains__(self, story_id):
        return story_id in self._log

    def store_document(self, doc: StoryDocument) -> None:
        """Insert or replace the whole document."""
        self._log.append(doc.to_payload())

    def add_if_absent(self, doc: StoryDocument) -> bool:
        """Store `doc` unless its story id is taken. Returns whether it was stored."""
        with self._log.lock:
            if doc.story_id in self._log:
                return False
            self.store_document(doc)
            return True

    def get(self, story_id) -> StoryDocument | None:
        payload = self._log.get(story_id)
        return None if payload is None else StoryDocument.from_payload(payload)

    def load_documents(self, status=None, start=None, end=None) -> list[StoryDocument]:
        """Documents ordered by story id, optionally filtered.

        Parameters
        ----------
        status: DocStatus, str or iterable of those, optional
            Keep documents in one of these states.

        start, end: date or str, optional
            Inclusive range of event dates (UTC date of `fetched_at`).
        """
        if status is not None:
            if isinstance(status, DocStatus | str):
                status = (status,)
            status = {DocStatus(s) for s in status}
        if start is not None:
            start = check_format_input_date(start, sig_name="start")
        if end is not None:
            end = check_format_input_date(end, sig_name="end")
        docs = []
        for payload in self._log.values():
            doc = StoryDocument.from_payload(payload)
            if status is not None and doc.status not in status:
                continue
            if start is not None and doc.event_date < start:
                continue
            if end is not None and doc.event_date > end:
                continue
            docs.append(doc)
        return sorted(docs, key=lambda d: d.story_id)


class LinkState(Enum):
    Pending = "pending"
    Fetched = "fetched"
    Failed = "failed"
    Duplicate = "duplicate"


class LinkStore:
    """Seen links keyed by the story id of their canonical URL.

    A link is recorded as `pending` when it is first polled and updated once its
    fetch finished. Pending links survive crashes and come back through
    `pending_tasks`.
    """

    def __init__(self, root):
        self.root = Path(root)
        self._log = _JsonLinesLog(self.root / LINKS_FILE, key="story_id")

    def __repr__(self):
        return f"LinkStore({str(self.root)!r}, links={len(self)})"

    def __len__(self):
        return len(self._log)

    def seen(self, url) -> bool:
        return story_id_for(url) in self._log

    def state(self, url) -> LinkState | None:
        payload = self._log.get(story_id_for(url))
        return None if payload is None else LinkState(payload["state"])

    def record_if_new(self, url, source_name) -> FetchTask | None:
        """Atomically record an unseen link and return its fetch task."""
        story_id = story_id_for(url)
        with self._log.lock:
            if story_id in self._log:
                return None
            task = FetchTask(url, source_name, utcnow(), 0)
            self._log.append(
                {
                    "story_id": story_id,
                    "url": url,
                    "canonical_url": canonicalize_url(url),
                    "source_name": source_name,
                    "enqueued_at": task.enqueued_at.isoformat(),
                    "state": LinkState.Pending.value,
                }
            )
            return task

    def mark(self, url, state: LinkState) -> None:
        story_id = story_id_for(url)
        with self._log.lock:
            payload = self._log.get(story_id)
            if payload is None:
                payload = {
                    "story_id": story_id,
                    "url": url,
                    "source_name": "",
                    "enqueued_at": utcnow().isoformat(),
                }
            self._log.append({**payload, "state": LinkState(state).value})

    def pending_tasks(self) -> list[FetchTask]:
        """Tasks for links recorded but never fetched, oldest first."""
        tasks = [
            FetchTask(
                p["url"],
                p["source_name"],
                dt.datetime.fromisoformat(p["enqueued_at"]),
                0,
            )
            for p in self._log.values()
            if p["state"] == LinkState.Pending.value
        ]
        return sorted(tasks, key=lambda t: (t.enqueued_at, t.url))
