"""Story documents, fetch tasks and URL canonicalization."""

from __future__ import annotations

import dataclasses
import datetime as dt
import hashlib
from dataclasses import dataclass
from enum import Enum
from urllib.parse import urlsplit, urlunsplit

from phoenixlib._src.exceptions import PhoenixBadUserInput
from phoenixlib._src.input_checks import check_format_input_url

_DEFAULT_PORTS = {"http": "80", "https": "443"}


class DocStatus(Enum):
    Fetched = "Fetched"
    Parsed = "Parsed"
    Coded = "Coded"
    Failed = "Failed"


_STATUS_RANK = {DocStatus.Fetched: 0, DocStatus.Parsed: 1, DocStatus.Coded: 2}


def canonicalize_url(url: str) -> str:
    """Scheme, host and path of `url`; query and fragment are dropped.

    Examples
    --------
    >>> from phoenixlib.ingest import canonicalize_url
    >>> canonicalize_url("HTTPS://News.Example.com:443/world/story-1?utm_source=rss#top")
    'https://news.example.com/world/story-1'
    """
    check_format_input_url(url)
    parts = urlsplit(url.strip())
    scheme = parts.scheme.lower()
    host = (parts.hostname or "").lower()
    if parts.port is not None and str(parts.port) != _DEFAULT_PORTS.get(scheme):
        host = f"{host}:{parts.port}"
    return urlunsplit((scheme, host, parts.path or "/", "", ""))


def story_id_for(url: str) -> str:
    """Deterministic story id: digest of the canonical URL."""
    return hashlib.sha256(canonicalize_url(url).encode("utf-8")).hexdigest()[:24]


def utcnow() -> dt.datetime:
    return dt.datetime.now(dt.UTC)


@dataclass(frozen=True)
class StoryDocument:
    """A fetched article and everything derived from it.

    `status` only moves forward, Fetched -> Parsed -> Coded; Failed is terminal.
    Use `advance` and `with_parses` to derive updated documents.
    """

    story_id: str
    url: str
    source_name: str
    title: str = ""
    body_text: str = ""
    fetched_at: dt.datetime = dataclasses.field(default_factory=utcnow)
    parse_trees: tuple[str, ...] | None = None
    status: DocStatus = DocStatus.Fetched

    @classmethod
    def from_url(cls, url, source_name, **kwargs) -> StoryDocument:
        return cls(story_id_for(url), url, source_name, **kwargs)

    @property
    def event_date(self) -> dt.date:
        """UTC date of `fetched_at`."""
        fetched = self.fetched_at
        if fetched.tzinfo is not None:
            fetched = fetched.astimezone(dt.UTC)
        return fetched.date()

    @property
    def text(self) -> str:
        return f"{self.title}\n{self.body_text}" if self.title else self.body_text

    def advance(self, status: DocStatus) -> StoryDocument:
        """Copy of the document moved to `status`.

        Raises
        ------
        PhoenixBadUserInput
            for a backward transition or one leaving `Failed`.
        """
        status = DocStatus(status)
        if status is self.status:
            return self
        if self.status is DocStatus.Failed or (
            status is not DocStatus.Failed and _STATUS_RANK[status] < _STATUS_RANK[self.status]
        ):
            msg = (
                f"Story {self.story_id!r} cannot move from {self.status.value} to {status.value}."
            )
            raise PhoenixBadUserInput(msg)
        return dataclasses.replace(self, status=status)

    def with_parses(self, trees) -> StoryDocument:
        """Copy carrying `trees`, moved forward to Parsed if it was Fetched."""
        doc = dataclasses.replace(self, parse_trees=tuple(trees))
        if doc.status is DocStatus.Fetched:
            doc = doc.advance(DocStatus.Parsed)
        return doc

    def to_payload(self) -> dict:
        return {
            "story_id": self.story_id,
            "url": self.url,
            "source_name": self.source_name,
            "title": self.title,
            "body_text": self.body_text,
            "fetched_at": self.fetched_at.isoformat(),
            "parse_trees": None if self.parse_trees is None else list(self.parse_trees),
            "status": self.status.value,
        }

    @classmethod
    def from_payload(cls, payload: dict) -> StoryDocument:
        trees = payload.get("parse_trees")
        return cls(
            story_id=payload["story_id"],
            url=payload["url"],
            source_name=payload["source_name"],
            title=payload.get("title", ""),
            body_text=payload.get("body_text", ""),
            fetched_at=dt.datetime.fromisoformat(payload["fetched_at"]),
            parse_trees=None if trees is None else tuple(trees),
            status=DocStatus(payload["status"]),
        )


@dataclass(frozen=True)
class FetchTask:
    url: str
    source_name: str
    enqueued_at: dt.datetime = dataclasses.field(default_factory=utcnow)
    attempts: int = 0

    @property
    def story_id(self) -> str:
        return story_id_for(self.url)
