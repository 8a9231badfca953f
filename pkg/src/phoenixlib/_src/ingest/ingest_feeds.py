"""
Feed roster and RSS/Atom polling.
"""

from __future__ import annotations

import logging
import xml.etree.ElementTree as ET
from contextlib import nullcontext
from dataclasses import dataclass, field
from pathlib import Path

import requests

from phoenixlib._src.defaults.defaults_classes import default_settings
from phoenixlib._src.exceptions import (
    PhoenixFeedParseError,
    PhoenixFeedUnreachable,
    PhoenixFormatError,
    PhoenixMissingFile,
)
from phoenixlib._src.ingest.ingest_documents import FetchTask
from phoenixlib._src.input_checks import check_format_input_url

logger = logging.getLogger(__name__)

_ATOM = "{http://www.w3.org/2005/Atom}"


@dataclass(frozen=True)
class FeedEntry:
    source_name: str
    feed_url: str
    language: str = "en"


@dataclass(frozen=True)
class FeedConfig:
    """Roster of polled feeds.

    Parameters
    ----------
    entries: tuple of FeedEntry
        Source names are unique.

    poll_interval: float, optional
        Seconds between poll cycles, by default `defaults.ingest.pollinterval`.
    """

    entries: tuple[FeedEntry, ...]
    poll_interval: float | None = None

    def __post_init__(self):
        names = [e.source_name for e in self.entries]
        dupes = sorted({n for n in names if names.count(n) > 1})
        if dupes:
            msg = f"Feed source names must be unique.\nInstead received duplicates {dupes}."
            raise PhoenixFormatError(msg)
        for e in self.entries:
            check_format_input_url(e.feed_url)
        if self.poll_interval is None:
            object.__setattr__(self, "poll_interval", default_settings.ingest.pollinterval)

    def __len__(self):
        return len(self.entries)


def load_feed_config(path, poll_interval=None) -> FeedConfig:
    """Read a `source_name<TAB>feed_url<TAB>lang` feed list; '#' starts a comment."""
    path = Path(path)
    if not path.is_file():
        msg = f"Feed list {str(path)!r} does not exist."
        raise PhoenixMissingFile(msg)
    entries = []
    seen = set()
    with path.open(encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.split("#", 1)[0].rstrip()
            if not line.strip():
                continue
            parts = [p.strip() for p in line.split("\t")]
            if len(parts) not in (2, 3) or not all(parts):
                msg = f"Expected `source_name<TAB>feed_url<TAB>lang`.\nInstead received {line!r}."
                raise PhoenixFormatError(msg, path=path, lineno=lineno)
            name, url = parts[0], parts[1]
            if name in seen:
                msg = f"Duplicate feed source name {name!r}."
                raise PhoenixFormatError(msg, path=path, lineno=lineno)
            seen.add(name)
            check_format_input_url(url, path=path, lineno=lineno)
            lang = parts[2].lower() if len(parts) == 3 else "en"
            entries.append(FeedEntry(name, url, lang))
    return FeedConfig(tuple(entries), poll_interval)


def parse_feed_links(body) -> list[str]:
    """Item links of an RSS 2.0 or Atom document, in document order.

    Raises
    ------
    PhoenixFeedParseError
        if `body` is not XML or neither RSS nor Atom.
    """
    try:
        root = ET.fromstring(body)
    except ET.ParseError as err:
        msg = f"Feed is not well-formed XML: {err}"
        raise PhoenixFeedParseError(msg) from err
    links = []
    if root.tag == "rss" or root.tag.endswith("RDF"):
        for item in root.iter():
            if item.tag.rsplit("}", 1)[-1] != "item":
                continue
            for child in item:
                if child.tag.rsplit("}", 1)[-1] == "link" and (child.text or "").strip():
                    links.append(child.text.strip())
                    break
    elif root.tag == f"{_ATOM}feed":
        for entry in root.iter(f"{_ATOM}entry"):
            candidates = entry.findall(f"{_ATOM}link")
            preferred = [c for c in candidates if c.get("rel", "alternate") == "alternate"]
            for link in preferred or candidates:
                if link.get("href"):
                    links.append(link.get("href").strip())
                    break
    else:
        msg = f"Unknown feed root element {root.tag!r}, expected RSS or Atom."
        raise PhoenixFeedParseError(msg)
    return list(dict.fromkeys(links))


@dataclass
class PollResult:
    """Tasks of one poll cycle and the per-feed errors it collected."""

    tasks: list[FetchTask] = field(default_factory=list)
    errors: list[tuple[str, Exception]] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)


def fetch_feed(entry: FeedEntry, session=None, timeout=None) -> list[str]:
    """Download and parse one feed."""
    get = requests.get if session is None else session.get
    timeout = default_settings.ingest.timeout if timeout is None else timeout
    try:
        resp = get(
            entry.feed_url,
            timeout=timeout,
            headers={"User-Agent": default_settings.ingest.useragent},
        )
        resp.raise_for_status()
    except requests.RequestException as err:
        msg = f"Feed {entry.source_name!r} at {entry.feed_url} is unreachable: {err}"
        raise PhoenixFeedUnreachable(msg) from err
    return parse_feed_links(resp.content)


def poll_feeds(config: FeedConfig, links, session=None, timeout=None) -> PollResult:
    """Poll every feed once and record its new links.

    Links are recorded in `links` before their tasks are returned, so that a link
    is enqueued at most once per store. Feed failures are collected in the
    result and never abort the cycle. Feeds whose language is not in
    `defaults.ingest.languages` are skipped.

    Parameters
    ----------
    config: FeedConfig

    links: LinkStore
        Store of seen links.

    session: requests.Session, optional

    timeout: float, optional
        Request timeout, by default `defaults.ingest.timeout`.

    Returns
    -------
    PollResult
    """
    result = PollResult()
    languages = default_settings.ingest.languages
    with requests.Session() if session is None else nullcontext(session) as sess:
        for entry in config.entries:
            if languages and entry.language not in languages:
                logger.info(
                    "skipping feed %r in language %r",
                    entry.source_name,
                    entry.language,
                    extra={"event": "ingest.poll.language_skip", "source": entry.source_name},
                )
                result.skipped.append(entry.source_name)
                continue
            try:
                urls = fetch_feed(entry, sess, timeout)
            except (PhoenixFeedUnreachable, PhoenixFeedParseError) as err:
                logger.warning(
                    "feed error: %s",
                    err,
                    extra={"event": "ingest.poll.feed_error", "source": entry.source_name},
                )
                result.errors.append((entry.source_name, err))
                continue
            n_new = 0
            for url in urls:
                try:
                    check_format_input_url(url)
                except PhoenixFormatError:
                    logger.debug("ignoring non-http link %r", url)
                    continue
                task = links.record_if_new(url, entry.source_name)
                if task is not None:
                    result.tasks.append(task)
                    n_new += 1
            logger.info(
                "polled %r: %d links, %d new",
                entry.source_name,
                len(urls),
                n_new,
                extra={"event": "ingest.poll.feed", "source": entry.source_name},
            )
    return result
