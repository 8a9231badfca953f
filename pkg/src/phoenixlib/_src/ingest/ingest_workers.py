"""
Concurrent article fetching with retries, backoff and per-host politeness.
"""

from __future__ import annotations

import logging
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from urllib.parse import urlsplit

import requests

from phoenixlib._src.defaults.defaults_classes import default_settings
from phoenixlib._src.exceptions import PhoenixFetchError, PhoenixNoContent
from phoenixlib._src.ingest.ingest_content import extract_content
from phoenixlib._src.ingest.ingest_documents import FetchTask, StoryDocument, utcnow
from phoenixlib._src.ingest.ingest_feeds import poll_feeds
from phoenixlib._src.ingest.ingest_store import LinkState
from phoenixlib._src.input_checks import check_pool_size

logger = logging.getLogger(__name__)

RETRY_STATUS = frozenset({429, 500, 502, 503, 504})


@dataclass
class IngestReport:
    """Outcome counts of one batch of fetch tasks."""

    fetched: int = 0
    failed: int = 0
    duplicate: int = 0
    attempts: int = 0
    errors: dict[str, str] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "fetched": self.fetched,
            "failed": self.failed,
            "duplicate": self.duplicate,
            "attempts": self.attempts,
        }


class HostThrottle:
    """Keeps consecutive requests to one host at least `delay` seconds apart."""

    def __init__(self, delay: float, clock=time.monotonic, sleep=time.sleep):
        self._delay = delay
        self._clock = clock
        self._sleep = sleep
        self._lock = threading.Lock()
        self._next_slot: dict[str, float] = {}

    def wait(self, url: str) -> None:
        if self._delay <= 0:
            return
        host = urlsplit(url).netloc.lower()
        with self._lock:
            now = self._clock()
            slot = max(now, self._next_slot.get(host, now))
            self._next_slot[host] = slot + self._delay
        if slot > now:
            self._sleep(slot - now)


@dataclass(frozen=True)
class _FetchSettings:
    timeout: float
    max_retries: int
    backoff: float
    min_text: int
    user_agent: str


def _is_retryable(err: Exception) -> bool:
    if isinstance(err, requests.ConnectionError | requests.Timeout):
        return True
    if isinstance(err, requests.HTTPError) and err.response is not None:
        return err.response.status_code in RETRY_STATUS
    return False


def fetch_article(task: FetchTask, settings: _FetchSettings, throttle: HostThrottle, sleep):
    """Download and extract one article.

    Returns
    -------
    (StoryDocument, attempts)

    Raises
    ------
    PhoenixFetchError
        once the attempts are exhausted or on a non-retryable failure. The
        number of attempts made is attached as `attempts`.
    """
    attempts = 0
    while True:
        attempts += 1
        throttle.wait(task.url)
        try:
            resp = requests.get(
                task.url,
                timeout=settings.timeout,
                headers={"User-Agent": settings.user_agent},
            )
            resp.raise_for_status()
            title, body = extract_content(resp.text, min_text=settings.min_text)
        except PhoenixNoContent as err:
            msg = f"{task.url}: {err}"
            raise PhoenixFetchError(msg, attempts) from err
        except requests.RequestException as err:
            if not _is_retryable(err) or attempts >= settings.max_retries:
                msg = f"{task.url}: {err}"
                raise PhoenixFetchError(msg, attempts) from err
            delay = settings.backoff * 2 ** (attempts - 1)
            logger.info(
                "retrying %s in %.2fs after attempt %d: %s",
                task.url,
                delay,
                attempts,
                err,
                extra={"event": "ingest.fetch.retry", "url": task.url, "attempt": attempts},
            )
            if delay > 0:
                sleep(delay)
            continue
        doc = StoryDocument.from_url(
            task.url, task.source_name, title=title, body_text=body, fetched_at=utcnow()
        )
        return doc, attempts


def run_workers(
    tasks,
    pool_size,
    store,
    links=None,
    *,
    timeout=None,
    max_retries=None,
    backoff=None,
    politeness=None,
    sleep=time.sleep,
) -> IngestReport:
    """Fetch tasks concurrently and store the articles as Fetched documents.

    Parameters
    ----------
    tasks: iterable of FetchTask

    pool_size: int
        Number of worker threads, at least 1.

    store: DocumentStore

    links: LinkStore, optional
        Updated with the final state of every link.

    timeout, max_retries, backoff, politeness: optional
        Override `defaults.ingest.timeout`, `maxretries`, `backoff` and `politeness`.

    sleep: callable
        Used for backoff and politeness waits.

    Returns
    -------
    IngestReport
        Stories already in the store count as duplicates and are not fetched
        again. Failures are counted, never raised.
    """
    check_pool_size(pool_size)
    ingest = default_settings.ingest
    settings = _FetchSettings(
        timeout=ingest.timeout if timeout is None else timeout,
        max_retries=ingest.maxretries if max_retries is None else max_retries,
        backoff=ingest.backoff if backoff is None else backoff,
        min_text=ingest.mintext,
        user_agent=ingest.useragent,
    )
    throttle = HostThrottle(ingest.politeness if politeness is None else politeness, sleep=sleep)
    report = IngestReport()
    report_lock = threading.Lock()
    claimed: set[str] = set()

    def work(task: FetchTask):
        with report_lock:
            if task.story_id in claimed:
                # the claiming task marks the link
                report.duplicate += 1
                return
            claimed.add(task.story_id)
            state = None
            if task.story_id in store:
                report.duplicate += 1
                state = LinkState.Duplicate
        if state is None:
            try:
                doc, attempts = fetch_article(task, settings, throttle, sleep)
            except PhoenixFetchError as err:
                logger.warning(
                    "fetch failed: %s",
                    err,
                    extra={"event": "ingest.fetch.failed", "url": task.url},
                )
                with report_lock:
                    report.failed += 1
                    report.attempts += err.attempts
                    report.errors[task.url] = str(err)
                state = LinkState.Failed
            else:
                stored = store.add_if_absent(doc)
                with report_lock:
                    report.attempts += attempts
                    if stored:
                        report.fetched += 1
                    else:
                        report.duplicate += 1
                state = LinkState.Fetched if stored else LinkState.Duplicate
        if links is not None:
            links.mark(task.url, state)

    with ThreadPoolExecutor(max_workers=pool_size) as pool:
        # list() re-raises worker exceptions
        list(pool.map(work, tasks))
    logger.info(
        "fetched %d, failed %d, duplicate %d (%d attempts)",
        report.fetched,
        report.failed,
        report.duplicate,
        report.attempts,
        extra={"event": "ingest.fetch.summary", **report.as_dict()},
    )
    return report


def poll_loop(config, links, store, cycles=None, pool_size=None, sleep=time.sleep, session=None):
    """Poll the feeds and fetch every pending link, once per poll interval.

    Parameters
    ----------
    config: FeedConfig

    links: LinkStore

    store: DocumentStore

    cycles: int, optional
        Number of cycles to run, forever by default.

    pool_size: int, optional
        Worker count, by default `defaults.ingest.poolsize`.

    Returns
    -------
    list of (PollResult, IngestReport), one per cycle.
    """
    pool_size = default_settings.ingest.poolsize if pool_size is None else pool_size
    history = []
    cycle = 0
    while cycles is None or cycle < cycles:
        started = time.monotonic()
        polled = poll_feeds(config, links, session=session)
        report = run_workers(links.pending_tasks(), pool_size, store, links, sleep=sleep)
        cycle += 1
        history.append((polled, report))
        logger.info(
            "poll cycle %d: %d new links, %d feed errors",
            cycle,
            len(polled.tasks),
            len(polled.errors),
            extra={"event": "ingest.poll.cycle", "cycle": cycle},
        )
        if cycles is not None and cycle >= cycles:
            break
        remaining = config.poll_interval - (time.monotonic() - started)
        if remaining > 0:
            sleep(remaining)
    return history
