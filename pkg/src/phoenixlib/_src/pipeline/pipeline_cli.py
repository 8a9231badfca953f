"""
Command line interface: `phoenix <subcommand> [options]`.

Exit status is 0 on success, 1 on usage errors and 2 when a command fails.
"""

from __future__ import annotations

import argparse
import datetime as dt
import logging
import sys
from itertools import groupby

from phoenixlib._src.defaults.defaults_classes import default_settings
from phoenixlib._src.defaults.defaults_utility import (
    SUPPORTED_PLOTTING_BACKENDS,
    read_config_file,
)
from phoenixlib._src.dictionaries.dict_loader import load_dictionaries
from phoenixlib._src.enrich.enrich_event import EnrichTables
from phoenixlib._src.enrich.enrich_geo import load_gazetteer
from phoenixlib._src.enrich.enrich_tables import load_goldstein_table
from phoenixlib._src.exceptions import PhoenixBadUserInput, PhoenixError
from phoenixlib._src.ingest.ingest_documents import DocStatus, StoryDocument
from phoenixlib._src.ingest.ingest_feeds import load_feed_config, poll_feeds
from phoenixlib._src.ingest.ingest_import import (
    block_fetched_at,
    block_story_id,
    import_parses,
)
from phoenixlib._src.ingest.ingest_store import DocumentStore, LinkStore
from phoenixlib._src.ingest.ingest_workers import poll_loop, run_workers
from phoenixlib._src.input_checks import check_format_input_date
from phoenixlib._src.logging_config import LOG_FORMATS, configure_logging
from phoenixlib._src.pipeline.pipeline_daily import code_documents, run_daily
from phoenixlib._src.pipeline.pipeline_records import HEADER, write_records
from phoenixlib._src.pipeline.pipeline_report import REPORT_KINDS, report
from phoenixlib._src.treebank.treebank_tree import read_treebank_batches
from phoenixlib._version import version

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2


class UsageError(Exception):
    """command line arguments that cannot be acted on"""


class _Parser(argparse.ArgumentParser):
    """argparse parser exiting with status 1 on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="phoenix",
        description="Scrape news stories, code political events from parse trees "
        "and write daily event files.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {version}")
    parser.add_argument("--config", help="TOML file applied to the library defaults")
    parser.add_argument(
        "--store", default="phoenix-store", help="document store directory (default: %(default)s)"
    )
    parser.add_argument("--actors", help="actor dictionary file")
    parser.add_argument("--verbs", help="verb dictionary file")
    parser.add_argument("--issues", help="issue keyword file")
    parser.add_argument("--code-sets", help="actor role and attribute code sets")
    parser.add_argument("--goldstein", help="Goldstein table (default: packaged table)")
    parser.add_argument("--gazetteer", help="gazetteer TSV, needed for --geolocate")
    parser.add_argument("--log-level", default="WARNING", help="(default: %(default)s)")
    parser.add_argument("--log-format", default="text", choices=LOG_FORMATS)

    sub = parser.add_subparsers(dest="command", metavar="<command>", parser_class=_Parser)

    p = sub.add_parser("poll", help="poll the feeds and record new links")
    p.add_argument("--feeds", required=True, help="feed list: name<TAB>url<TAB>lang")
    p.add_argument("--loop", action="store_true", help="poll and fetch every poll interval")
    p.add_argument("--cycles", type=int, help="stop --loop after this many cycles")
    p.add_argument("--pool-size", type=int, help="fetch workers for --loop")

    p = sub.add_parser("fetch", help="fetch every pending link into the store")
    p.add_argument("--pool-size", type=int, help="worker threads (default: ingest.poolsize)")

    p = sub.add_parser("import-parses", help="attach treebank batch files to stored stories")
    p.add_argument("files", nargs="+", help="treebank batch files")

    p = sub.add_parser("code", help="code treebank batch files without a store")
    p.add_argument("files", nargs="+", help="treebank batch files")
    p.add_argument("--output", "-o", help="records file (default: stdout)")
    p.add_argument(
        "--date", help="date of blocks without a `# date:` header, YYYY-MM-DD (required for them)"
    )

    p = sub.add_parser("run-daily", help="code one day of stored parses")
    p.add_argument("--date", required=True, help="run date, YYYY-MM-DD")
    p.add_argument("--no-dedup", action="store_true", help="skip the one-a-day filter")
    p.add_argument("--geolocate", action="store_true", help="fill the location columns")
    p.add_argument("--output-dir", help="(default: pipeline.outputdir)")

    p = sub.add_parser("serve", help="run the HTTP coding endpoint")
    p.add_argument("--host", help="(default: serve.host)")
    p.add_argument("--port", type=int, help="(default: serve.port)")

    p = sub.add_parser("report", help="aggregate events files")
    p.add_argument("files", nargs="+", help="events files")
    p.add_argument("--kind", required=True, choices=REPORT_KINDS)
    p.add_argument("--entity", help="restrict to records with this source or target entity")
    p.add_argument("--top-n", type=int, help="(default: report.topn)")
    p.add_argument("--plot", help="also write a chart to this file")
    p.add_argument("--backend", choices=SUPPORTED_PLOTTING_BACKENDS)

    sub.add_parser("validate-dicts", help="load the dictionaries and report their sizes")
    return parser


def _dictionaries(args):
    missing = [
        flag
        for flag, val in (("--actors", args.actors), ("--verbs", args.verbs), ("--issues", args.issues))
        if not val
    ]
    if missing:
        msg = f"`{args.command}` needs {', '.join(missing)}"
        raise UsageError(msg)
    return load_dictionaries(args.actors, args.verbs, args.issues, args.code_sets)


def _tables(args, dicts, geolocate=None):
    geolocate = default_settings.pipeline.geolocate if geolocate is None else geolocate
    gazetteer = None
    if args.gazetteer:
        gazetteer = load_gazetteer(args.gazetteer)
    elif geolocate:
        msg = "Geolocation needs a gazetteer, pass --gazetteer."
        raise PhoenixBadUserInput(msg)
    return EnrichTables(dicts, load_goldstein_table(args.goldstein), gazetteer, geolocate)


def cmd_poll(args):
    config = load_feed_config(args.feeds)
    links = LinkStore(args.store)
    if args.loop:
        history = poll_loop(
            config, links, DocumentStore(args.store), cycles=args.cycles, pool_size=args.pool_size
        )
        fetched = sum(rep.fetched for _, rep in history)
        print(f"{len(history)} cycles, {fetched} stories fetched")
        return EXIT_OK
    result = poll_feeds(config, links)
    print(
        f"{len(result.tasks)} new links, {len(result.errors)} feed errors, "
        f"{len(result.skipped)} feeds skipped"
    )
    return EXIT_OK


def cmd_fetch(args):
    pool_size = default_settings.ingest.poolsize if args.pool_size is None else args.pool_size
    links = LinkStore(args.store)
    rep = run_workers(links.pending_tasks(), pool_size, DocumentStore(args.store), links)
    print(
        f"fetched {rep.fetched}, failed {rep.failed}, duplicate {rep.duplicate}, "
        f"attempts {rep.attempts}"
    )
    return EXIT_OK


def cmd_import_parses(args):
    store = DocumentStore(args.store)
    for path in args.files:
        rep = import_parses(path, store)
        print(f"{path}: {rep.updated} updated, {rep.created} created, {rep.skipped} skipped")
    return EXIT_OK


def _batch_documents(paths, default_date):
    fallback = {}
    if default_date is not None:
        day = check_format_input_date(default_date)
        fallback = {"fetched_at": dt.datetime.combine(day, dt.time(), tzinfo=dt.UTC)}
    docs = []
    for path in paths:
        for block in read_treebank_batches(path):
            if not block.trees:
                continue
            fetched_at = block_fetched_at(block, path)
            if fetched_at is None and not fallback:
                msg = f"{path}:{block.lineno}: block without a `# date:` header, pass --date"
                raise UsageError(msg)
            extra = {"fetched_at": fetched_at} if fetched_at else fallback
            docs.append(
                StoryDocument(
                    story_id=block_story_id(block, path),
                    url=block.headers.get("url", ""),
                    source_name=block.headers.get("source", ""),
                    title=block.headers.get("title", ""),
                    parse_trees=tuple(block.trees),
                    status=DocStatus.Parsed,
                    **extra,
                )
            )
    return docs


def cmd_code(args):
    dicts = _dictionaries(args)
    tables = _tables(args, dicts)
    docs = _batch_documents(args.files, args.date)
    docs.sort(key=lambda d: (d.event_date, d.story_id))
    records = []
    for date, group in groupby(docs, key=lambda d: d.event_date):
        records.extend(code_documents(list(group), dicts, tables, date))
    if args.output:
        write_records(records, args.output)
    else:
        sys.stdout.write(HEADER + "\n")
        for rec in records:
            sys.stdout.write("\t".join(rec.as_row()) + "\n")
    return EXIT_OK


def cmd_run_daily(args):
    dicts = _dictionaries(args)
    tables = _tables(args, dicts, geolocate=True if args.geolocate else None)
    records_path, manifest = run_daily(
        args.date,
        DocumentStore(args.store),
        dicts,
        tables,
        dedup=False if args.no_dedup else None,
        output_dir=args.output_dir,
    )
    print(
        f"{records_path}: {manifest.emitted_event_count} events "
        f"from {manifest.input_story_count} stories"
    )
    return EXIT_OK


def cmd_serve(args):
    from phoenixlib._src.pipeline.pipeline_server import serve  # noqa: PLC0415

    dicts = _dictionaries(args)
    serve(args.host, args.port, dicts, _tables(args, dicts))
    return EXIT_OK


def cmd_report(args):
    table = report(args.files, args.kind, entity=args.entity, top_n=args.top_n)
    sys.stdout.write(table.to_text())
    if args.plot:
        from phoenixlib._src.display.display import plot_report  # noqa: PLC0415

        plot_report(table, args.plot, backend=args.backend)
    return EXIT_OK


def cmd_validate_dicts(args):
    dicts = _dictionaries(args)
    print(
        f"dictionaries {dicts.version}: {dicts.n_actor_patterns} actor patterns, "
        f"{dicts.n_verb_patterns} verb patterns, {len(dicts.issues)} issue keywords"
    )
    return EXIT_OK


COMMANDS = {
    "poll": cmd_poll,
    "fetch": cmd_fetch,
    "import-parses": cmd_import_parses,
    "code": cmd_code,
    "run-daily": cmd_run_daily,
    "serve": cmd_serve,
    "report": cmd_report,
    "validate-dicts": cmd_validate_dicts,
}


def main(argv=None) -> int:
    """Run the `phoenix` command and return its exit status."""
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    if not argv:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else EXIT_USAGE
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    configure_logging(args.log_level, args.log_format)
    try:
        if args.config:
            read_config_file(args.config)
        return COMMANDS[args.command](args)
    except UsageError as err:
        parser.print_usage(sys.stderr)
        print(f"phoenix: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except PhoenixError as err:
        logger.debug("command failed", exc_info=True, extra={"event": "cli.failed"})
        print(f"phoenix: {err}", file=sys.stderr)
        return EXIT_FAILURE
    except Exception as err:  # pylint: disable=broad-exception-caught
        logger.error("unexpected failure", exc_info=True, extra={"event": "cli.crashed"})
        print(f"phoenix: unexpected error: {err!r}", file=sys.stderr)
        return EXIT_FAILURE
