import datetime as dt

import pytest

from phoenixlib._src.exceptions import (
    PhoenixBadUserInput,
    PhoenixEmptyTree,
    PhoenixError,
    PhoenixFeedParseError,
    PhoenixFetchError,
    PhoenixFormatError,
    PhoenixInternalError,
    PhoenixInvalidCode,
    PhoenixMalformedCode,
    PhoenixMalformedNode,
    PhoenixMissingFile,
    PhoenixNoContent,
    PhoenixNoInput,
    PhoenixNoParses,
    PhoenixRecordsFormatError,
    PhoenixUnbalancedBrackets,
    PhoenixUnknownKind,
    PhoenixUnknownRoot,
)
from phoenixlib.coder import code_story
from phoenixlib.dictionaries import load_dictionaries
from phoenixlib.enrich import decompose_actor, goldstein, load_gazetteer
from phoenixlib.ingest import DocumentStore, StoryDocument, extract_content, parse_feed_links
from phoenixlib.pipeline import read_records, report, run_daily
from phoenixlib.treebank import parse_treebank


def treebank_unbalanced():
    """missing closing bracket"""
    parse_treebank("(ROOT (S (NP (NNP Obama))")


def treebank_empty():
    """clause without any token"""
    parse_treebank("(ROOT (S))")


def treebank_empty_phrase():
    """phrase without children"""
    parse_treebank("(ROOT (S (NP) (VP (VBD left))))")


def dictionaries_missing(tmp_path):
    load_dictionaries(tmp_path / "a.txt", tmp_path / "v.txt", tmp_path / "i.txt")


def dictionaries_bad_code(tmp_path):
    for name, text in [
        ("a.txt", "# version: t\nOBAMA;USAGO\n"),
        ("v.txt", "# version: t\nMET;043\n"),
        ("i.txt", "# version: t\n"),
    ]:
        (tmp_path / name).write_text(text, encoding="utf-8")
    load_dictionaries(tmp_path / "a.txt", tmp_path / "v.txt", tmp_path / "i.txt")


def coder_no_parses(toy_dicts):
    code_story(StoryDocument.from_url("https://example.com/a", "example"), toy_dicts)


def ingest_no_content():
    extract_content("<html><body><p>Too short.</p></body></html>")


def ingest_bad_feed():
    parse_feed_links(b"<html><body>not a feed</body></html>")


def pipeline_no_input(tmp_path, toy_dicts, toy_tables):
    store = DocumentStore(tmp_path)
    run_daily(dt.date(2014, 6, 20), store, toy_dicts, toy_tables, output_dir=tmp_path)


def pipeline_bad_records(tmp_path):
    path = tmp_path / "events.tsv"
    path.write_text("EventID\n", encoding="utf-8")
    read_records(path)


#####################################################################
def test_except_treebank():
    """bracketed trees"""
    with pytest.raises(PhoenixUnbalancedBrackets):
        treebank_unbalanced()
    with pytest.raises(PhoenixEmptyTree):
        treebank_empty()
    with pytest.raises(PhoenixMalformedNode):
        treebank_empty_phrase()


def test_except_dictionaries(tmp_path):
    """dictionary files"""
    with pytest.raises(PhoenixMissingFile):
        dictionaries_missing(tmp_path)
    with pytest.raises(PhoenixInvalidCode, match=r"a\.txt:2: "):
        dictionaries_bad_code(tmp_path)
    with pytest.raises(PhoenixMissingFile):
        load_gazetteer(tmp_path / "gaz.tsv")


def test_except_coder_enrich(toy_dicts):
    """coding and enrichment"""
    with pytest.raises(PhoenixNoParses):
        coder_no_parses(toy_dicts)
    with pytest.raises(PhoenixUnknownRoot):
        goldstein("2100")
    with pytest.raises(PhoenixMalformedCode):
        decompose_actor("USAG", toy_dicts)


def test_except_ingest():
    """article and feed bodies"""
    with pytest.raises(PhoenixNoContent):
        ingest_no_content()
    with pytest.raises(PhoenixFeedParseError):
        ingest_bad_feed()


def test_except_pipeline(tmp_path, toy_dicts, toy_tables):
    """daily runs and reports"""
    with pytest.raises(PhoenixNoInput):
        pipeline_no_input(tmp_path, toy_dicts, toy_tables)
    with pytest.raises(PhoenixRecordsFormatError):
        pipeline_bad_records(tmp_path)
    with pytest.raises(PhoenixUnknownKind):
        report([], "top_nothing")


@pytest.mark.parametrize(
    ("exc", "parent"),
    [
        (PhoenixBadUserInput, PhoenixError),
        (PhoenixInternalError, PhoenixError),
        (PhoenixUnbalancedBrackets, PhoenixBadUserInput),
        (PhoenixMissingFile, PhoenixBadUserInput),
        (PhoenixInvalidCode, PhoenixFormatError),
        (PhoenixRecordsFormatError, PhoenixFormatError),
        (PhoenixUnknownKind, PhoenixBadUserInput),
        (PhoenixFetchError, PhoenixError),
        (PhoenixNoInput, PhoenixError),
    ],
)
def test_exception_hierarchy(exc, parent):
    assert issubclass(exc, parent)


@pytest.mark.parametrize(
    ("kwargs", "expected"),
    [
        ({}, "bad value"),
        ({"path": "a.txt"}, "a.txt: bad value"),
        ({"lineno": 4}, "line 4: bad value"),
        ({"path": "a.txt", "lineno": 4}, "a.txt:4: bad value"),
    ],
)
def test_format_error_location(kwargs, expected):
    err = PhoenixFormatError("bad value", **kwargs)
    assert str(err) == expected
    assert err.lineno == kwargs.get("lineno")


def test_fetch_error_attempts():
    err = PhoenixFetchError("gave up", attempts=3)
    assert err.attempts == 3
    assert str(err) == "gave up"
