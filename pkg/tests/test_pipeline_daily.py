import dataclasses
import datetime as dt

import pytest

import phoenixlib as phx
from phoenixlib._src.exceptions import (
    PhoenixMissingFile,
    PhoenixNoInput,
    PhoenixRecordsFormatError,
)
from phoenixlib.dictionaries import load_dictionaries
from phoenixlib.enrich import EnrichTables, load_goldstein_table
from phoenixlib.ingest import DocStatus, DocumentStore, StoryDocument
from phoenixlib.pipeline import (
    COLUMNS,
    EventRecord,
    code_documents,
    one_a_day,
    read_manifest,
    read_records,
    run_daily,
    write_records,
)

DENOUNCE = "(ROOT (S (NP (NNP Obama)) (VP (VBD denounced) (NP (NNP Russia))) (. .)))"
CONDEMN = "(ROOT (S (NP (NNP Obama)) (VP (VBD condemned) (NP (NNP Russia))) (. .)))"
MEET = "(ROOT (S (NP (NNP Putin)) (VP (VBD met) (NP (NNP Obama))) (. .)))"
ATTACK = "(ROOT (S (NP (NNP Russia)) (VP (VBD attacked) (NP (NNP Ukraine))) (. .)))"


def _story(name, source, trees, day=20, status=DocStatus.Parsed):
    return StoryDocument.from_url(
        f"https://{source}.example.com/{name}",
        source,
        title=name,
        body_text="Sanctions were discussed.",
        fetched_at=dt.datetime(2014, 6, day, 12, tzinfo=dt.UTC),
        parse_trees=None if trees is None else tuple(trees),
        status=status,
    )


@pytest.fixture
def store(tmp_path):
    store = DocumentStore(tmp_path / "store")
    store.store_document(_story("a", "wire", [DENOUNCE, MEET]))
    store.store_document(_story("b", "agency", [CONDEMN]))
    store.store_document(_story("c", "wire", None, status=DocStatus.Fetched))
    store.store_document(_story("d", "wire", [ATTACK], day=21))
    return store


def _ordered_ab():
    """stories a and b in story id order"""
    docs = [_story("a", "wire", [DENOUNCE, MEET]), _story("b", "agency", [CONDEMN])]
    return sorted(docs, key=lambda d: d.story_id)


def test_run_daily_one_a_day(store, toy_dicts, toy_tables, tmp_path):
    """two stories reporting the same event give one record with both URLs"""
    out = tmp_path / "out"
    path, manifest = run_daily("2014-06-20", store, toy_dicts, toy_tables, output_dir=out)
    assert path == out / "phoenix-events.20140620.tsv"
    records = read_records(path)
    assert len(records) == 2
    denounce = next(r for r in records if r.event_code == "111")
    first, second = _ordered_ab()
    assert denounce.urls == (first.url, second.url)
    assert denounce.news_sources == (first.source_name, second.source_name)
    assert denounce.event_id.startswith("20140620-")
    assert [r.event_id for r in records] == sorted(r.event_id for r in records)
    assert all(r.issues == (("SANCTIONS", 1),) for r in records)

    assert manifest.input_story_count == 2
    assert manifest.coded_event_count == 3
    assert manifest.emitted_event_count == 2
    assert manifest.dictionary_version == "toy-1"
    assert manifest.dedup is True
    assert manifest.geolocate is False

    # parsed stories move on to Coded, others are untouched
    statuses = {d.title: d.status for d in store.load_documents()}
    assert statuses == {
        "a": DocStatus.Coded,
        "b": DocStatus.Coded,
        "c": DocStatus.Fetched,
        "d": DocStatus.Parsed,
    }


def test_run_daily_without_dedup(store, toy_dicts, toy_tables, tmp_path):
    path, manifest = run_daily(
        "2014-06-20", store, toy_dicts, toy_tables, dedup=False, output_dir=tmp_path
    )
    records = read_records(path)
    assert len(records) == 3
    assert [r.event_id for r in records] == [f"20140620-00000{i}" for i in (1, 2, 3)]
    assert manifest.emitted_event_count == 3
    assert manifest.dedup is False


def test_run_daily_event_ids_follow_story_order(store, toy_dicts, toy_tables, tmp_path):
    path, _ = run_daily("2014-06-20", store, toy_dicts, toy_tables, dedup=False, output_dir=tmp_path)
    records = read_records(path)
    first, _ = _ordered_ab()
    if first.title == "a":
        expected = [("111", 0), ("043", 1), ("111", 0)]
    else:
        expected = [("111", 0), ("111", 0), ("043", 1)]
    assert [(r.event_code, r.sentence_id) for r in records] == expected


def test_run_daily_defaults(store, toy_dicts, toy_tables, tmp_path):
    phx.defaults.pipeline.outputdir = str(tmp_path / "from-defaults")
    phx.defaults.pipeline.dedup = False
    path, manifest = run_daily(dt.date(2014, 6, 21), store, toy_dicts, toy_tables)
    assert path.parent == tmp_path / "from-defaults"
    assert manifest.dedup is False
    (rec,) = read_records(path)
    assert (rec.source_full, rec.target_full, rec.event_code) == ("RUS", "UKR", "190")


def test_run_daily_no_input(store, toy_dicts, toy_tables, tmp_path):
    with pytest.raises(PhoenixNoInput):
        run_daily("2014-06-22", store, toy_dicts, toy_tables, output_dir=tmp_path)
    assert list(tmp_path.glob("*.tsv")) == []


def test_run_daily_rerun_is_identical(store, toy_dicts, toy_tables, tmp_path):
    """repeating a day over the same parses rewrites the same bytes"""
    path1, _ = run_daily("2014-06-20", store, toy_dicts, toy_tables, output_dir=tmp_path / "1")
    path2, _ = run_daily("2014-06-20", store, toy_dicts, toy_tables, output_dir=tmp_path / "2")
    assert path1.read_bytes() == path2.read_bytes()
    assert b"\r" not in path1.read_bytes()


def test_run_daily_recode_with_new_dictionaries(store, data_dir, toy_tables, tmp_path):
    """stored parses are recoded with updated verb codes"""
    verbs = tmp_path / "verbs.txt"
    verbs.write_text(
        "# version: toy-2\nDENOUNCED|CONDEMNED;112\nMET;042\nATTACKED;193\n", encoding="utf-8"
    )
    dicts = load_dictionaries(
        data_dir / "actors.txt", verbs, data_dir / "issues.txt", data_dir / "code_sets.txt"
    )
    tables = EnrichTables(dicts, toy_tables.goldstein)
    path, manifest = run_daily("2014-06-20", store, dicts, tables, output_dir=tmp_path)
    assert sorted(r.event_code for r in read_records(path)) == ["042", "112"]
    assert manifest.dictionary_version == "toy-1+toy-2"


def test_manifest_file(store, toy_dicts, toy_tables, tmp_path):
    run_daily("2014-06-20", store, toy_dicts, toy_tables, output_dir=tmp_path)
    manifest = read_manifest(tmp_path / "phoenix-events.20140620.manifest.txt")
    assert manifest["run_date"] == "20140620"
    assert manifest["dictionary_version"] == "toy-1"
    assert manifest["goldstein_version"] == "cameo-goldstein-1"
    assert manifest["software_version"] == phx.__version__
    assert manifest["input_story_count"] == "2"
    assert manifest["dedup"] == "true"
    started = dt.datetime.fromisoformat(manifest["started_at"])
    finished = dt.datetime.fromisoformat(manifest["finished_at"])
    assert started <= finished
    with pytest.raises(PhoenixMissingFile):
        read_manifest(tmp_path / "nope.txt")


def test_run_daily_geolocate(store, toy_dicts, gazetteer, tmp_path):
    store.store_document(
        dataclasses.replace(
            _story("e", "wire", [ATTACK], day=21), body_text="Shelling hit Donetsk overnight."
        )
    )
    tables = EnrichTables(toy_dicts, load_goldstein_table(), gazetteer, geolocate=True)
    path, manifest = run_daily(
        "2014-06-21", store, toy_dicts, tables, dedup=False, output_dir=tmp_path
    )
    assert manifest.geolocate is True
    located = [r.location_name for r in read_records(path)]
    assert "Donetsk" in located


def test_code_documents_numbering(toy_dicts, toy_tables):
    docs = [
        _story("x", "wire", [DENOUNCE, MEET]),
        _story("y", "wire", None),
        _story("z", "wire", [ATTACK]),
    ]
    records = code_documents(docs, toy_dicts, toy_tables, dt.date(2014, 6, 20))
    assert [(r.event_id, r.event_code) for r in records] == [
        ("20140620-000001", "111"),
        ("20140620-000002", "043"),
        ("20140620-000003", "190"),
    ]


def _record(event_id, url, source="wire", code="111", target="RUS"):
    return EventRecord(
        event_id=event_id,
        date=dt.date(2014, 6, 20),
        source_full="USAGOV",
        source_entity="USA",
        source_role="GOV",
        source_attribute=None,
        target_full=target,
        target_entity=target[:3] if target else None,
        target_role=None,
        target_attribute=None,
        event_code=code,
        quad_class=3,
        goldstein=-2.0,
        urls=(url,),
        news_sources=(source,),
    )


def test_one_a_day():
    records = [
        _record("20140620-000003", "https://c.com/1", "c"),
        _record("20140620-000001", "https://a.com/1", "a"),
        _record("20140620-000002", "https://b.com/1", "a"),
        _record("20140620-000004", "https://a.com/1", "a", code="112"),
        _record("20140620-000005", "https://d.com/1", "d", target=None),
        _record("20140620-000006", "https://e.com/1", "e", target=None),
    ]
    merged = one_a_day(records)
    assert [r.event_id for r in merged] == [
        "20140620-000001",
        "20140620-000004",
        "20140620-000005",
    ]
    assert merged[0].urls == ("https://a.com/1", "https://b.com/1", "https://c.com/1")
    assert merged[0].news_sources == ("a", "c")
    assert merged[2].urls == ("https://d.com/1", "https://e.com/1")
    # idempotent
    assert one_a_day(merged) == merged


def test_one_a_day_event_ids_past_six_digits():
    """sequence numbers compare as numbers once they outgrow the padding"""
    records = [
        _record("20140620-1000000", "https://b.com/1", "b"),
        _record("20140620-999999", "https://a.com/1", "a"),
        _record("20140620-1000001", "https://c.com/1", "c", code="112"),
        _record("20140620-000010", "https://d.com/1", "d", code="043"),
    ]
    merged = one_a_day(records)
    assert [r.event_id for r in merged] == [
        "20140620-000010",
        "20140620-999999",
        "20140620-1000001",
    ]
    assert merged[1].urls == ("https://a.com/1", "https://b.com/1")
    ordered = sorted(records, key=lambda r: r.sort_key)
    assert [r.event_id[9:] for r in ordered] == ["000010", "999999", "1000000", "1000001"]


def test_records_file(tmp_path):
    rec = dataclasses.replace(
        _record("20140620-000001", "https://a.com/1"),
        issues=(("SANCTIONS", 2), ("PEACE", 1)),
        action_lat=33.5102,
        action_lon=36.2913,
        location_name="Damascus",
        geo_country_name="Syria",
        geo_state_name="Damascus",
        sentence_id=4,
        story_id="abc",
    )
    path = write_records([rec], tmp_path / "events.tsv")
    text = path.read_text(encoding="utf-8")
    header, row = text.splitlines()
    assert header.split("\t") == list(COLUMNS)
    values = dict(zip(COLUMNS, row.split("\t"), strict=True))
    assert values["Date"] == "20140620"
    assert (values["Year"], values["Month"], values["Day"]) == ("2014", "6", "20")
    assert values["EventRootCode"] == "11"
    assert values["GoldsteinScore"] == "-2.0"
    assert values["Issues"] == "SANCTIONS:2;PEACE:1"
    assert values["ActionLat"] == "33.5102"
    assert values["SourceActorAttribute"] == ""
    assert read_records(path) == [rec]


def test_records_empty_file(tmp_path):
    path = write_records([], tmp_path / "empty.tsv")
    assert read_records(path) == []


@pytest.mark.parametrize(
    ("mutate", "lineno"),
    [
        (lambda lines: ["Event\tDate", *lines[1:]], 1),
        (lambda lines: [*lines, "too\tfew"], 3),
        (lambda lines: [lines[0], lines[1].replace("\t20140620\t", "\t2014-06-20\t", 1)], 2),
        (lambda lines: [lines[0], lines[1].replace("\t6\t", "\t7\t", 1)], 2),
        (lambda lines: [lines[0], lines[1].replace("-2.0", "minus two")], 2),
    ],
)
def test_records_file_errors(tmp_path, mutate, lineno):
    path = write_records([_record("20140620-000001", "https://a.com/1")], tmp_path / "e.tsv")
    lines = mutate(path.read_text(encoding="utf-8").splitlines())
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    with pytest.raises(PhoenixRecordsFormatError, match=rf"e\.tsv:{lineno}: "):
        read_records(path)
