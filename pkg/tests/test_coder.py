import datetime as dt
import logging
import time

import numpy as np
import pytest

import phoenixlib as phx
from phoenixlib._src.exceptions import PhoenixInternalError, PhoenixNoParses
from phoenixlib.coder import (
    CodedEvent,
    CodingOutcome,
    SkipReason,
    code_sentence,
    code_story,
    code_trees,
    compose_codes,
)
from phoenixlib.dictionaries import VerbEntry
from phoenixlib.enrich import EnrichTables, load_goldstein_table
from phoenixlib.ingest import DocStatus, StoryDocument
from phoenixlib.pipeline import EventRecord, code_documents
from phoenixlib.treebank import parse_treebank

DATE = "2014-06-20"


def _s(np_, vp):
    return f"(ROOT (S {np_} {vp} (. .)))"


def _np(*words, tag="NNP"):
    return "(NP " + " ".join(f"({tag} {w})" for w in words) + ")"


def _to_vp(verb, tag, inner_verb, obj):
    return f"(VP ({tag} {verb}) (S (VP (TO to) (VP (VB {inner_verb}) {_np(obj)}))))"


GOLDEN = [
    # (tree, [(source, target, code), ...] or SkipReason)
    (_s(_np("Obama"), f"(VP (VBD denounced) {_np('Russia')})"), [("USAGOV", "RUS", "111")]),
    (
        _s(_np("President", "Obama"), f"(VP (VBD condemned) {_np('Russia')})"),
        [("USAGOV", "RUS", "111")],
    ),
    (
        _s(
            "(NP (NP (NNP Islamic) (NNP State)) (NNS fighters))",
            "(VP (VBD attacked) (NP (JJ Syrian) (NNS rebels)) (PP (IN near) (NP (NNP Aleppo))))",
        ),
        [("IMGMOSISI", "SYRREB", "190")],
    ),
    (
        _s(_np("Putin"), f"(VP (VBD met) {_np('Obama')} (PP (IN in) {_np('Moscow')}))"),
        [("RUSGOV", "USAGOV", "043")],
    ),
    (_s(_np("Obama"), _to_vp("intends", "VBZ", "aid", "Syria")), [("USAGOV", "SYR", "033")]),
    (_s(_np("Russia"), _to_vp("plans", "VBZ", "attack", "Ukraine")), [("RUS", "UKR", "138")]),
    (_s(_np("Iran"), _to_vp("intended", "VBD", "denounce", "Russia")), [("IRN", "RUS", "030")]),
    (_s(_np("Russia"), _to_vp("refused", "VBD", "aid", "Ukraine")), [("RUS", "UKR", "123")]),
    (
        _s(_np("Obama"), f"(VP (MD will) (VP (VB denounce) {_np('Russia')}))"),
        [("USAGOV", "RUS", "111")],
    ),
    (
        _s(
            _np("Obama"),
            f"(VP (VP (VBD denounced) {_np('Russia')}) (CC and) (VP (VBD sanctioned) {_np('Iran')}))",
        ),
        [("USAGOV", "RUS", "111"), ("USAGOV", "IRN", "163")],
    ),
    (
        _s("(NP (JJ Syrian) (NNS rebels))", f"(VP (VBD fought) {_np('Islamic', 'State')})"),
        [("SYRREB", "IMGMOSISI", "190")],
    ),
    (
        _s(
            _np("Assad"),
            "(VP (VBD said) (SBAR (IN that) (S (NP (NNS rebels))"
            f" (VP (VBD attacked) {_np('Damascus')}))))",
        ),
        [("SYRGOV", "SYRREB", "010")],
    ),
    (
        _s(
            _np("Obama"),
            "(VP (VBD said) (SBAR (IN that) (S (NP (NNP Kerry)) (VP (VBD said)"
            f" (SBAR (IN that) (S {_np('Russia')} (VP (VBD attacked) {_np('Ukraine')})))))))",
        ),
        SkipReason.ComplexSentence,
    ),
    (
        _s("(NP (DT The) (NN minister))", f"(VP (VBD denounced) {_np('Russia')})"),
        SkipReason.NoSourceActor,
    ),
    (_s(_np("Obama"), f"(VP (VBD visited) {_np('Russia')})"), SkipReason.NoVerbMatch),
    (
        _s("(NP (NNS Police))", f"(VP (VBD protested) (PP (IN in) {_np('Kiev')}))"),
        [("COP", "UKR", "140")],
    ),
    (
        _s("(NP (DT The) (NNP United) (NNP Nations))", "(VP (VBD protested))"),
        [("IGOUNO", None, "140")],
    ),
    (_s(_np("Kerry"), f"(VP (VBD denounced) {_np('Russia')})"), [("USAGOV", "RUS", "111")]),
    (_s(_np("Clinton"), f"(VP (VBD accused) {_np('Putin')})"), [("USAELI", "RUSGOV", "112")]),
    ("(ROOT (NP (NNP Obama)))", SkipReason.NoSourceActor),
    (
        f"(ROOT (S (NP-SBJ (NNP NATO)) (VP (VBD bombed) {_np('Tripoli')}) (. .)))",
        [("IGOWSTNAT", None, "190")],
    ),
    (
        f"(ROOT (S (PP (IN In) {_np('Geneva')}) (, ,) {_np('Kerry')}"
        f" (VP (VBD met) {_np('Lavrov')}) (. .)))",
        [("USAGOV", None, "043")],
    ),
    (
        _s(_np("Obama"), f"(VP (VBD met) (PP (IN with) {_np('Putin')}))"),
        [("USAGOV", "RUSGOV", "043")],
    ),
    (
        _s("(NP (NP (NNP Assad) (POS 's)) (NNS forces))", f"(VP (VBD shelled) {_np('Homs')})"),
        [("SYRGOV", None, "190")],
    ),
    (
        _s(
            f"(NP {_np('Russia')} (CC and) {_np('Iran')})",
            f"(VP (VBD condemned) {_np('NATO')})",
        ),
        [("RUS", "IGOWSTNAT", "111")],
    ),
    (
        "( (S (NP (NNP UN)) (VP (VBD condemned) (NP (NNP ISIL))) (. .)))",
        [("IGOUNO", "IMGMOSISI", "111")],
    ),
]


@pytest.mark.parametrize(("tree", "expected"), GOLDEN)
def test_code_sentence_golden(toy_dicts, tree, expected):
    """hand coded sentences"""
    outcome = code_sentence(parse_treebank(tree), toy_dicts, at_date=DATE)
    if isinstance(expected, SkipReason):
        assert outcome.events == ()
        assert outcome.skipped_reason is expected
    else:
        assert outcome.skipped_reason is None
        got = [(e.source_code, e.target_code, e.event_code) for e in outcome.events]
        assert got == expected


# story-level oracle of the golden sentences that code: (focus place, issues)
GOLDEN_CONTEXT = {
    0: ("Russia", ()),
    1: ("Russia", ()),
    2: ("Aleppo", (("TERROR_GROUP", 1),)),
    3: ("Moscow", ()),
    4: ("Syria", ()),
    5: ("Russia", ()),
    6: ("Iran", ()),
    7: ("Russia", ()),
    8: ("Russia", ()),
    9: ("Russia", ()),
    10: (None, (("TERROR_GROUP", 1),)),
    11: ("Damascus", ()),
    15: ("Kiev", ()),
    16: (None, ()),
    17: ("Russia", ()),
    18: (None, ()),
    20: ("Tripoli", ()),
    21: (None, ()),
    22: (None, ()),
    23: ("Homs", ()),
    24: ("Russia", ()),
    25: (None, (("TERROR_GROUP", 1),)),
}
GOLDEN_PLACES = {
    "Russia": (60.0, 100.0, "Russia", "Russia", "Russia"),
    "Syria": (35.0, 38.0, "Syria", "Syria", "Syria"),
    "Iran": (32.0, 53.0, "Iran", "Iran", "Iran"),
    "Aleppo": (36.2021, 37.1343, "Aleppo", "Syria", "Aleppo"),
    "Moscow": (55.7522, 37.6156, "Moscow", "Russia", "Moscow"),
    "Damascus": (33.5102, 36.2913, "Damascus", "Syria", "Damascus"),
    "Kiev": (50.4547, 30.5238, "Kiev", "Ukraine", "Kyiv City"),
    "Tripoli": (32.8925, 13.1801, "Tripoli", "Libya", "Tripoli"),
    "Homs": (34.7268, 36.7234, "Homs", "Syria", "Homs"),
    None: (None, None, None, None, None),
}
# actor code -> (entity, role, attribute)
GOLDEN_ACTORS = {
    "USAGOV": ("USA", "GOV", None),
    "USAELI": ("USA", "ELI", None),
    "RUS": ("RUS", None, None),
    "RUSGOV": ("RUS", "GOV", None),
    "UKR": ("UKR", None, None),
    "SYR": ("SYR", None, None),
    "SYRGOV": ("SYR", "GOV", None),
    "SYRREB": ("SYR", "REB", None),
    "IRN": ("IRN", None, None),
    "COP": ("COP", None, None),
    "IGOUNO": ("IGO", None, None),
    "IGOWSTNAT": ("IGO", None, "WST"),
    "IMGMOSISI": ("IMG", None, "MOS"),
    None: (None, None, None),
}
# event code -> (quad class, Goldstein score)
GOLDEN_SCORES = {
    "010": (0, 0.0),
    "030": (1, 4.0),
    "033": (1, 5.2),
    "043": (1, 2.8),
    "111": (3, -2.0),
    "112": (3, -2.0),
    "123": (3, -4.0),
    "138": (3, -7.0),
    "140": (4, -6.5),
    "163": (3, -8.0),
    "190": (4, -10.0),
}


@pytest.mark.parametrize("index", range(len(GOLDEN)))
def test_golden_records(toy_dicts, gazetteer, index):
    """every field of the records of the hand coded sentences"""
    tree, expected = GOLDEN[index]
    doc = StoryDocument.from_url(
        f"https://example.com/golden/{index}",
        "golden",
        body_text=parse_treebank(tree).sentence_text,
        fetched_at=dt.datetime(2014, 6, 20, 12, tzinfo=dt.UTC),
        parse_trees=(tree,),
        status=DocStatus.Parsed,
    )
    tables = EnrichTables(toy_dicts, load_goldstein_table(), gazetteer, geolocate=True)
    records = code_documents([doc], toy_dicts, tables, dt.date(2014, 6, 20))
    if isinstance(expected, SkipReason):
        assert records == []
        return

    place, issues = GOLDEN_CONTEXT[index]
    lat, lon, location, country, state = GOLDEN_PLACES[place]
    wanted = []
    for seq, (source, target, code) in enumerate(expected, start=1):
        quad, score = GOLDEN_SCORES[code]
        wanted.append(
            EventRecord(
                f"20140620-{seq:06d}",
                dt.date(2014, 6, 20),
                source,
                *GOLDEN_ACTORS[source],
                target,
                *GOLDEN_ACTORS[target],
                code,
                quad,
                score,
                issues,
                lat,
                lon,
                location,
                country,
                state,
                0,
                (f"https://example.com/golden/{index}",),
                ("golden",),
                doc.story_id,
            )
        )
    assert records == wanted


def test_code_sentence_actor_validity(toy_dicts):
    tree = parse_treebank(GOLDEN[17][0])
    assert code_sentence(tree, toy_dicts, at_date="2010-05-01").skipped_reason is (
        SkipReason.NoSourceActor
    )
    ev = code_sentence(tree, toy_dicts, at_date="2014-06-20").events[0]
    assert ev.source_code == "USAGOV"


def test_code_sentence_trigger_text(toy_dicts):
    outcome = code_sentence(parse_treebank(GOLDEN[4][0]), toy_dicts)
    (ev,) = outcome.events
    assert ev.trigger_text == "intends aid"
    assert ev.root_code == "03"
    outcome = code_sentence(parse_treebank(GOLDEN[22][0]), toy_dicts)
    assert outcome.events[0].trigger_text == "met with"


@pytest.mark.parametrize(("max_depth", "complex_"), [(2, True), (3, False), (5, False)])
def test_code_sentence_max_depth(toy_dicts, max_depth, complex_):
    """'said that ... attacked' nests three clauses"""
    tree = parse_treebank(GOLDEN[11][0])
    outcome = code_sentence(tree, toy_dicts, max_depth=max_depth)
    assert (outcome.skipped_reason is SkipReason.ComplexSentence) == complex_


def test_code_sentence_max_depth_from_defaults(toy_dicts):
    tree = parse_treebank(GOLDEN[12][0])
    assert code_sentence(tree, toy_dicts).skipped_reason is SkipReason.ComplexSentence
    phx.defaults.coder.maxdepth = 5
    assert code_sentence(tree, toy_dicts).events[0].event_code == "010"


def test_np_conjunction_logged(toy_dicts, caplog):
    with caplog.at_level(logging.INFO, logger="phoenixlib"):
        code_sentence(parse_treebank(GOLDEN[24][0]), toy_dicts)
    assert any(getattr(r, "event", "") == "coder.np_conjunction" for r in caplog.records)


@pytest.mark.parametrize(
    ("outer_rules", "inner_code", "expected"),
    [
        ((("07", "033"), ("19", "138")), "070", "033"),
        ((("07", "033"), ("19", "138")), "190", "138"),
        ((("07", "033"), ("19", "138")), "0711", "033"),
        ((("07", "033"),), "111", "030"),
        ((), "070", "030"),
        ((("11", "1121"),), "11", "1121"),
    ],
)
def test_compose_codes(outer_rules, inner_code, expected):
    outer = VerbEntry((("INTEND",),), "030", outer_rules)
    inner = VerbEntry((("X",),), inner_code)
    assert compose_codes(outer, inner) == expected


def test_coding_outcome_invariant():
    with pytest.raises(PhoenixInternalError):
        CodingOutcome()
    with pytest.raises(PhoenixInternalError):
        CodingOutcome(
            events=(CodedEvent("USA", None, "010"),), skipped_reason=SkipReason.NoVerbMatch
        )


def test_code_trees_dedup_and_malformed(toy_dicts, caplog):
    trees = [
        GOLDEN[0][0],
        "(ROOT (S (NP (NNP Obama)) (VP (VBD left))",
        GOLDEN[1][0],  # same triple as the first sentence
        GOLDEN[3][0],
    ]
    with caplog.at_level(logging.WARNING, logger="phoenixlib"):
        events = code_trees(trees, toy_dicts, at_date=DATE, story_id="s1")
    assert [(e.event_code, e.sentence_id) for e in events] == [("111", 0), ("043", 3)]
    assert [getattr(r, "event", "") for r in caplog.records] == ["coder.malformed_sentence"]


def test_code_story(toy_dicts):
    doc = StoryDocument(
        story_id="s1",
        url="https://example.com/a",
        source_name="example",
        parse_trees=(GOLDEN[18][0],),
        status=DocStatus.Parsed,
        fetched_at=dt.datetime(2014, 6, 20, 8, tzinfo=dt.UTC),
    )
    (ev,) = code_story(doc, toy_dicts)
    # actor validity follows the story date
    assert ev.source_code == "USAELI"
    with pytest.raises(PhoenixNoParses):
        code_story(StoryDocument("s2", "https://example.com/b", "example"), toy_dicts)


ACTOR_NAMES = ["Obama", "Russia", "Putin", "Syria", "Assad", "Iran", "Ukraine", "NATO", "France"]
ACTOR_CODES = {
    "Obama": "USAGOV",
    "Russia": "RUS",
    "Putin": "RUSGOV",
    "Syria": "SYR",
    "Assad": "SYRGOV",
    "Iran": "IRN",
    "Ukraine": "UKR",
    "NATO": "IGOWSTNAT",
    "France": "FRA",
}
VERB_CODES = {
    "denounced": "111",
    "attacked": "190",
    "met": "043",
    "accused": "112",
    "sanctioned": "163",
    "aided": "070",
}


def test_code_sentence_throughput(toy_dicts):
    """ten thousand generated sentences code correctly at 100 sentences per second or more"""
    rng = np.random.default_rng(20140620)
    verbs = list(VERB_CODES)
    n = 10_000
    src = rng.integers(len(ACTOR_NAMES), size=n)
    tgt = rng.integers(len(ACTOR_NAMES), size=n)
    vrb = rng.integers(len(verbs), size=n)
    aux = rng.random(n) < 0.3
    sentences = []
    for i in range(n):
        verb = verbs[vrb[i]]
        vp = f"(VP (VBD {verb}) {_np(ACTOR_NAMES[tgt[i]])})"
        if aux[i]:
            vp = f"(VP (MD will) {vp})"
        sentences.append(_s(_np(ACTOR_NAMES[src[i]]), vp))

    start = time.perf_counter()
    outcomes = [code_sentence(parse_treebank(s), toy_dicts) for s in sentences]
    elapsed = time.perf_counter() - start

    assert n / elapsed >= 100
    for i, outcome in enumerate(outcomes):
        (ev,) = outcome.events
        assert ev.source_code == ACTOR_CODES[ACTOR_NAMES[src[i]]]
        assert ev.target_code == ACTOR_CODES[ACTOR_NAMES[tgt[i]]]
        assert ev.event_code == VERB_CODES[verbs[vrb[i]]]
