"""
Tree-driven coding of one sentence into source-action-target events.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from phoenixlib._src.coder.coder_compose import compose_codes
from phoenixlib._src.defaults.defaults_classes import default_settings
from phoenixlib._src.exceptions import PhoenixInternalError
from phoenixlib._src.input_checks import check_format_input_date
from phoenixlib._src.treebank.treebank_chunks import is_verb_tag
from phoenixlib._src.treebank.treebank_tree import (
    CLAUSE_FAMILY,
    S_FAMILY,
    Node,
    ParseTree,
    detokenize,
)

logger = logging.getLogger(__name__)

# nodes the search for a governed verb may pass through
_CHAIN_LABELS = frozenset({"VP", "S", "SBAR"})


class SkipReason(Enum):
    NoVerbMatch = "NoVerbMatch"
    NoSourceActor = "NoSourceActor"
    ComplexSentence = "ComplexSentence"


@dataclass(frozen=True)
class CodedEvent:
    """One who-did-what-to-whom coding of a sentence.

    Parameters
    ----------
    source_code: str
        Actor code of the source.

    target_code: str or None
        Actor code of the target. Statements and protests often have none.

    event_code: str
        CAMEO code, 2 to 4 digits.

    sentence_id: int
        0-based index of the sentence within its story.

    trigger_text: str
        Surface form of the matched verb phrase.
    """

    source_code: str
    target_code: str | None
    event_code: str
    sentence_id: int = 0
    trigger_text: str = ""

    @property
    def root_code(self) -> str:
        return self.event_code[:2]


@dataclass(frozen=True)
class CodingOutcome:
    """Events of one sentence, or the reason it produced none."""

    events: tuple[CodedEvent, ...] = ()
    skipped_reason: SkipReason | None = None

    def __post_init__(self):
        if bool(self.events) == (self.skipped_reason is not None):
            msg = "A coding outcome carries either events or a skip reason."
            raise PhoenixInternalError(msg)


@dataclass(frozen=True)
class _VerbHit:
    code: str
    trigger: str
    vp: Node


def main_clause(tree: ParseTree) -> Node | None:
    """Leftmost maximal S-family node of the tree (the root itself if it is one)."""
    for node in tree.root.iter_preorder():
        if not node.is_leaf and node.base_label in S_FAMILY:
            return node
    return None


def clause_depth(clause: Node) -> int:
    """Largest number of S-family or SBAR nodes on a path down from `clause`."""
    deepest = 0
    stack = [(clause, 0)]
    while stack:
        node, depth = stack.pop()
        if node.is_leaf:
            continue
        if node.base_label in CLAUSE_FAMILY:
            depth += 1
        deepest = max(deepest, depth)
        stack.extend((child, depth) for child in node.children)
    return deepest


def _first_child(node: Node, label: str, before: Node | None = None) -> Node | None:
    for child in node.children:
        if child is before:
            return None
        if not child.is_leaf and child.base_label == label:
            return child
    return None


def _is_conjoined(vp: Node) -> bool:
    labels = [c.base_label for c in vp.children]
    return labels.count("VP") >= 2 and "CC" in labels


def _head_sequence(vp: Node) -> list[str] | None:
    """VP tokens from its first direct verb-tagged leaf to its end."""
    for child in vp.children:
        if child.is_leaf and is_verb_tag(child.label):
            return vp.tokens()[child.span[0] - vp.span[0] :]
    return None


def _match_head(vp: Node, dicts):
    seq = _head_sequence(vp)
    if not seq:
        return None
    hit = dicts.match_verb(seq)
    if hit is None:
        return None
    entry, length = hit
    return entry, seq[:length]


def _governed_verb(vp: Node, dicts):
    """First VP below `vp`, reached through VP, S and SBAR nodes only, whose verb matches."""
    stack = [c for c in reversed(vp.children) if c.base_label in _CHAIN_LABELS and not c.is_leaf]
    while stack:
        node = stack.pop()
        if node.base_label == "VP":
            hit = _match_head(node, dicts)
            if hit is not None:
                return hit
        stack.extend(
            c for c in reversed(node.children) if c.base_label in _CHAIN_LABELS and not c.is_leaf
        )
    return None


def _resolve_verbs(vp: Node, dicts) -> list[_VerbHit]:
    if _is_conjoined(vp):
        hits = []
        for child in vp.children:
            if not child.is_leaf and child.base_label == "VP":
                hits.extend(_resolve_verbs(child, dicts))
        return hits
    hit = _match_head(vp, dicts)
    if hit is None:
        inner_vp = _first_child(vp, "VP")
        return [] if inner_vp is None else _resolve_verbs(inner_vp, dicts)
    outer, outer_tokens = hit
    code = outer.code
    trigger = detokenize(outer_tokens)
    governed = _governed_verb(vp, dicts)
    if governed is not None:
        inner, inner_tokens = governed
        code = compose_codes(outer, inner)
        trigger = f"{trigger} {detokenize(inner_tokens)}"
    return [_VerbHit(code, trigger, vp)]


def _first_np(node: Node) -> Node | None:
    for sub in node.iter_preorder():
        if sub is not node and not sub.is_leaf and sub.base_label == "NP":
            return sub
    return None


def _np_actor(np: Node, dicts, at_date) -> str | None:
    hit = dicts.find_actor(np.tokens(), at_date)
    return None if hit is None else hit[0]


def _log_np_conjunction(np: Node, tree: ParseTree) -> None:
    labels = [c.base_label for c in np.children]
    if labels.count("NP") >= 2 and "CC" in labels:
        logger.info(
            "conjoined subject %r, coding the first conjunct only",
            detokenize(np.tokens()),
            extra={"event": "coder.np_conjunction", "sentence": tree.sentence_text},
        )


def code_sentence(tree: ParseTree, dicts, at_date=None, max_depth=None) -> CodingOutcome:
    """Code one sentence tree into events.

    The main clause is the leftmost maximal S-family node. Its source is the
    first NP child preceding its VP child, matched against the actor
    dictionary. The verb comes from the VP's head sequence; an auxiliary VP
    defers to its first embedded VP and a conjoined VP yields one event per
    matching conjunct. A verb governing another matching verb further down
    the clause chain composes its code with that verb. The target is the
    first NP inside the resolved VP; it may be absent.

    Parameters
    ----------
    tree: ParseTree
        Sentence to code.

    dicts: DictionarySet
        Actor and verb dictionaries.

    at_date: date or str, optional
        Date used for the validity ranges of actor entries.

    max_depth: int, optional
        Maximum clause nesting, by default `defaults.coder.maxdepth`.

    Returns
    -------
    CodingOutcome

    Examples
    --------
    >>> from phoenixlib.treebank import parse_treebank
    >>> from phoenixlib.dictionaries import ActorEntry, DictionarySet, VerbEntry
    >>> from phoenixlib.coder import code_sentence
    >>> dicts = DictionarySet(
    ...     actors=[ActorEntry((("OBAMA",),), "USAGOV"), ActorEntry((("RUSSIA",),), "RUS")],
    ...     verbs=[VerbEntry((("DENOUNCED",),), "111")],
    ...     version="toy",
    ... )
    >>> tree = parse_treebank("(ROOT (S (NP (NNP Obama)) (VP (VBD denounced) (NP (NNP Russia)))))")
    >>> ev = code_sentence(tree, dicts).events[0]
    >>> ev.source_code, ev.target_code, ev.event_code
    ('USAGOV', 'RUS', '111')
    """
    if max_depth is None:
        max_depth = default_settings.coder.maxdepth
    if at_date is not None:
        at_date = check_format_input_date(at_date, sig_name="at_date")

    clause = main_clause(tree)
    if clause is None:
        return CodingOutcome(skipped_reason=SkipReason.NoSourceActor)
    if clause_depth(clause) > max_depth:
        return CodingOutcome(skipped_reason=SkipReason.ComplexSentence)

    vp = _first_child(clause, "VP")
    source_np = _first_child(clause, "NP", before=vp)
    source = None
    if source_np is not None:
        _log_np_conjunction(source_np, tree)
        source = _np_actor(source_np, dicts, at_date)
    if source is None:
        return CodingOutcome(skipped_reason=SkipReason.NoSourceActor)

    hits = [] if vp is None else _resolve_verbs(vp, dicts)
    if not hits:
        return CodingOutcome(skipped_reason=SkipReason.NoVerbMatch)

    events = []
    for hit in hits:
        target_np = _first_np(hit.vp)
        target = None if target_np is None else _np_actor(target_np, dicts, at_date)
        events.append(CodedEvent(source, target, hit.code, 0, hit.trigger))
    return CodingOutcome(events=tuple(events))
