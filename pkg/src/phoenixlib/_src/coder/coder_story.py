"""Coding of all stored parse trees of a story."""

from __future__ import annotations

import dataclasses
import logging

from phoenixlib._src.coder.coder_sentence import CodedEvent, code_sentence
from phoenixlib._src.exceptions import PhoenixBadUserInput, PhoenixNoParses
from phoenixlib._src.treebank.treebank_tree import parse_treebank

logger = logging.getLogger(__name__)


def code_trees(trees, dicts, at_date=None, max_depth=None, story_id="") -> list[CodedEvent]:
    """Code a sequence of bracketed trees as the sentences of one story.

    Malformed trees are logged and skipped. Events carry the tree's index as
    `sentence_id`; events repeating an earlier (source, target, code) triple
    are dropped.
    """
    events: list[CodedEvent] = []
    seen: set[tuple] = set()
    for sentence_id, text in enumerate(trees):
        try:
            tree = parse_treebank(text)
        except PhoenixBadUserInput as err:
            logger.warning(
                "skipping malformed sentence %d of story %r: %s",
                sentence_id,
                story_id,
                err,
                extra={"event": "coder.malformed_sentence", "story_id": story_id},
            )
            continue
        outcome = code_sentence(tree, dicts, at_date=at_date, max_depth=max_depth)
        for ev in outcome.events:
            key = (ev.source_code, ev.target_code, ev.event_code)
            if key in seen:
                continue
            seen.add(key)
            events.append(dataclasses.replace(ev, sentence_id=sentence_id))
    return events


def code_story(doc, dicts, max_depth=None) -> list[CodedEvent]:
    """Code every parse tree of a story.

    Parameters
    ----------
    doc: StoryDocument
        Story with stored parse trees. Actor validity ranges are checked
        against its event date.

    dicts: DictionarySet

    max_depth: int, optional
        Maximum clause nesting, by default `defaults.coder.maxdepth`.

    Returns
    -------
    list of CodedEvent in sentence order, within-story duplicates collapsed to
    their first occurrence.

    Raises
    ------
    PhoenixNoParses
        if the story has no parse trees.
    """
    if not doc.parse_trees:
        msg = f"Story {doc.story_id!r} has no parse trees."
        raise PhoenixNoParses(msg)
    return code_trees(
        doc.parse_trees,
        dicts,
        at_date=doc.event_date,
        max_depth=max_depth,
        story_id=doc.story_id,
    )
