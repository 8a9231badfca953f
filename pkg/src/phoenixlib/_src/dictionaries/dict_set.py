"""DictionarySet: the indexed actor, verb, issue and code-set dictionaries"""

from __future__ import annotations

import logging
import re

from phoenixlib._src.dictionaries.dict_entries import ActorEntry, IssueEntry, VerbEntry
from phoenixlib._src.dictionaries.dict_trie import PatternTrie
from phoenixlib._src.input_checks import check_format_input_date

logger = logging.getLogger(__name__)

SPECIAL_ENTITIES = frozenset({"IMG", "IGO", "MNC", "NGO"})


def _issue_regex(keyword):
    body = r"\s+".join(re.escape(tok) for tok in keyword)
    return re.compile(rf"(?<!\w){body}(?!\w)")


class DictionarySet:
    """Immutable bundle of the dictionaries that drive coding.

    Parameters
    ----------
    actors: iterable of ActorEntry
        In file order. A pattern repeated with the same validity range replaces
        the earlier one (last one wins, logged).

    verbs: iterable of VerbEntry
        In file order. A repeated verb form replaces the earlier one.

    issues: iterable of IssueEntry
        A repeated keyword replaces the earlier one.

    roles, attributes, entities_special: iterables of 3-char codes

    version: str
        Non-empty dictionary version, written into every run manifest.
    """

    def __init__(
        self,
        actors=(),
        verbs=(),
        issues=(),
        roles=(),
        attributes=(),
        entities_special=SPECIAL_ENTITIES,
        version="unversioned",
    ):
        if not (isinstance(version, str) and version.strip()):
            msg = f"Input parameter `version` must be a non-empty string.\nInstead received {version!r}."
            raise ValueError(msg)
        self._version = version.strip()
        self._roles = frozenset(roles)
        self._attributes = frozenset(attributes)
        self._entities_special = frozenset(entities_special)

        self._actor_trie = PatternTrie()
        for entry in actors:
            for pattern in entry.patterns:
                self._index_actor(pattern, entry)
        self._verb_trie = PatternTrie()
        for entry in verbs:
            for pattern in entry.verb_forms:
                self._index_verb(pattern, entry)
        issue_index: dict[tuple[str, ...], IssueEntry] = {}
        for entry in issues:
            if entry.keyword in issue_index:
                logger.warning(
                    "duplicate issue keyword %r, keeping the last entry",
                    " ".join(entry.keyword),
                    extra={"event": "dictionaries.duplicate", "kind": "issue"},
                )
            issue_index[entry.keyword] = entry
        self._issues = tuple(issue_index.values())
        self._issue_regexes = tuple((_issue_regex(e.keyword), e) for e in self._issues)

    def _index_actor(self, pattern, entry):
        slot = self._actor_trie.get(pattern)
        for i, other in enumerate(slot):
            if other.valid_range == entry.valid_range:
                logger.warning(
                    "duplicate actor pattern %r (%s -> %s), keeping the last entry",
                    "_".join(pattern),
                    other.code,
                    entry.code,
                    extra={"event": "dictionaries.duplicate", "kind": "actor"},
                )
                slot[i] = entry
                return
        self._actor_trie.insert(pattern, entry)

    def _index_verb(self, pattern, entry):
        slot = self._verb_trie.get(pattern)
        if slot:
            logger.warning(
                "duplicate verb pattern %r (%s -> %s), keeping the last entry",
                "_".join(pattern),
                slot[0].code,
                entry.code,
                extra={"event": "dictionaries.duplicate", "kind": "verb"},
            )
            slot[0] = entry
            return
        self._verb_trie.insert(pattern, entry)

    # properties ---------------------------------------------------------------
    @property
    def version(self) -> str:
        return self._version

    @property
    def roles(self) -> frozenset:
        return self._roles

    @property
    def attributes(self) -> frozenset:
        return self._attributes

    @property
    def entities_special(self) -> frozenset:
        return self._entities_special

    @property
    def issues(self) -> tuple[IssueEntry, ...]:
        return self._issues

    @property
    def n_actor_patterns(self) -> int:
        return len(self._actor_trie)

    @property
    def n_verb_patterns(self) -> int:
        return len(self._verb_trie)

    def __repr__(self):
        return (
            f"DictionarySet(version={self._version!r}, actor_patterns={self.n_actor_patterns}, "
            f"verb_patterns={self.n_verb_patterns}, issues={len(self._issues)}, "
            f"roles={len(self._roles)}, attributes={len(self._attributes)})"
        )

    # queries ------------------------------------------------------------------
    def match_actor(self, tokens, at_date=None) -> tuple[str, int] | None:
        """Longest actor pattern that prefixes `tokens` and is valid at `at_date`.

        Ties on length go to the earliest entry in file order.

        Returns
        -------
        (code, matched_length) or None
        """
        if at_date is not None:
            at_date = check_format_input_date(at_date, sig_name="at_date")
        hit = self._actor_trie.longest_match(tokens, accept=lambda e: e.valid_at(at_date))
        if hit is None:
            return None
        entry, length = hit
        return entry.code, length

    def find_actor(self, tokens, at_date=None) -> tuple[str, int, int] | None:
        """First actor match scanning `tokens` from the left.

        Returns
        -------
        (code, start, matched_length) or None
        """
        tokens = list(tokens)
        for start in range(len(tokens)):
            hit = self.match_actor(tokens[start:], at_date)
            if hit is not None:
                return hit[0], start, hit[1]
        return None

    def match_verb(self, tokens) -> tuple[VerbEntry, int] | None:
        """Longest verb pattern that prefixes `tokens`.

        Returns
        -------
        (VerbEntry, matched_length) or None
        """
        return self._verb_trie.longest_match(tokens)

    def match_issues(self, text: str) -> list[tuple[str, int]]:
        """Issue tags whose keywords occur in `text`.

        Keywords match as whole words and are counted independently of each
        other; the counts of keywords sharing a tag add up.

        Returns
        -------
        list of (issue_tag, count), count descending then tag ascending.
        """
        counts: dict[str, int] = {}
        text = text.lower()
        for regex, entry in self._issue_regexes:
            n = len(regex.findall(text))
            if n:
                counts[entry.issue_tag] = counts.get(entry.issue_tag, 0) + n
        return sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
