"""Dictionary entry types"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass


@dataclass(frozen=True)
class ActorEntry:
    """Actor patterns sharing one actor code.

    Parameters
    ----------
    patterns: tuple of token tuples
        Multi-word names and synonyms, e.g. `(('ISLAMIC', 'STATE'), ('ISIL',))`.

    code: str
        Concatenated 3-character segments, e.g. 'IMGMOSISI'.

    valid_range: (date, date) or None
        Inclusive interval during which the code applies. `None` means always.
    """

    patterns: tuple[tuple[str, ...], ...]
    code: str
    valid_range: tuple[dt.date, dt.date] | None = None

    def valid_at(self, at_date: dt.date | None) -> bool:
        if self.valid_range is None or at_date is None:
            return True
        start, end = self.valid_range
        return start <= at_date <= end


@dataclass(frozen=True)
class VerbEntry:
    """Verb forms sharing one CAMEO code, with the codes they compose to.

    `composition_rules` maps the root code (2 digits) of a governed verb to the
    code the pair produces, e.g. `(('07', '033'),)` for "intend" + "aid".
    """

    verb_forms: tuple[tuple[str, ...], ...]
    code: str
    composition_rules: tuple[tuple[str, str], ...] = ()

    @property
    def root(self) -> str:
        return self.code[:2]

    def rule_for(self, root: str) -> str | None:
        for key, composed in self.composition_rules:
            if key == root:
                return composed
        return None


@dataclass(frozen=True)
class IssueEntry:
    keyword: tuple[str, ...]
    issue_tag: str
