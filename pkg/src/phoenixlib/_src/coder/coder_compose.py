"""Verb interaction: a governing verb recodes the verb it governs."""

from __future__ import annotations

from phoenixlib._src.dictionaries.dict_entries import VerbEntry


def compose_codes(outer: VerbEntry, inner: VerbEntry) -> str:
    """CAMEO code of an outer verb governing an inner verb in one clause chain.

    The outer verb's composition rules are looked up with the inner verb's root
    code. Without a matching rule the outer verb's own code is returned.

    Examples
    --------
    >>> from phoenixlib.dictionaries import VerbEntry
    >>> from phoenixlib.coder import compose_codes
    >>> intend = VerbEntry((("INTEND",),), "03", (("07", "033"),))
    >>> compose_codes(intend, VerbEntry((("AID",),), "07"))
    '033'
    >>> compose_codes(intend, VerbEntry((("FIGHT",),), "19"))
    '03'
    """
    composed = outer.rule_for(inner.root)
    return outer.code if composed is None else composed
