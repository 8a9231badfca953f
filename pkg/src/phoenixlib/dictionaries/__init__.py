"""
The `phoenixlib.dictionaries` subpackage loads and queries the actor, verb,
issue and code-set dictionaries that drive event coding.
"""

__all__ = [
    "ActorEntry",
    "DictionarySet",
    "IssueEntry",
    "PatternTrie",
    "VerbEntry",
    "load_dictionaries",
]

from phoenixlib._src.dictionaries.dict_entries import ActorEntry, IssueEntry, VerbEntry
from phoenixlib._src.dictionaries.dict_loader import load_dictionaries
from phoenixlib._src.dictionaries.dict_set import DictionarySet
from phoenixlib._src.dictionaries.dict_trie import PatternTrie
