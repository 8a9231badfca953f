"""Token-sequence trie with longest-prefix lookup."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence


class TrieNode:
    __slots__ = ("children", "values")

    def __init__(self):
        self.children: dict[str, TrieNode] = {}
        self.values: list = []


class PatternTrie:
    """Maps token sequences to lists of values.

    Keys are normalized with `normalize` (uppercase by default) on insertion and
    lookup. Values stored under the same key keep insertion order.
    """

    def __init__(self, normalize: Callable[[str], str] = str.upper):
        self._root = TrieNode()
        self._normalize = normalize
        self._size = 0

    def __len__(self) -> int:
        return self._size

    def insert(self, pattern: Sequence[str], value) -> None:
        node = self._root
        for tok in pattern:
            node = node.children.setdefault(self._normalize(tok), TrieNode())
        node.values.append(value)
        self._size += 1

    def get(self, pattern: Sequence[str]) -> list:
        """Values stored under exactly `pattern` (the live list)."""
        node = self._root
        for tok in pattern:
            node = node.children.get(self._normalize(tok))
            if node is None:
                return []
        return node.values

    def prefixes(self, tokens: Iterable[str]) -> list[tuple[int, list]]:
        """(length, values) for every stored pattern that is a prefix of `tokens`, shortest first."""
        found = []
        node = self._root
        for length, tok in enumerate(tokens, start=1):
            node = node.children.get(self._normalize(tok))
            if node is None:
                break
            if node.values:
                found.append((length, node.values))
        return found

    def longest_match(self, tokens: Iterable[str], accept: Callable | None = None):
        """Longest stored prefix of `tokens`.

        Returns `(value, length)` for the first value (in insertion order) of the
        longest prefix holding a value accepted by `accept`, or `None`.
        """
        for length, values in reversed(self.prefixes(tokens)):
            for value in values:
                if accept is None or accept(value):
                    return value, length
        return None
