"""
Reading, representing and writing Penn-Treebank style bracketed parse trees.
"""

from __future__ import annotations

import re
from collections.abc import Iterator
from dataclasses import dataclass, field
from pathlib import Path

from nltk.tokenize.treebank import TreebankWordDetokenizer
from nltk.tree import Tree

from phoenixlib._src.exceptions import (
    PhoenixEmptyTree,
    PhoenixMalformedNode,
    PhoenixMissingFile,
    PhoenixUnbalancedBrackets,
)

_HEADER_RE = re.compile(r"#\s*([\w-]+)\s*:\s*(.*)")

S_FAMILY = frozenset({"S", "SINV", "SQ", "SBARQ"})
CLAUSE_FAMILY = S_FAMILY | {"SBAR"}
ROOT_LABEL = "ROOT"

_DETOKENIZER = TreebankWordDetokenizer()


def base_label(label: str) -> str:
    """Syntactic category without function tags and indices, e.g. 'NP-SBJ-1' -> 'NP'."""
    if label.startswith("-"):
        return label
    return re.split(r"[-=]", label, maxsplit=1)[0]


def detokenize(tokens) -> str:
    """Surface form of a token sequence, bracket escapes like -LRB- undone.

    Examples
    --------
    >>> from phoenixlib.treebank import detokenize
    >>> detokenize(["Russia", "'s", "army", "-LRB-", "RUS", "-RRB-", "left", "."])
    "Russia's army (RUS) left."
    """
    return _DETOKENIZER.detokenize(list(tokens), convert_parentheses=True)


@dataclass(frozen=True, slots=True)
class Node:
    """One node of a constituency tree.

    Leaves are pre-terminals: they carry their part-of-speech tag as `label`
    and the word as `token`. Internal nodes carry a phrase label and children.
    `span` is the half-open range of token indices covered by the node.
    """

    label: str
    children: tuple[Node, ...] = ()
    token: str | None = None
    span: tuple[int, int] = (0, 0)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def base_label(self) -> str:
        return base_label(self.label)

    def iter_preorder(self) -> Iterator[Node]:
        """All nodes of the subtree, parents before children, left to right."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def leaves(self) -> list[Node]:
        return [n for n in self.iter_preorder() if n.is_leaf]

    def tokens(self) -> list[str]:
        return [n.token for n in self.iter_preorder() if n.is_leaf]


@dataclass(frozen=True, slots=True)
class ParseTree:
    """Constituency tree of one sentence."""

    root: Node
    sentence_text: str = field(default="", compare=False)

    @property
    def tokens(self) -> tuple[str, ...]:
        return tuple(self.root.tokens())

    def __len__(self) -> int:
        return self.root.span[1]

    def __str__(self) -> str:
        return serialize(self)


class _Converter:
    """Turns an nltk tree into frozen `Node`s, numbering leaves left to right.

    Problems are collected rather than raised so that an empty tree is
    reported as such even when it also has malformed nodes.
    """

    def __init__(self):
        self.n_leaves = 0
        self.malformed = None

    def _flag(self, msg):
        if self.malformed is None:
            self.malformed = msg

    def convert(self, tree: Tree, is_root=False) -> Node | None:
        label = tree.label()
        words = [c for c in tree if isinstance(c, str)]
        subtrees = [c for c in tree if isinstance(c, Tree)]
        if words and (subtrees or len(words) > 1):
            self.n_leaves += len(words)
            self._flag(f"Node {label!r} mixes tokens and children near {words[-1]!r}.")
            return None
        if words:
            start = self.n_leaves
            self.n_leaves += 1
            if not label:
                self._flag(f"Token {words[0]!r} has no part-of-speech label.")
                return None
            return Node(label, (), words[0], (start, start + 1))
        children = [n for n in (self.convert(t) for t in subtrees) if n is not None]
        if not subtrees:
            self._flag(
                f"Node {label!r} has neither children nor token."
                if label
                else "Node with neither label nor children: '()'."
            )
            return None
        if not label:
            if not is_root:
                self._flag("Unlabeled inner node.")
                return None
            label = ROOT_LABEL
        if not children:
            return None
        return Node(label, tuple(children), None, (children[0].span[0], children[-1].span[1]))


def parse_treebank(text: str) -> ParseTree:
    """Parse one bracketed sentence tree.

    Parameters
    ----------
    text: str
        Balanced-parenthesis Penn-Treebank style bracketing of one sentence.
        An unlabeled outer bracket is read as ROOT.

    Returns
    -------
    ParseTree with spans computed; token order equals left-to-right leaf order.

    Raises
    ------
    PhoenixUnbalancedBrackets
        mismatched parentheses or text outside the single top-level bracket.
    PhoenixEmptyTree
        no tokens at all.
    PhoenixMalformedNode
        node with neither label nor content, mixed token and children, or a root
        that is neither ROOT nor a clause.

    Examples
    --------
    >>> from phoenixlib.treebank import parse_treebank
    >>> tree = parse_treebank("(ROOT (S (NP (NNP Obama)) (VP (VBD denounced) (NP (NNP Russia)))))")
    >>> tree.tokens, tree.root.span
    (('Obama', 'denounced', 'Russia'), (0, 3))
    """
    if not isinstance(text, str):
        msg = f"Input parameter `text` must be a string.\nInstead received {type(text)!r}."
        raise PhoenixMalformedNode(msg)
    if not text.strip():
        msg = "Tree text is empty."
        raise PhoenixEmptyTree(msg)
    try:
        raw = Tree.fromstring(text)
    except ValueError as err:
        msg = f"Unbalanced bracketing: {err}"
        raise PhoenixUnbalancedBrackets(msg) from err

    conv = _Converter()
    root = conv.convert(raw, is_root=True)
    if conv.n_leaves == 0:
        msg = "Tree has no tokens."
        raise PhoenixEmptyTree(msg)
    if conv.malformed is not None:
        raise PhoenixMalformedNode(conv.malformed)
    if root.base_label != ROOT_LABEL and root.base_label not in S_FAMILY:
        msg = f"Root label must be ROOT or a clause label (S, SINV, SQ, SBARQ), got {root.label!r}."
        raise PhoenixMalformedNode(msg)
    return ParseTree(root, detokenize(root.tokens()))


def _serialize_node(node: Node, out: list) -> None:
    if node.is_leaf:
        out.append(f"({node.label} {node.token})")
        return
    out.append(f"({node.label}")
    for child in node.children:
        out.append(" ")
        _serialize_node(child, out)
    out.append(")")


def serialize(tree: ParseTree) -> str:
    """Canonical one-line bracketing of `tree`, single spaces between labels and tokens.

    Examples
    --------
    >>> from phoenixlib.treebank import parse_treebank, serialize
    >>> serialize(parse_treebank("(ROOT\\n  (NP (NN x)))"))
    '(ROOT (NP (NN x)))'
    """
    out: list[str] = []
    _serialize_node(tree.root, out)
    return "".join(out)


@dataclass
class TreebankBlock:
    """Trees of one document in a treebank batch file, with its `# key: value` headers."""

    headers: dict[str, str]
    trees: list[str]
    lineno: int


def read_treebank_batches(path) -> list[TreebankBlock]:
    """Read a treebank batch file.

    One tree per line; blank lines separate documents; lines starting with '#'
    are `key: value` headers of the document that follows. Trees are returned
    as text, unparsed, so that a malformed sentence does not spoil its block.
    """
    path = Path(path)
    if not path.is_file():
        msg = f"Treebank file {str(path)!r} does not exist."
        raise PhoenixMissingFile(msg)
    blocks: list[TreebankBlock] = []
    current = None
    with path.open(encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line:
                current = None
                continue
            if current is None:
                current = TreebankBlock({}, [], lineno)
                blocks.append(current)
            if line.startswith("#"):
                m = _HEADER_RE.match(line)
                if m:
                    current.headers[m.group(1).lower()] = m.group(2).strip()
                continue
            current.trees.append(line)
    return [b for b in blocks if b.trees or b.headers]
