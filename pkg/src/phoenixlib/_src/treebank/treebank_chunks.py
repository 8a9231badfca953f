"""Noun, verb and prepositional phrase chunks of a parse tree."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from phoenixlib._src.treebank.treebank_tree import Node, ParseTree


class ChunkKind(Enum):
    NounPhrase = "NP"
    VerbPhrase = "VP"
    PrepPhrase = "PP"


LABEL_TO_KIND = {kind.value: kind for kind in ChunkKind}

NOUN_TAGS = ("NN", "PRP", "CD")
VERB_TAGS = ("VB", "MD")


@dataclass(frozen=True, slots=True)
class PhraseChunk:
    kind: ChunkKind
    node: Node
    head_token_index: int

    @property
    def tokens(self) -> list[str]:
        return self.node.tokens()


def is_noun_tag(label: str) -> bool:
    return label.startswith(NOUN_TAGS)


def is_verb_tag(label: str) -> bool:
    return label.startswith(VERB_TAGS)


def chunk_kind(node: Node) -> ChunkKind | None:
    """Chunk kind of an internal node, `None` for every other label."""
    if node.is_leaf:
        return None
    return LABEL_TO_KIND.get(node.base_label)


def head_token_index(node: Node, kind: ChunkKind) -> int:
    """Index (into the sentence tokens) of the chunk's head word.

    NP: last noun-tagged direct leaf child, VP: first verb-tagged direct leaf
    child, PP: first leaf. The chunk's last (NP) or first leaf otherwise.
    """
    direct = [c for c in node.children if c.is_leaf]
    if kind is ChunkKind.NounPhrase:
        nouns = [c for c in direct if is_noun_tag(c.label)]
        return nouns[-1].span[0] if nouns else node.span[1] - 1
    if kind is ChunkKind.VerbPhrase:
        verbs = [c for c in direct if is_verb_tag(c.label)]
        return verbs[0].span[0] if verbs else node.span[0]
    return node.span[0]


def extract_chunks(tree: ParseTree) -> list[PhraseChunk]:
    """Maximal NP, VP and PP chunks in preorder.

    A node is a chunk unless one of its ancestors is a chunk of the same kind,
    so an NP nested inside a larger NP is not listed separately while an NP
    below a VP is.

    Examples
    --------
    >>> from phoenixlib.treebank import parse_treebank, extract_chunks
    >>> tree = parse_treebank("(ROOT (S (NP (NNP Obama)) (VP (VBD denounced) (NP (NNP Russia)))))")
    >>> [(c.kind.value, " ".join(c.tokens)) for c in extract_chunks(tree)]
    [('NP', 'Obama'), ('VP', 'denounced Russia'), ('NP', 'Russia')]
    """
    chunks = []
    stack = [(tree.root, frozenset())]
    while stack:
        node, open_kinds = stack.pop()
        kind = chunk_kind(node)
        if kind is not None and kind not in open_kinds:
            chunks.append(PhraseChunk(kind, node, head_token_index(node, kind)))
            open_kinds = open_kinds | {kind}
        stack.extend((child, open_kinds) for child in reversed(node.children))
    return chunks
