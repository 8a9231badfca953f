"""
The `phoenixlib.treebank` subpackage reads, traverses and writes bracketed
constituency parse trees.
"""

__all__ = [
    "ChunkKind",
    "Node",
    "ParseTree",
    "PhraseChunk",
    "TreebankBlock",
    "base_label",
    "detokenize",
    "extract_chunks",
    "parse_treebank",
    "read_treebank_batches",
    "serialize",
]

from phoenixlib._src.treebank.treebank_chunks import (
    ChunkKind,
    PhraseChunk,
    extract_chunks,
)
from phoenixlib._src.treebank.treebank_tree import (
    Node,
    ParseTree,
    TreebankBlock,
    base_label,
    detokenize,
    parse_treebank,
    read_treebank_batches,
    serialize,
)
