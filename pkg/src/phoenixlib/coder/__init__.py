"""
The `phoenixlib.coder` subpackage codes sentence parse trees into CAMEO
source-action-target events.
"""

__all__ = [
    "CodedEvent",
    "CodingOutcome",
    "SkipReason",
    "code_sentence",
    "code_story",
    "code_trees",
    "compose_codes",
]

from phoenixlib._src.coder.coder_compose import compose_codes
from phoenixlib._src.coder.coder_sentence import (
    CodedEvent,
    CodingOutcome,
    SkipReason,
    code_sentence,
)
from phoenixlib._src.coder.coder_story import code_story, code_trees
