"""Definition of custom exceptions"""


class PhoenixError(Exception):
    """base class of all phoenixlib errors"""


class PhoenixBadUserInput(PhoenixError):
    """bad user input"""


class PhoenixInternalError(PhoenixError):
    """should never have reached this position in the code"""


# treebank ---------------------------------------------------------------------
class PhoenixUnbalancedBrackets(PhoenixBadUserInput):
    """mismatched parentheses in a bracketed tree"""


class PhoenixEmptyTree(PhoenixBadUserInput):
    """bracketed tree without any token"""


class PhoenixMalformedNode(PhoenixBadUserInput):
    """tree node without label or content"""


# dictionaries and tables ------------------------------------------------------
class PhoenixMissingFile(PhoenixBadUserInput):
    """a dictionary, table or config file does not exist"""


class PhoenixFormatError(PhoenixBadUserInput):
    """a line of a data file does not follow its format"""

    def __init__(self, msg, path=None, lineno=None):
        self.path = None if path is None else str(path)
        self.lineno = lineno
        location = ""
        if self.path is not None:
            location = self.path if lineno is None else f"{self.path}:{lineno}"
        elif lineno is not None:
            location = f"line {lineno}"
        super().__init__(f"{location}: {msg}" if location else msg)


class PhoenixInvalidCode(PhoenixFormatError):
    """actor or CAMEO code violating the code invariants"""


# coder / enrich ---------------------------------------------------------------
class PhoenixNoParses(PhoenixBadUserInput):
    """story without stored parse trees"""


class PhoenixUnknownRoot(PhoenixBadUserInput):
    """CAMEO root code outside the known tables"""


class PhoenixMalformedCode(PhoenixBadUserInput):
    """actor code length is not a multiple of 3"""


# ingest -----------------------------------------------------------------------
class PhoenixFeedUnreachable(PhoenixError):
    """feed could not be downloaded"""


class PhoenixFeedParseError(PhoenixError):
    """feed body is not valid RSS or Atom"""


class PhoenixFetchError(PhoenixError):
    """article download failed"""

    def __init__(self, msg, attempts=0):
        self.attempts = attempts
        super().__init__(msg)


class PhoenixNoContent(PhoenixError):
    """no main content block found in an article page"""


class PhoenixStoreCorruption(PhoenixError):
    """document store failed its integrity check"""


# pipeline ---------------------------------------------------------------------
class PhoenixNoInput(PhoenixError):
    """no parsed documents for the requested run"""


class PhoenixUnknownKind(PhoenixBadUserInput):
    """unknown report kind"""


class PhoenixRecordsFormatError(PhoenixFormatError):
    """malformed records file"""
