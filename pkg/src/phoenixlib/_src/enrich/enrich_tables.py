"""CAMEO QuadClass and Goldstein score tables."""

from __future__ import annotations

import functools
import logging
from importlib import resources

from phoenixlib._src.dictionaries.dict_loader import read_versioned_lines
from phoenixlib._src.exceptions import PhoenixFormatError, PhoenixUnknownRoot
from phoenixlib._src.input_checks import CAMEO_ROOTS, check_cameo_code, check_root_code

logger = logging.getLogger(__name__)

# 0 neutral, 1 verbal cooperation, 2 material cooperation,
# 3 verbal conflict, 4 material conflict
QUAD_CLASS = {
    "01": 0,
    "02": 0,
    "03": 1,
    "04": 1,
    "05": 1,
    "06": 2,
    "07": 2,
    "08": 2,
    "09": 3,
    "10": 3,
    "11": 3,
    "12": 3,
    "13": 3,
    "14": 4,
    "15": 4,
    "16": 3,
    "17": 4,
    "18": 4,
    "19": 4,
    "20": 4,
}

GOLDSTEIN_RANGE = (-10.0, 10.0)


def quad_class(root_code: str) -> int:
    """QuadClass of a CAMEO root code.

    Examples
    --------
    >>> from phoenixlib.enrich import quad_class
    >>> quad_class("01"), quad_class("16"), quad_class("14")
    (0, 3, 4)
    """
    return QUAD_CLASS[check_root_code(root_code)]


class GoldsteinTable:
    """Goldstein scores of CAMEO codes with prefix fallback.

    Parameters
    ----------
    scores: dict
        CAMEO code -> score in [-10, 10]. Every root 01-20 needs an entry.

    version: str
        Version of the score table.
    """

    def __init__(self, scores, version):
        self._scores = dict(scores)
        self._version = version
        missing = [root for root in CAMEO_ROOTS if root not in self._scores]
        if missing:
            msg = f"Goldstein table {version!r} misses the root codes {missing}."
            raise PhoenixFormatError(msg)

    @property
    def version(self) -> str:
        return self._version

    def __len__(self):
        return len(self._scores)

    def __repr__(self):
        return f"GoldsteinTable(version={self._version!r}, codes={len(self._scores)})"

    def score(self, code: str) -> float:
        """Score of `code`, falling back from 4 to 3 to 2 digit prefixes.

        Raises
        ------
        PhoenixUnknownRoot
            if not even the 2-digit root is in the table.
        """
        for width in range(min(len(code), 4), 1, -1):
            val = self._scores.get(code[:width])
            if val is not None:
                return val
        msg = f"CAMEO code {code!r} has no Goldstein score, its root is unknown."
        raise PhoenixUnknownRoot(msg)


def load_goldstein_table(path=None) -> GoldsteinTable:
    """Read a `CODE<TAB>score` table with a `# version:` header.

    Without `path` the table shipped with the package is read.
    """
    if path is None:
        path = resources.files("phoenixlib").joinpath("_data", "goldstein.tsv")
    version, lines = read_versioned_lines(path)
    scores = {}
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            msg = f"Expected `CODE<TAB>score`.\nInstead received {line!r}."
            raise PhoenixFormatError(msg, path=path, lineno=lineno)
        code = check_cameo_code(parts[0], path=path, lineno=lineno)
        try:
            val = float(parts[1])
        except ValueError as err:
            msg = f"Goldstein scores must be numbers.\nInstead received {parts[1]!r}."
            raise PhoenixFormatError(msg, path=path, lineno=lineno) from err
        if not GOLDSTEIN_RANGE[0] <= val <= GOLDSTEIN_RANGE[1]:
            msg = f"Goldstein scores must lie in [-10, 10].\nInstead received {val}."
            raise PhoenixFormatError(msg, path=path, lineno=lineno)
        scores[code] = val
    try:
        table = GoldsteinTable(scores, version)
    except PhoenixFormatError as err:
        raise PhoenixFormatError(str(err), path=path) from err
    logger.debug(
        "loaded %r", table, extra={"event": "enrich.goldstein.loaded", "version": version}
    )
    return table


@functools.cache
def _packaged_table():
    return load_goldstein_table()


def goldstein(code: str, table: GoldsteinTable | None = None) -> float:
    """Goldstein score of a CAMEO code, from `table` or the packaged table.

    Examples
    --------
    >>> from phoenixlib.enrich import goldstein
    >>> goldstein("190")
    -10.0
    """
    if table is None:
        table = _packaged_table()
    return table.score(code)
