"""input checks code"""

import datetime as dt
import re
from urllib.parse import urlsplit

from phoenixlib._src.exceptions import (
    PhoenixBadUserInput,
    PhoenixFormatError,
    PhoenixInvalidCode,
    PhoenixMalformedCode,
    PhoenixUnknownRoot,
)

ACTOR_CODE_RE = re.compile(r"(?:[A-Z]{3})+")
SEGMENT_RE = re.compile(r"[A-Z]{3}")
CAMEO_CODE_RE = re.compile(r"\d{2,4}")
ISSUE_TAG_RE = re.compile(r"[A-Z][A-Z0-9]*(?:_[A-Z0-9]+)*")
CAMEO_ROOTS = tuple(f"{i:02d}" for i in range(1, 21))


#################################################################
#################################################################
# CODE CHECKS


def check_actor_code(inp, path=None, lineno=None):
    """actor codes are concatenated 3-char uppercase segments"""
    if not (isinstance(inp, str) and ACTOR_CODE_RE.fullmatch(inp)):
        msg = (
            "Actor codes must be a positive multiple of 3 uppercase letters A-Z.\n"
            f"Instead received {inp!r}."
        )
        raise PhoenixInvalidCode(msg, path=path, lineno=lineno)
    return inp


def check_segment_code(inp, path=None, lineno=None):
    """role, attribute and entity codes are single 3-char segments"""
    if not (isinstance(inp, str) and SEGMENT_RE.fullmatch(inp)):
        msg = f"Code segments must be exactly 3 uppercase letters.\nInstead received {inp!r}."
        raise PhoenixInvalidCode(msg, path=path, lineno=lineno)
    return inp


def check_cameo_code(inp, path=None, lineno=None):
    """CAMEO codes are 2-4 digits with a root in 01-20"""
    if not (
        isinstance(inp, str)
        and CAMEO_CODE_RE.fullmatch(inp)
        and inp[:2] in CAMEO_ROOTS
    ):
        msg = (
            "CAMEO codes must have 2 to 4 digits and a root in 01-20.\n"
            f"Instead received {inp!r}."
        )
        raise PhoenixInvalidCode(msg, path=path, lineno=lineno)
    return inp


def check_root_code(inp):
    """root codes are the 2-digit CAMEO categories 01-20"""
    if inp not in CAMEO_ROOTS:
        msg = f"Root code must be one of 01-20.\nInstead received {inp!r}."
        raise PhoenixUnknownRoot(msg)
    return inp


def check_actor_length(inp):
    """actor codes split into 3-char segments"""
    if not isinstance(inp, str) or not inp or len(inp) % 3:
        msg = (
            "Input parameter `full` must be an actor code whose length is a positive "
            f"multiple of 3.\nInstead received {inp!r}."
        )
        raise PhoenixMalformedCode(msg)
    return inp


def check_issue_tag(inp, path=None, lineno=None):
    """issue tags are uppercase words joined by underscores"""
    if not (isinstance(inp, str) and ISSUE_TAG_RE.fullmatch(inp)):
        msg = (
            "Issue tags must be uppercase words joined by underscores.\n"
            f"Instead received {inp!r}."
        )
        raise PhoenixFormatError(msg, path=path, lineno=lineno)
    return inp


#################################################################
#################################################################
# CHECK - FORMAT


def check_format_input_date(inp, sig_name="date"):
    """checks date input and returns a `datetime.date`
    - accepts date, datetime, 'YYYY-MM-DD' and 'YYYYMMDD'
    """
    if isinstance(inp, dt.datetime):
        return inp.date()
    if isinstance(inp, dt.date):
        return inp
    if isinstance(inp, str):
        for fmt in ("%Y-%m-%d", "%Y%m%d"):
            try:
                return dt.datetime.strptime(inp.strip(), fmt).date()
            except ValueError:
                continue
    msg = (
        f"Input parameter `{sig_name}` must be a date or a string of the form "
        f"'YYYY-MM-DD' or 'YYYYMMDD'.\nInstead received {inp!r}."
    )
    raise PhoenixBadUserInput(msg)


def check_format_input_date_range(inp, path=None, lineno=None):
    """checks 'YYYYMMDD-YYYYMMDD' validity ranges and returns a (start, end) tuple"""
    parts = inp.split("-")
    try:
        if len(parts) != 2:
            raise PhoenixBadUserInput(inp)
        start = check_format_input_date(parts[0])
        end = check_format_input_date(parts[1])
    except PhoenixBadUserInput as err:
        msg = f"Date ranges must read 'YYYYMMDD-YYYYMMDD'.\nInstead received {inp!r}."
        raise PhoenixFormatError(msg, path=path, lineno=lineno) from err
    if end < start:
        msg = f"Date range ends before it starts: {inp!r}."
        raise PhoenixFormatError(msg, path=path, lineno=lineno)
    return start, end


def check_format_input_url(inp, path=None, lineno=None):
    """checks that `inp` is an absolute http(s) URL"""
    parts = urlsplit(inp) if isinstance(inp, str) else None
    if parts is None or parts.scheme not in ("http", "https") or not parts.netloc:
        msg = f"URLs must be absolute http or https URLs.\nInstead received {inp!r}."
        raise PhoenixFormatError(msg, path=path, lineno=lineno)
    return inp


def check_pool_size(inp):
    """worker pools need at least one worker"""
    if not (isinstance(inp, int) and not isinstance(inp, bool) and inp >= 1):
        msg = (
            "Input parameter `pool_size` must be an integer >= 1.\n"
            f"Instead received {inp!r}."
        )
        raise PhoenixBadUserInput(msg)
    return inp


def check_format_input_backend(inp):
    """checks plotting backend input and returns the backend name"""
    from phoenixlib._src.defaults.defaults_classes import default_settings  # noqa: PLC0415
    from phoenixlib._src.defaults.defaults_utility import (  # noqa: PLC0415
        SUPPORTED_PLOTTING_BACKENDS,
    )

    if inp is None:
        inp = default_settings.report.backend
    if inp in SUPPORTED_PLOTTING_BACKENDS:
        return inp
    msg = (
        f"Input parameter `backend` must be one of `{[*SUPPORTED_PLOTTING_BACKENDS, None]}`."
        f"\nInstead received {inp!r}."
    )
    raise PhoenixBadUserInput(msg)
