"""Readers of the actor, verb, issue and code-set dictionary files."""

from __future__ import annotations

import logging
import re
from pathlib import Path

from phoenixlib._src.dictionaries.dict_entries import ActorEntry, IssueEntry, VerbEntry
from phoenixlib._src.dictionaries.dict_set import SPECIAL_ENTITIES, DictionarySet
from phoenixlib._src.exceptions import PhoenixFormatError, PhoenixMissingFile
from phoenixlib._src.input_checks import (
    check_actor_code,
    check_cameo_code,
    check_format_input_date_range,
    check_issue_tag,
    check_segment_code,
)

logger = logging.getLogger(__name__)

_VERSION_RE = re.compile(r"#\s*version\s*:\s*(\S.*?)\s*$", re.IGNORECASE)
_SECTION_RE = re.compile(r"\[\s*(\w+)\s*\]")
CODE_SET_SECTIONS = ("roles", "attributes", "entities")


def read_versioned_lines(path):
    """(lineno, line) of the non-comment lines of `path` and its version header.

    Inline comments start at '#'. The `# version: <string>` header may appear
    anywhere before the first content line.
    """
    path = Path(path)
    if not path.is_file():
        msg = f"Data file {str(path)!r} does not exist."
        raise PhoenixMissingFile(msg)
    version = None
    lines = []
    with path.open(encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            stripped = raw.strip()
            if not lines and version is None:
                m = _VERSION_RE.match(stripped)
                if m:
                    version = m.group(1)
                    continue
            line = stripped.split("#", 1)[0].strip()
            if line:
                lines.append((lineno, line))
    if version is None:
        msg = "Missing required `# version: <string>` header."
        raise PhoenixFormatError(msg, path=path, lineno=1)
    return version, lines


def _split_pattern(text, path, lineno):
    """'ISLAMIC_STATE_' -> ('ISLAMIC', 'STATE')"""
    tokens = tuple(t for t in re.split(r"[_\s]+", text.strip()) if t)
    if not tokens:
        msg = f"Empty pattern in {text!r}."
        raise PhoenixFormatError(msg, path=path, lineno=lineno)
    return tokens


def _split_fields(line, n_min, n_max, fmt, path, lineno):
    fields = [f.strip() for f in line.split(";")]
    if not n_min <= len(fields) <= n_max or not all(fields[:n_min]):
        msg = f"Expected `{fmt}`.\nInstead received {line!r}."
        raise PhoenixFormatError(msg, path=path, lineno=lineno)
    return fields


def read_actor_file(path) -> tuple[str, list[ActorEntry]]:
    """Actor dictionary: `PATTERN[|PATTERN...];CODE[;YYYYMMDD-YYYYMMDD]` lines."""
    version, lines = read_versioned_lines(path)
    entries = []
    for lineno, line in lines:
        fields = _split_fields(
            line, 2, 3, "PATTERN;CODE[;YYYYMMDD-YYYYMMDD]", path, lineno
        )
        patterns = tuple(
            _split_pattern(p, path, lineno) for p in fields[0].split("|") if p.strip()
        )
        code = check_actor_code(fields[1], path=path, lineno=lineno)
        valid_range = None
        if len(fields) == 3 and fields[2]:
            valid_range = check_format_input_date_range(fields[2], path=path, lineno=lineno)
        entries.append(ActorEntry(patterns, code, valid_range))
    return version, entries


def _parse_rules(text, path, lineno):
    rules = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        root, sep, composed = item.partition(">")
        if not sep:
            msg = f"Composition rules read `ROOT>COMPOSED`.\nInstead received {item!r}."
            raise PhoenixFormatError(msg, path=path, lineno=lineno)
        root = check_cameo_code(root.strip(), path=path, lineno=lineno)
        if len(root) != 2:
            msg = f"Composition rule keys must be 2-digit root codes.\nInstead received {root!r}."
            raise PhoenixFormatError(msg, path=path, lineno=lineno)
        composed = check_cameo_code(composed.strip(), path=path, lineno=lineno)
        rules.append((root, composed))
    return tuple(rules)


def read_verb_file(path) -> tuple[str, list[VerbEntry]]:
    """Verb dictionary: `PATTERN[|PATTERN...];CODE[;ROOT>COMPOSED,...]` lines."""
    version, lines = read_versioned_lines(path)
    entries = []
    for lineno, line in lines:
        fields = _split_fields(line, 2, 3, "PATTERN;CODE[;ROOT>COMPOSED,...]", path, lineno)
        forms = tuple(
            _split_pattern(p, path, lineno) for p in fields[0].split("|") if p.strip()
        )
        code = check_cameo_code(fields[1], path=path, lineno=lineno)
        rules = _parse_rules(fields[2], path, lineno) if len(fields) == 3 else ()
        entries.append(VerbEntry(forms, code, rules))
    return version, entries


def read_issue_file(path) -> tuple[str, list[IssueEntry]]:
    """Issue dictionary: `keyword phrase;TAG` lines."""
    version, lines = read_versioned_lines(path)
    entries = []
    for lineno, line in lines:
        fields = _split_fields(line, 2, 2, "keyword phrase;TAG", path, lineno)
        keyword = tuple(fields[0].lower().split())
        tag = check_issue_tag(fields[1], path=path, lineno=lineno)
        entries.append(IssueEntry(keyword, tag))
    return version, entries


def read_code_sets_file(path) -> tuple[str, dict[str, set[str]]]:
    """Code sets: `[roles]`, `[attributes]` and `[entities]` sections of 3-char codes."""
    version, lines = read_versioned_lines(path)
    sections: dict[str, set[str]] = {}
    current = None
    for lineno, line in lines:
        m = _SECTION_RE.fullmatch(line)
        if m:
            current = m.group(1).lower()
            if current not in CODE_SET_SECTIONS:
                msg = (
                    f"Unknown section [{current}], expected one of {CODE_SET_SECTIONS}."
                )
                raise PhoenixFormatError(msg, path=path, lineno=lineno)
            sections.setdefault(current, set())
            continue
        if current is None:
            msg = f"Code {line!r} outside of any section."
            raise PhoenixFormatError(msg, path=path, lineno=lineno)
        for code in re.split(r"[,\s]+", line):
            if code:
                sections[current].add(check_segment_code(code, path=path, lineno=lineno))
    return version, sections


def load_dictionaries(actor_path, verb_path, issue_path, code_sets_path=None) -> DictionarySet:
    """Load and index the coding dictionaries.

    Parameters
    ----------
    actor_path, verb_path, issue_path: str or Path
        Actor, verb and issue dictionary files.

    code_sets_path: str or Path, optional
        Role, attribute and special entity codes. Without it no role or attribute
        is known and the special entities are IMG, IGO, MNC and NGO.

    Returns
    -------
    DictionarySet whose version joins the distinct file versions with '+'.

    Raises
    ------
    PhoenixMissingFile, PhoenixFormatError, PhoenixInvalidCode

    Examples
    --------
    >>> import tempfile, pathlib
    >>> from phoenixlib.dictionaries import load_dictionaries
    >>> d = pathlib.Path(tempfile.mkdtemp())
    >>> _ = (d / "a.txt").write_text("# version: toy-1\\nISLAMIC_STATE_;IMGMOSISI\\n")
    >>> _ = (d / "v.txt").write_text("# version: toy-1\\nDENOUNCED;111\\n")
    >>> _ = (d / "i.txt").write_text("# version: toy-1\\n")
    >>> dicts = load_dictionaries(d / "a.txt", d / "v.txt", d / "i.txt")
    >>> dicts.match_actor(["Islamic", "State", "fighters"])
    ('IMGMOSISI', 2)
    >>> dicts.version
    'toy-1'
    """
    versions = []
    actor_version, actors = read_actor_file(actor_path)
    versions.append(actor_version)
    verb_version, verbs = read_verb_file(verb_path)
    versions.append(verb_version)
    issue_version, issues = read_issue_file(issue_path)
    versions.append(issue_version)
    sections: dict[str, set[str]] = {}
    if code_sets_path is not None:
        sets_version, sections = read_code_sets_file(code_sets_path)
        versions.append(sets_version)
    version = "+".join(dict.fromkeys(versions))
    dicts = DictionarySet(
        actors=actors,
        verbs=verbs,
        issues=issues,
        roles=sections.get("roles", ()),
        attributes=sections.get("attributes", ()),
        entities_special=sections.get("entities", SPECIAL_ENTITIES),
        version=version,
    )
    logger.info(
        "loaded dictionaries %s",
        dicts,
        extra={"event": "dictionaries.loaded", "version": version},
    )
    return dicts
