"""
Gazetteer lookup of place mentions and selection of a story's focus location.
"""

from __future__ import annotations

import logging
import re
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from phoenixlib._src.dictionaries.dict_trie import PatternTrie
from phoenixlib._src.exceptions import PhoenixFormatError, PhoenixMissingFile

logger = logging.getLogger(__name__)

_WORD_RE = re.compile(r"\w+(?:['.-]\w+)*")
GAZETTEER_COLUMNS = ("name", "country", "admin1", "lat", "lon", "population")


@dataclass(frozen=True)
class GazetteerEntry:
    name: str
    country: str
    admin1: str
    lat: float
    lon: float
    population: int


@dataclass(frozen=True)
class GeoResult:
    lat: float
    lon: float
    location_name: str
    country_name: str
    state_name: str


class _CountryName(str):
    """marks a gazetteer key that names a country"""


class Gazetteer:
    """Place names indexed for token-sequence lookup.

    Country names found in the entries' `country` column are indexed too, so
    that mentions of countries can steer the disambiguation of place names.
    A country is a focus candidate itself only through a row of its own, with
    the country as name and an empty admin1, as GeoNames ships them.
    """

    def __init__(self, entries=(), version=""):
        self._entries = tuple(entries)
        self._version = version
        self._trie = PatternTrie(normalize=str.lower)
        for entry in self._entries:
            self._trie.insert(entry.name.split(), entry)
        for country in dict.fromkeys(e.country for e in self._entries):
            self._trie.insert(country.split(), _CountryName(country))

    @property
    def version(self) -> str:
        return self._version

    def __len__(self):
        return len(self._entries)

    def __repr__(self):
        return f"Gazetteer(version={self._version!r}, places={len(self._entries)})"

    def candidates(self, name: str) -> list[GazetteerEntry]:
        return [v for v in self._trie.get(name.split()) if isinstance(v, GazetteerEntry)]

    def mentions(self, text: str) -> list[tuple[str, list]]:
        """(surface name, gazetteer values) of the capitalized place mentions in `text`.

        Scanning is left to right with longest match; matched tokens are consumed.
        A possessive 's is not part of the name.
        """
        tokens = [tok.removesuffix("'s") for tok in _WORD_RE.findall(text)]
        found = []
        i = 0
        while i < len(tokens):
            if tokens[i][:1].isupper():
                hits = self._trie.prefixes(tokens[i:])
                if hits:
                    length, values = hits[-1]
                    found.append((" ".join(tokens[i : i + length]), values))
                    i += length
                    continue
            i += 1
        return found


def load_gazetteer(path) -> Gazetteer:
    """Read a gazetteer TSV with the columns name, country, admin1, lat, lon, population.

    '#' lines are comments, a `# version:` comment sets the version. A first
    row equal to the column names is skipped.
    """
    path = Path(path)
    if not path.is_file():
        msg = f"Gazetteer file {str(path)!r} does not exist."
        raise PhoenixMissingFile(msg)
    entries = []
    version = ""
    with path.open(encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.rstrip("\n")
            if not line.strip():
                continue
            if line.startswith("#"):
                m = re.match(r"#\s*version\s*:\s*(\S.*?)\s*$", line)
                if m:
                    version = m.group(1)
                continue
            parts = [p.strip() for p in line.split("\t")]
            if tuple(p.lower() for p in parts) == GAZETTEER_COLUMNS:
                continue
            if len(parts) != len(GAZETTEER_COLUMNS) or not parts[0] or not parts[1]:
                msg = f"Expected the tab separated columns {GAZETTEER_COLUMNS}.\nInstead received {line!r}."
                raise PhoenixFormatError(msg, path=path, lineno=lineno)
            try:
                lat, lon = float(parts[3]), float(parts[4])
                population = int(parts[5]) if parts[5] else 0
            except ValueError as err:
                msg = f"Non-numeric coordinates or population in {line!r}."
                raise PhoenixFormatError(msg, path=path, lineno=lineno) from err
            if not (-90 <= lat <= 90 and -180 <= lon <= 180):
                msg = f"Coordinates ({lat}, {lon}) out of range."
                raise PhoenixFormatError(msg, path=path, lineno=lineno)
            entries.append(GazetteerEntry(parts[0], parts[1], parts[2], lat, lon, population))
    return Gazetteer(entries, version)


def geolocate(doc, gazetteer: Gazetteer) -> GeoResult | None:
    """Focus location of a story.

    Place names are the capitalized token sequences of the story text that the
    gazetteer knows. An ambiguous name resolves to the candidate in the country
    the story mentions most, then to the most populous one. The focus is the
    place name mentioned most often, ties going to the earliest first mention.
    Countries compete as places when the gazetteer has rows for them, so a
    statement made in one place about a country mentioned more often is
    located in that country, even though such statements arguably have no
    location at all.

    Parameters
    ----------
    doc: StoryDocument
        Story whose title and body are searched.

    gazetteer: Gazetteer

    Returns
    -------
    GeoResult or None if no place is mentioned.
    """
    mentions = gazetteer.mentions(doc.text)
    if not mentions:
        return None
    country_counts: Counter = Counter()
    name_counts: Counter = Counter()
    first_seen: dict[str, int] = {}
    places: dict[str, list[GazetteerEntry]] = {}
    for pos, (surface, values) in enumerate(mentions):
        key = surface.lower()
        for val in values:
            if isinstance(val, _CountryName):
                country_counts[str(val)] += 1
        entries = [v for v in values if isinstance(v, GazetteerEntry)]
        if entries:
            name_counts[key] += 1
            first_seen.setdefault(key, pos)
            places[key] = entries
    if not name_counts:
        return None
    focus = min(name_counts, key=lambda k: (-name_counts[k], first_seen[k]))
    candidates = places[focus]
    best = max(
        enumerate(candidates),
        key=lambda ic: (country_counts[ic[1].country], ic[1].population, -ic[0]),
    )[1]
    logger.debug(
        "located story at %s, %s",
        best.name,
        best.country,
        extra={"event": "enrich.geolocate", "candidates": len(candidates)},
    )
    return GeoResult(
        lat=best.lat,
        lon=best.lon,
        location_name=best.name,
        country_name=best.country,
        state_name=best.admin1 or best.country,
    )
