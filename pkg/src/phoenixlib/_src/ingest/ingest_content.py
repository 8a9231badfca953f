"""Main-content extraction from article pages."""

from __future__ import annotations

import re

from bs4 import BeautifulSoup, Tag

from phoenixlib._src.defaults.defaults_classes import default_settings
from phoenixlib._src.exceptions import PhoenixNoContent

JUNK_RE = re.compile(
    r"(?<![a-z])(nav|navbar|menu|breadcrumbs?|header|footer|masthead|sidebar|related|promos?|"
    r"sponsors?|sponsored|subscribe|newsletter|social|share|signin|login|cookies?|advert|"
    r"advertisement|ads?|banner|widgets?|search|comments?|trending|popular|recommend(?:ed|ations)?)"
    r"(?![a-z])",
    re.I,
)
STRIP_TAGS = ("script", "style", "noscript", "iframe", "form", "nav", "aside", "footer")
BLOCK_TAGS = ("article", "main", "section", "div", "td", "body")
MAX_LINK_DENSITY = 0.5
PARAGRAPH_BONUS = 25
JUNK_PENALTY = 0.2


def _clean_text(node) -> str:
    return " ".join(node.get_text(" ", strip=True).split())


def link_density(node: Tag) -> float:
    """Share of a node's text that sits inside links."""
    text = _clean_text(node)
    if not text:
        return 0.0
    linked = sum(len(_clean_text(a)) for a in node.find_all("a"))
    return min(1.0, linked / len(text))


def _is_junk(node: Tag) -> bool:
    names = " ".join([node.get("id") or "", *(node.get("class") or [])])
    return bool(names.strip()) and JUNK_RE.search(names) is not None


def _title(soup: BeautifulSoup) -> str:
    for key in ("og:title", "twitter:title"):
        tag = soup.find("meta", attrs={"property": key}) or soup.find("meta", attrs={"name": key})
        if tag and tag.get("content"):
            return tag["content"].strip()
    if soup.title and soup.title.string:
        return " ".join(soup.title.string.split())
    h1 = soup.find("h1")
    return _clean_text(h1) if h1 else ""


def _score(block: Tag):
    paragraphs = []
    for p in block.find_all("p", recursive=False):
        text = _clean_text(p)
        if text and not _is_junk(p) and link_density(p) < MAX_LINK_DENSITY:
            paragraphs.append(text)
    if not paragraphs:
        return 0.0, paragraphs
    length = sum(len(t) for t in paragraphs)
    score = length * (1.0 - link_density(block)) + PARAGRAPH_BONUS * len(paragraphs)
    if _is_junk(block):
        score *= JUNK_PENALTY
    return score, paragraphs


def extract_content(html, min_text=None) -> tuple[str, str]:
    """Title and main text of an article page.

    Every block element with paragraph children is a candidate. Its score grows
    with the length and number of its paragraphs and shrinks with its link
    density; paragraphs made mostly of links and blocks whose class or id looks
    like navigation or advertising are discounted. The paragraphs of the best
    block are joined by blank lines.

    Parameters
    ----------
    html: str or bytes
        Page source, tag soup tolerated.

    min_text: int, optional
        Minimum length of the main text, by default `defaults.ingest.mintext`.

    Returns
    -------
    (title, body_text)

    Raises
    ------
    PhoenixNoContent
        if no block reaches `min_text` characters.
    """
    min_text = default_settings.ingest.mintext if min_text is None else min_text
    soup = BeautifulSoup(html, "html.parser")
    title = _title(soup)
    for tag in soup.find_all(STRIP_TAGS):
        tag.decompose()
    best_score, best = 0.0, []
    for block in soup.find_all(BLOCK_TAGS):
        score, paragraphs = _score(block)
        if score > best_score:
            best_score, best = score, paragraphs
    body = "\n\n".join(best)
    if len(body) < min_text:
        msg = f"No content block with at least {min_text} characters (best had {len(body)})."
        raise PhoenixNoContent(msg)
    return title, body
