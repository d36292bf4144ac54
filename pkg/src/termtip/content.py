"""Document sanitization, main-content extraction, and whitespace normalization.

This is the first pipeline stage: strip noise elements (navigation, banners,
script/style), pick the best content subtree by a deterministic text/link
density score, and collapse its text into a single-spaced string.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyDocument, NoContent
from .markup import (
    Element,
    MarkupTree,
    ROOT_TAG,
    Selector,
    TextNode,
    concat_text,
    parse_html,
    parse_selector,
)

# Concrete rendering of the noise categories (headers, footers, cookie
# banners, navigation menus, sidebars); overridable via config.
DEFAULT_NOISE_SELECTOR_STRINGS = (
    "header", "footer", "nav", "aside", "script", "style", "noscript",
    "form", "iframe",
    ".cookie", ".banner", ".sidebar", ".menu", ".nav", ".footer",
    ".header", ".ad-",
    "#cookie", "#banner", "#sidebar", "#menu", "#nav", "#footer",
    "#header", "#ad-",
)

# Elements considered as content candidates during extraction.
CANDIDATE_TAGS = frozenset({
    "div", "article", "section", "main", "body", "td", "li",
    "blockquote", "p", "pre",
})

# Candidates with less normalized text than this are ineligible.
MIN_CANDIDATE_TEXT = 25

PARAGRAPH_BONUS = 25


@dataclass
class SourceDocument:
    """Raw page markup plus an informational locator (URL or file path)."""

    locator: str
    html: str


@dataclass
class ExtractedArticle:
    """The chosen content subtree and its normalized text."""

    body: MarkupTree
    clean_text: str


def default_noise_selectors() -> list[Selector]:
    return [parse_selector(s) for s in DEFAULT_NOISE_SELECTOR_STRINGS]


def build_selectors(strings) -> list[Selector]:
    """Parse selector strings, rejecting anything outside the grammar."""
    selectors = [parse_selector(s) for s in strings]
    if not selectors:
        raise ValueError("selector list must be non-empty")
    return selectors


def normalize_whitespace(text: str) -> str:
    """Collapse every maximal run of Unicode whitespace (U+00A0 included)
    to one space and trim the ends."""
    return " ".join(text.split())


def sanitize(doc: SourceDocument, selectors: list[Selector] | None = None) -> MarkupTree:
    """Parse ``doc.html`` and drop every element matching a selector.

    Script and style elements are always removed. Surviving nodes keep
    their document order. Raises ParseFailure for unrecoverable input and
    EmptyDocument when nothing but whitespace survives.
    """
    if selectors is None:
        selectors = default_noise_selectors()
    tree = parse_html(doc.html)
    _strip(tree.root, selectors)
    if _is_empty(tree):
        raise EmptyDocument(f"nothing left after stripping noise from {doc.locator!r}")
    return tree


def _matches_noise(element: Element, selectors: list[Selector]) -> bool:
    if element.tag in ("script", "style"):
        return True
    return any(sel.matches(element) for sel in selectors)


def _strip(element: Element, selectors: list[Selector]) -> None:
    kept = []
    for child in element.children:
        if isinstance(child, Element):
            if _matches_noise(child, selectors):
                continue
            _strip(child, selectors)
        kept.append(child)
    element.children = kept


def _is_empty(tree: MarkupTree) -> bool:
    has_element = any(isinstance(n, Element) and n.tag != ROOT_TAG
                      for n in _walk(tree.root))
    return not has_element and not normalize_whitespace(tree.text())


def _walk(node):
    yield node
    if isinstance(node, Element):
        for child in node.children:
            yield from _walk(child)


def _anchor_text_length(element: Element) -> int:
    """Normalized character count inside descendant anchors, counting each
    region once even if anchors are (malformed) nested."""
    total = 0
    for child in element.children:
        if isinstance(child, Element):
            if child.tag == "a":
                total += len(normalize_whitespace(concat_text(child)))
            else:
                total += _anchor_text_length(child)
    return total


def _paragraph_count(element: Element) -> int:
    count = 1 if element.tag == "p" else 0
    for child in element.children:
        if isinstance(child, Element):
            count += _paragraph_count(child)
    return count


def score_candidate(element: Element) -> float:
    """text_length * (1 - link_density) + 25 per contained paragraph."""
    text_length = len(normalize_whitespace(concat_text(element)))
    if text_length == 0:
        return 0.0
    link_density = _anchor_text_length(element) / text_length
    return text_length * (1.0 - link_density) + PARAGRAPH_BONUS * _paragraph_count(element)


def extract_main_content(tree: MarkupTree) -> ExtractedArticle:
    """Pick the highest-scoring block-level subtree and normalize its text.

    Ties break toward the earliest candidate in document order. The synthetic
    root is a last-resort candidate so element-free documents (plain text)
    still extract. Raises NoContent when nothing reaches the minimum text
    threshold.
    """
    candidates = [node for node in _walk(tree.root)
                  if isinstance(node, Element) and node.tag in CANDIDATE_TAGS]
    eligible = [
        el for el in candidates
        if len(normalize_whitespace(concat_text(el))) >= MIN_CANDIDATE_TEXT
    ]
    if not eligible:
        root_text = normalize_whitespace(tree.text())
        if not candidates and len(root_text) >= MIN_CANDIDATE_TEXT:
            eligible = [tree.root]
        else:
            raise NoContent("no candidate above the minimum-text threshold")
    best = max(eligible, key=score_candidate)  # max() keeps the earliest on ties
    if best is tree.root:
        body = tree.clone()
    else:
        body = MarkupTree(Element(ROOT_TAG, children=[best.clone()]))
    return ExtractedArticle(body=body, clean_text=normalize_whitespace(concat_text(best)))
