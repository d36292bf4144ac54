"""Tooltip markup injection: wrap matched acronyms in <dfn><abbr title="...">.

Only text nodes are rewritten; attribute values and text under excluded
ancestors (anchors, code blocks, existing wrappers, ...) are never touched,
so annotation preserves the document's concatenated text exactly and a
second pass finds nothing new to wrap.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .markup import Element, MarkupTree, TextNode
from .matcher import ResolvedTerm, find_matches

WRAPPER_OUTER_TAG = "dfn"
WRAPPER_INNER_TAG = "abbr"

DEFAULT_EXCLUDED_ANCESTORS = frozenset({
    "a", "script", "style", "abbr", "dfn", "code", "pre",
    "textarea", "input", "button",
})


@dataclass
class AnnotationPolicy:
    excluded_ancestors: frozenset[str] = DEFAULT_EXCLUDED_ANCESTORS
    annotate_every_occurrence: bool = True

    def __post_init__(self):
        # the wrapper's own tags are always excluded: wrappers never nest
        self.excluded_ancestors = frozenset(self.excluded_ancestors) | {
            WRAPPER_OUTER_TAG, WRAPPER_INNER_TAG}


@dataclass
class AnnotatedDocument:
    tree: MarkupTree
    annotations: list[tuple[str, int]] = field(default_factory=list)

    @property
    def total_wrapped(self) -> int:
        return sum(count for _, count in self.annotations)


class _Annotator:
    def __init__(self, terms: list[ResolvedTerm], policy: AnnotationPolicy):
        self.policy = policy
        self.by_key = {t.key.lower(): t for t in terms}
        self.keys = [t.key for t in terms]
        self.counts: dict[str, int] = {}
        self.order: list[str] = []

    def run(self, element: Element) -> None:
        if element.tag in self.policy.excluded_ancestors:
            return
        rewritten: list = []
        for child in element.children:
            if isinstance(child, TextNode):
                rewritten.extend(self._wrap_text(child))
            else:
                if isinstance(child, Element):
                    self.run(child)
                rewritten.append(child)
        element.children = rewritten

    def _wrap_text(self, node: TextNode) -> list:
        matches = find_matches(node.text, self.keys)
        if not self.policy.annotate_every_occurrence:
            matches = [m for m in matches if m.key not in self.counts]
            seen_here: set[str] = set()
            deduped = []
            for m in matches:
                if m.key not in seen_here:
                    seen_here.add(m.key)
                    deduped.append(m)
            matches = deduped
        if not matches:
            return [node]
        text = node.text
        segments: list = []
        pos = 0
        for m in matches:
            if m.start > pos:
                segments.append(TextNode(text[pos:m.start]))
            term = self.by_key[m.key.lower()]
            abbr = Element(WRAPPER_INNER_TAG, {"title": term.title_text()},
                           [TextNode(m.surface)])
            segments.append(Element(WRAPPER_OUTER_TAG, {}, [abbr]))
            if m.key not in self.counts:
                self.order.append(m.key)
            self.counts[m.key] = self.counts.get(m.key, 0) + 1
            pos = m.end
        if pos < len(text):
            segments.append(TextNode(text[pos:]))
        return segments


def annotate(tree: MarkupTree, terms: list[ResolvedTerm],
             policy: AnnotationPolicy | None = None) -> AnnotatedDocument:
    """Wrap every whole-word occurrence of each term's key in tooltip markup.

    The input tree is not mutated. The title attribute carries
    "EXPANSION <em-dash> DEFINITION". No matches is a valid no-op.
    """
    if policy is None:
        policy = AnnotationPolicy()
    out = tree.clone()
    worker = _Annotator(terms, policy)
    worker.run(out.root)
    annotations = [(key, worker.counts[key]) for key in worker.order]
    return AnnotatedDocument(tree=out, annotations=annotations)


def strip_annotations(tree: MarkupTree) -> MarkupTree:
    """Replace each dfn.abbr wrapper pair with its inner content.

    Inverse of annotate for round-trip checks: the result's text equals the
    pre-annotation text, and adjacent text fragments are re-merged so the
    structure matches too.
    """
    out = tree.clone()
    _unwrap(out.root)
    return out


def _is_wrapper(node) -> bool:
    return (isinstance(node, Element) and node.tag == WRAPPER_OUTER_TAG
            and len(node.children) == 1
            and isinstance(node.children[0], Element)
            and node.children[0].tag == WRAPPER_INNER_TAG)


def _unwrap(element: Element) -> None:
    flattened: list = []
    for child in element.children:
        if isinstance(child, Element):
            _unwrap(child)
        if _is_wrapper(child):
            flattened.extend(child.children[0].children)
        else:
            flattened.append(child)
    element.children = _merge_text(flattened)


def _merge_text(children: list) -> list:
    merged: list = []
    for node in children:
        if (isinstance(node, TextNode) and merged
                and isinstance(merged[-1], TextNode)):
            merged[-1] = TextNode(merged[-1].text + node.text)
        else:
            merged.append(node)
    return merged
