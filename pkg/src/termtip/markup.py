"""Tolerant HTML parsing into a mutable markup tree, plus stable serialization.

The tree is deliberately small: elements carry a tag, an insertion-ordered
attribute map, and children; text, comments, and doctype declarations are
leaf nodes. Parsing repairs malformed input the way browsers do (stray end
tags ignored, unclosed tags auto-closed), serialization preserves attribute
order and escapes only what standard HTML attribute/text encoding requires,
so parse(serialize(tree)) reproduces an equal tree.
"""

from __future__ import annotations

from html.parser import HTMLParser

from .errors import ParseFailure

ROOT_TAG = "#root"

VOID_ELEMENTS = frozenset({
    "area", "base", "br", "col", "embed", "hr", "img", "input",
    "link", "meta", "param", "source", "track", "wbr",
})

RAW_TEXT_ELEMENTS = frozenset({"script", "style"})

# Start tags that implicitly close an open <p>, per browser tree building.
_P_CLOSERS = frozenset({
    "address", "article", "aside", "blockquote", "details", "div", "dl",
    "fieldset", "figcaption", "figure", "footer", "form", "h1", "h2", "h3",
    "h4", "h5", "h6", "header", "hgroup", "hr", "main", "menu", "nav", "ol",
    "p", "pre", "section", "table", "ul",
})

# current open tag -> set of incoming start tags that auto-close it
_AUTO_CLOSE = {
    "p": _P_CLOSERS,
    "li": frozenset({"li"}),
    "dt": frozenset({"dt", "dd"}),
    "dd": frozenset({"dt", "dd"}),
    "tr": frozenset({"tr"}),
    "td": frozenset({"td", "th", "tr"}),
    "th": frozenset({"td", "th", "tr"}),
    "option": frozenset({"option", "optgroup"}),
}


class TextNode:
    """Leaf node holding character data."""

    __slots__ = ("text",)

    def __init__(self, text: str):
        self.text = text

    def clone(self) -> "TextNode":
        return TextNode(self.text)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TextNode) and self.text == other.text

    def __repr__(self) -> str:
        return f"TextNode({self.text!r})"


class Comment:
    __slots__ = ("text",)

    def __init__(self, text: str):
        self.text = text

    def clone(self) -> "Comment":
        return Comment(self.text)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Comment) and self.text == other.text

    def __repr__(self) -> str:
        return f"Comment({self.text!r})"


class Doctype:
    __slots__ = ("text",)

    def __init__(self, text: str):
        self.text = text

    def clone(self) -> "Doctype":
        return Doctype(self.text)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Doctype) and self.text == other.text

    def __repr__(self) -> str:
        return f"Doctype({self.text!r})"


class Element:
    """Element node: lowercase tag, ordered attribute map, child list."""

    __slots__ = ("tag", "attrs", "children")

    def __init__(self, tag: str, attrs: dict[str, str | None] | None = None,
                 children: list | None = None):
        self.tag = tag
        self.attrs = attrs if attrs is not None else {}
        self.children = children if children is not None else []

    def clone(self) -> "Element":
        return Element(self.tag, dict(self.attrs),
                       [child.clone() for child in self.children])

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Element)
                and self.tag == other.tag
                and self.attrs == other.attrs
                and self.children == other.children)

    def __repr__(self) -> str:
        return f"Element({self.tag!r}, attrs={self.attrs!r}, children={len(self.children)})"


Node = TextNode | Comment | Doctype | Element


class MarkupTree:
    """A parsed document: a synthetic root element holding top-level nodes."""

    __slots__ = ("root",)

    def __init__(self, root: Element | None = None):
        self.root = root if root is not None else Element(ROOT_TAG)

    def clone(self) -> "MarkupTree":
        return MarkupTree(self.root.clone())

    def text(self) -> str:
        return concat_text(self.root)

    def serialize(self) -> str:
        return "".join(_serialize_node(child, raw=False) for child in self.root.children)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MarkupTree) and self.root == other.root

    def __repr__(self) -> str:
        return f"MarkupTree({len(self.root.children)} top-level nodes)"


class _TreeBuilder(HTMLParser):
    """Streams tokenizer events into a tree, repairing bad nesting."""

    def __init__(self) -> None:
        super().__init__(convert_charrefs=True)
        self.root = Element(ROOT_TAG)
        self._stack: list[Element] = [self.root]

    def _top(self) -> Element:
        return self._stack[-1]

    def _append(self, node: Node) -> None:
        self._top().children.append(node)

    def _append_text(self, data: str) -> None:
        if not data:
            return
        siblings = self._top().children
        if siblings and isinstance(siblings[-1], TextNode):
            siblings[-1].text += data
        else:
            siblings.append(TextNode(data))

    @staticmethod
    def _make_attrs(attrs: list[tuple[str, str | None]]) -> dict[str, str | None]:
        out: dict[str, str | None] = {}
        for name, value in attrs:
            if name not in out:  # first declaration wins, as in browsers
                out[name] = value
        return out

    def handle_starttag(self, tag: str, attrs: list[tuple[str, str | None]]) -> None:
        while len(self._stack) > 1:
            closers = _AUTO_CLOSE.get(self._top().tag)
            if closers and tag in closers:
                self._stack.pop()
            else:
                break
        element = Element(tag, self._make_attrs(attrs))
        self._append(element)
        if tag not in VOID_ELEMENTS:
            self._stack.append(element)

    def handle_startendtag(self, tag: str, attrs: list[tuple[str, str | None]]) -> None:
        self._append(Element(tag, self._make_attrs(attrs)))

    def handle_endtag(self, tag: str) -> None:
        if tag in VOID_ELEMENTS:
            return
        for i in range(len(self._stack) - 1, 0, -1):
            if self._stack[i].tag == tag:
                del self._stack[i:]
                return
        # stray end tag: ignore

    def handle_data(self, data: str) -> None:
        self._append_text(data)

    def handle_comment(self, data: str) -> None:
        self._append(Comment(data))

    def handle_decl(self, decl: str) -> None:
        self._append(Doctype(decl))

    def unknown_decl(self, data: str) -> None:
        self._append(Comment(data))


def parse_html(html: str) -> MarkupTree:
    """Parse possibly malformed HTML into a MarkupTree.

    Raises ParseFailure for empty/whitespace-only input or unrecoverable
    tokenizer errors.
    """
    if not html or not html.strip():
        raise ParseFailure("input is empty or whitespace-only")
    builder = _TreeBuilder()
    try:
        builder.feed(html)
        builder.close()
    except Exception as exc:  # pragma: no cover - tokenizer almost never raises
        raise ParseFailure(f"markup not recoverable: {exc}") from exc
    return MarkupTree(builder.root)


def escape_text(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def escape_attribute(value: str) -> str:
    return (value.replace("&", "&amp;").replace('"', "&quot;")
            .replace("<", "&lt;").replace(">", "&gt;"))


def _serialize_node(node: Node, raw: bool) -> str:
    if isinstance(node, TextNode):
        return node.text if raw else escape_text(node.text)
    if isinstance(node, Comment):
        return f"<!--{node.text}-->"
    if isinstance(node, Doctype):
        return f"<!{node.text}>"
    parts = [f"<{node.tag}"]
    for name, value in node.attrs.items():
        if value is None:
            parts.append(f" {name}")
        else:
            parts.append(f' {name}="{escape_attribute(value)}"')
    parts.append(">")
    if node.tag in VOID_ELEMENTS:
        return "".join(parts)
    inner_raw = node.tag in RAW_TEXT_ELEMENTS
    for child in node.children:
        parts.append(_serialize_node(child, raw=inner_raw))
    parts.append(f"</{node.tag}>")
    return "".join(parts)


def serialize(tree: MarkupTree) -> str:
    return tree.serialize()


def concat_text(node: Node) -> str:
    """Concatenated character data of all text nodes under ``node``, in order."""
    if isinstance(node, TextNode):
        return node.text
    if isinstance(node, Element):
        return "".join(concat_text(child) for child in node.children)
    return ""


def iter_nodes(node: Node):
    """Pre-order traversal of ``node`` and everything beneath it."""
    yield node
    if isinstance(node, Element):
        for child in node.children:
            yield from iter_nodes(child)


def iter_elements(tree: MarkupTree):
    for node in iter_nodes(tree.root):
        if isinstance(node, Element) and node.tag != ROOT_TAG:
            yield node


class Selector:
    """One noise selector: plain tag name, ``.substr`` against class, or
    ``#substr`` against id. Class/id matching is case-insensitive substring
    containment over the raw attribute value."""

    __slots__ = ("kind", "value", "source")

    def __init__(self, kind: str, value: str, source: str):
        self.kind = kind
        self.value = value
        self.source = source

    def matches(self, element: Element) -> bool:
        if self.kind == "tag":
            return element.tag == self.value
        attr = "class" if self.kind == "class" else "id"
        raw = element.attrs.get(attr)
        return raw is not None and self.value in raw.lower()

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Selector)
                and (self.kind, self.value) == (other.kind, other.value))

    def __repr__(self) -> str:
        return f"Selector({self.source!r})"


def parse_selector(text: str) -> Selector:
    """Parse a selector string; raises ValueError outside the supported grammar."""
    text = text.strip()
    if not text:
        raise ValueError("empty selector")
    if text.startswith("."):
        body, kind = text[1:], "class"
    elif text.startswith("#"):
        body, kind = text[1:], "id"
    else:
        body, kind = text, "tag"
    if not body or any(ch.isspace() for ch in body):
        raise ValueError(f"unsupported selector: {text!r}")
    return Selector(kind, body.lower(), text)
