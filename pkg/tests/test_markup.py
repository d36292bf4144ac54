from __future__ import annotations

import pytest

from termtip.errors import ParseFailure
from termtip.markup import (
    Comment,
    Doctype,
    Element,
    MarkupTree,
    TextNode,
    concat_text,
    iter_elements,
    parse_html,
    parse_selector,
)

from conftest import corpus_files


def test_parse_simple_structure():
    tree = parse_html("<div><p>hello</p><p>world</p></div>")
    div = tree.root.children[0]
    assert div.tag == "div"
    assert [c.tag for c in div.children] == ["p", "p"]
    assert concat_text(tree.root) == "helloworld"


def test_parse_empty_raises():
    with pytest.raises(ParseFailure):
        parse_html("")
    with pytest.raises(ParseFailure):
        parse_html("   \n\t ")


def test_attributes_preserved_in_order():
    tree = parse_html('<a href="/x" class="btn" data-id="7">go</a>')
    a = tree.root.children[0]
    assert list(a.attrs.items()) == [("href", "/x"), ("class", "btn"), ("data-id", "7")]
    assert tree.serialize() == '<a href="/x" class="btn" data-id="7">go</a>'


def test_bare_attribute_round_trip():
    html = '<input type="checkbox" checked>'
    tree = parse_html(html)
    assert tree.root.children[0].attrs == {"type": "checkbox", "checked": None}
    assert tree.serialize() == html


def test_entities_unescaped_then_reescaped():
    tree = parse_html("<p>a &amp; b &lt; c</p>")
    assert concat_text(tree.root) == "a & b < c"
    assert tree.serialize() == "<p>a &amp; b &lt; c</p>"


def test_attribute_value_escaping():
    tree = parse_html('<p title="a &quot;b&quot; &amp; c">x</p>')
    assert tree.root.children[0].attrs["title"] == 'a "b" & c'
    reparsed = parse_html(tree.serialize())
    assert reparsed == tree


def test_unclosed_tags_are_auto_closed():
    tree = parse_html("<div><p>one<p>two<ul><li>a<li>b</ul>")
    div = tree.root.children[0]
    tags = [c.tag for c in div.children]
    assert tags == ["p", "p", "ul"]
    ul = div.children[2]
    assert [li.tag for li in ul.children] == ["li", "li"]
    assert concat_text(ul) == "ab"


def test_stray_end_tag_ignored():
    tree = parse_html("<p>text</b> more</p>")
    assert concat_text(tree.root) == "text more"


def test_void_elements_have_no_children():
    tree = parse_html("<p>a<br>b<img src=x>c</p>")
    p = tree.root.children[0]
    kinds = [getattr(c, "tag", "#text") for c in p.children]
    assert kinds == ["#text", "br", "#text", "img", "#text"]
    assert tree.serialize() == '<p>a<br>b<img src="x">c</p>'


def test_script_content_kept_raw():
    html = "<script>if (a < b && c > d) { go(); }</script>"
    tree = parse_html(html)
    assert tree.serialize() == html


def test_comment_and_doctype_survive():
    html = "<!DOCTYPE html><!-- note --><p>x</p>"
    tree = parse_html(html)
    assert isinstance(tree.root.children[0], Doctype)
    assert isinstance(tree.root.children[1], Comment)
    assert tree.serialize() == html


def test_tag_names_lowercased():
    tree = parse_html("<DIV><P>x</P></DIV>")
    assert tree.root.children[0].tag == "div"
    assert tree.serialize() == "<div><p>x</p></div>"


def test_clone_is_deep_and_equal():
    tree = parse_html('<div a="1"><p>x</p></div>')
    twin = tree.clone()
    assert twin == tree
    twin.root.children[0].children[0].children[0].text = "y"
    assert twin != tree


@pytest.mark.parametrize("path", corpus_files(), ids=lambda p: p.name)
def test_corpus_parse_serialize_fixpoint(path):
    # serialization normalizes the source once; after that it is stable
    first = parse_html(path.read_text(encoding="utf-8"))
    second = parse_html(first.serialize())
    assert second == first
    assert second.serialize() == first.serialize()


def test_selector_grammar():
    assert parse_selector("nav").kind == "tag"
    assert parse_selector(".cookie").kind == "class"
    assert parse_selector("#banner").kind == "id"
    for bad in ("", ".", "#", "div p", ".a b"):
        with pytest.raises(ValueError):
            parse_selector(bad)


def test_selector_matching_is_substring_and_case_insensitive():
    el = Element("div", {"class": "CookieConsent banner-top", "id": "SideBar"})
    assert parse_selector(".cookie").matches(el)
    assert parse_selector(".banner").matches(el)
    assert parse_selector("#sidebar").matches(el)
    assert not parse_selector(".footer").matches(el)
    assert parse_selector("div").matches(el)
    assert not parse_selector("nav").matches(el)


def test_selector_ignores_missing_attributes():
    el = Element("p")
    assert not parse_selector(".cookie").matches(el)
    assert not parse_selector("#nav").matches(el)


def test_iter_elements_skips_synthetic_root():
    tree = parse_html("<div><p>x</p></div>")
    assert [e.tag for e in iter_elements(tree)] == ["div", "p"]


def test_text_node_merging_on_parse():
    # entity in the middle must not split the text node
    tree = parse_html("<p>a&amp;b</p>")
    p = tree.root.children[0]
    assert len(p.children) == 1
    assert isinstance(p.children[0], TextNode)
    assert p.children[0].text == "a&b"
