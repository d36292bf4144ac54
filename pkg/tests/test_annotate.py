from __future__ import annotations

import pytest

from termtip.annotate import (
    DEFAULT_EXCLUDED_ANCESTORS,
    AnnotationPolicy,
    annotate,
    strip_annotations,
)
from termtip.markup import concat_text, parse_html
from termtip.matcher import ResolvedTerm

from conftest import corpus_files

CPU = ResolvedTerm(key="CPU", expansion="Central Processing Unit",
                   definition="The main processor of a computer.",
                   source="dictionary")
SSD = ResolvedTerm(key="SSD", expansion="Solid State Drive",
                   definition="Flash-based storage device.",
                   source="dictionary")
GPU = ResolvedTerm(key="GPU", expansion="Graphics Processing Unit",
                   definition="Renders images and parallel workloads.",
                   source="dictionary")

ALL_TERMS = [CPU, SSD, GPU]


def test_basic_wrap_exact_markup():
    tree = parse_html("<p>The CPU is fast.</p>")
    result = annotate(tree, [CPU])
    expected = ('<p>The <dfn><abbr title="Central Processing Unit '
                '— The main processor of a computer.">CPU</abbr></dfn>'
                ' is fast.</p>')
    assert result.tree.serialize() == expected
    assert result.annotations == [("CPU", 1)]


def test_anchor_content_not_annotated():
    html = '<a href="/CPU">CPU guide</a>'
    tree = parse_html(html)
    result = annotate(tree, [CPU])
    assert result.tree.serialize() == html
    assert result.annotations == []


def test_attribute_values_never_touched():
    html = '<img title="CPU">'
    tree = parse_html(html)
    result = annotate(tree, [CPU])
    assert result.tree.serialize() == html


def test_every_occurrence_wrapped_by_default():
    tree = parse_html("<p>CPU here, CPU there, CPU everywhere.</p>")
    result = annotate(tree, [CPU])
    assert result.annotations == [("CPU", 3)]
    assert result.tree.serialize().count("<dfn>") == 3


def test_first_occurrence_only_policy():
    policy = AnnotationPolicy(annotate_every_occurrence=False)
    tree = parse_html("<p>CPU first.</p><p>CPU second. SSD first.</p>")
    result = annotate(tree, [CPU, SSD], policy)
    assert result.annotations == [("CPU", 1), ("SSD", 1)]
    assert result.tree.serialize().count("<dfn>") == 2


def test_mixed_case_surface_preserved():
    tree = parse_html("<p>a cpu and a Cpu</p>")
    result = annotate(tree, [CPU])
    out = result.tree.serialize()
    assert ">cpu</abbr>" in out
    assert ">Cpu</abbr>" in out


def test_excluded_code_and_pre():
    html = "<pre>CPU raw</pre><code>CPU code</code><p>CPU prose</p>"
    result = annotate(parse_html(html), [CPU])
    assert result.annotations == [("CPU", 1)]
    assert "<pre>CPU raw</pre>" in result.tree.serialize()


def test_policy_always_protects_wrapper_tags():
    policy = AnnotationPolicy(excluded_ancestors=frozenset())
    assert "dfn" in policy.excluded_ancestors
    assert "abbr" in policy.excluded_ancestors


def test_input_tree_not_mutated():
    tree = parse_html("<p>The CPU is fast.</p>")
    before = tree.serialize()
    annotate(tree, [CPU])
    assert tree.serialize() == before


def test_no_terms_is_noop():
    tree = parse_html("<p>Nothing to wrap.</p>")
    result = annotate(tree, [])
    assert result.tree == tree
    assert result.annotations == []


def test_annotation_count_order_is_first_wrap_order():
    tree = parse_html("<p>SSD before CPU, then SSD again.</p>")
    result = annotate(tree, [CPU, SSD])
    assert result.annotations == [("SSD", 2), ("CPU", 1)]


def test_title_attribute_escaping_round_trips():
    tricky = ResolvedTerm(key="XQ", expansion='Quotes "&" Angles <>',
                          definition="Definition & more.", source="llm")
    tree = parse_html("<p>An XQ term.</p>")
    result = annotate(tree, [tricky])
    serialized = result.tree.serialize()
    assert "&quot;" in serialized and "&amp;" in serialized
    reparsed = parse_html(serialized)
    assert reparsed == result.tree


def test_match_cannot_span_inline_element_boundary():
    tree = parse_html("<p>C<b>PU</b> split</p>")
    result = annotate(tree, [CPU])
    assert result.annotations == []


def test_text_preservation_simple():
    tree = parse_html("<div><p>The CPU and the SSD.</p><p>GPU too.</p></div>")
    result = annotate(tree, ALL_TERMS)
    assert concat_text(result.tree.root) == concat_text(tree.root)


def test_idempotence_second_pass_adds_nothing():
    tree = parse_html("<p>The CPU and the SSD and the GPU.</p>")
    once = annotate(tree, ALL_TERMS)
    twice = annotate(once.tree, ALL_TERMS)
    assert twice.annotations == []
    assert twice.tree == once.tree


def test_strip_inverts_annotate():
    tree = parse_html("<div><p>The CPU is fast.</p><p>An SSD helps.</p></div>")
    stripped = strip_annotations(annotate(tree, ALL_TERMS).tree)
    assert stripped == tree


def test_strip_no_annotations_is_identity():
    tree = parse_html("<p>plain text</p>")
    assert strip_annotations(tree) == tree


def test_strip_hand_built_double_wrap():
    html = ('<p>x <dfn><abbr title="outer"><dfn><abbr title="inner">CPU'
            '</abbr></dfn></abbr></dfn> y</p>')
    stripped = strip_annotations(parse_html(html))
    assert stripped.serialize() == "<p>x CPU y</p>"


def test_strip_leaves_foreign_dfn_alone():
    html = "<p>a <dfn>definition term</dfn> b</p>"
    stripped = strip_annotations(parse_html(html))
    assert stripped.serialize() == html


def test_locality_untouched_branches_equal():
    tree = parse_html("<div><p>no match here</p><p>the CPU branch</p></div>")
    result = annotate(tree, [CPU])
    assert result.tree.root.children[0].children[0] == tree.root.children[0].children[0]


@pytest.mark.parametrize("path", corpus_files(), ids=lambda p: p.name)
def test_corpus_text_preservation_and_round_trip(path):
    tree = parse_html(path.read_text(encoding="utf-8"))
    result = annotate(tree, ALL_TERMS)
    assert concat_text(result.tree.root) == concat_text(tree.root)
    stripped = strip_annotations(result.tree)
    assert concat_text(stripped.root) == concat_text(tree.root)
    second = annotate(result.tree, ALL_TERMS)
    assert second.annotations == []


def test_output_reparses_to_equivalent_tree():
    tree = parse_html("<p>The CPU &amp; the SSD.</p>")
    result = annotate(tree, ALL_TERMS)
    assert parse_html(result.tree.serialize()) == result.tree


def test_default_exclusions_contain_anchor_and_form_fields():
    for tag in ("a", "script", "style", "abbr", "dfn", "code", "pre",
                "textarea", "input", "button"):
        assert tag in DEFAULT_EXCLUDED_ANCESTORS
