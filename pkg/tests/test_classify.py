from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from termtip.classify import (
    DEFAULT_TECH_PREFIXES,
    ClassifierChain,
    classify,
    stub_classify,
    taxonomy_is_tech,
)
from termtip.errors import AllProvidersFailed, LlmUnavailable, UnparseableResponse
from termtip.providers import (
    CategoryLabel,
    StubLlmProvider,
    StubTaxonomyProvider,
    parse_boolean_response,
    parse_definition_response,
)


def chain_with(labels=None, llm_answer=False, taxonomy_fail=False, llm_fail=False,
               **kwargs):
    taxonomy = StubTaxonomyProvider(labels=labels, fail=taxonomy_fail)
    llm = StubLlmProvider(boolean_answer=llm_answer, fail=llm_fail)
    return ClassifierChain(taxonomy_provider=taxonomy, llm_provider=llm, **kwargs), taxonomy, llm


# -- classify chain ----------------------------------------------------------

def test_taxonomy_tech_short_circuits_llm():
    chain, taxonomy, llm = chain_with(
        labels=[CategoryLabel("/Computers & Electronics", 0.9)])
    verdict = classify("some article text", chain)
    assert verdict.is_tech is True
    assert verdict.decided_by == "taxonomy"
    assert llm.calls == 0
    assert taxonomy.calls == 1


def test_politics_falls_back_to_llm_true():
    chain, _, llm = chain_with(labels=[CategoryLabel("/Politics", 0.8)],
                               llm_answer=True)
    verdict = classify("blockchain legislation draft", chain)
    assert verdict.is_tech is True
    assert verdict.decided_by == "llm_fallback"
    assert llm.calls == 1


def test_empty_labels_fall_back_to_llm_false():
    chain, _, _ = chain_with(labels=[], llm_answer=False)
    verdict = classify("nothing classified", chain)
    assert verdict.is_tech is False
    assert verdict.decided_by == "llm_fallback"


def test_taxonomy_failure_degrades_to_llm_only():
    chain, _, llm = chain_with(taxonomy_fail=True, llm_answer=True)
    verdict = classify("text", chain)
    assert verdict.is_tech is True
    assert verdict.decided_by == "llm_fallback"
    assert llm.calls == 1


def test_all_providers_failed():
    chain, _, _ = chain_with(taxonomy_fail=True, llm_fail=True)
    with pytest.raises(AllProvidersFailed):
        classify("text", chain)


def test_llm_failure_after_taxonomy_nontech_propagates():
    chain, _, _ = chain_with(labels=[CategoryLabel("/Politics", 0.8)], llm_fail=True)
    with pytest.raises(LlmUnavailable):
        classify("text", chain)


def test_empty_text_rejected():
    chain, _, _ = chain_with(labels=[])
    with pytest.raises(ValueError):
        classify("", chain)


def test_truncation_limits_provider_payload():
    seen = {}

    class Recording(StubTaxonomyProvider):
        def categorize(self, text):
            seen["text"] = text
            return super().categorize(text)

    chain = ClassifierChain(
        taxonomy_provider=Recording([CategoryLabel("/Computers & Electronics", 1.0)]),
        llm_provider=StubLlmProvider(),
        truncate_chars=100,
    )
    classify("x" * 5000, chain)
    assert len(seen["text"]) == 100


def test_confidence_threshold_filters_labels():
    chain, _, _ = chain_with(
        labels=[CategoryLabel("/Computers & Electronics", 0.2)],
        llm_answer=False, confidence_threshold=0.5)
    verdict = classify("text", chain)
    assert verdict.is_tech is False
    assert verdict.decided_by == "llm_fallback"


def test_prefixes_must_be_non_empty():
    with pytest.raises(ValueError):
        ClassifierChain(taxonomy_provider=StubTaxonomyProvider(),
                        llm_provider=StubLlmProvider(),
                        tech_category_prefixes=())


# -- taxonomy_is_tech ---------------------------------------------------------

def test_prefix_match_software_path():
    labels = [CategoryLabel("/Computers & Electronics/Software", 0.7)]
    assert taxonomy_is_tech(labels, DEFAULT_TECH_PREFIXES) is True


def test_empty_labels_not_tech():
    assert taxonomy_is_tech([], DEFAULT_TECH_PREFIXES) is False


def test_engineering_and_technology_prefix():
    labels = [CategoryLabel("/Science/Engineering & Technology", 0.6)]
    assert taxonomy_is_tech(labels, DEFAULT_TECH_PREFIXES) is True


def test_prefix_match_is_case_insensitive():
    labels = [CategoryLabel("/computers & electronics", 0.9)]
    assert taxonomy_is_tech(labels, DEFAULT_TECH_PREFIXES) is True


def test_non_tech_paths():
    labels = [CategoryLabel("/Food & Drink/Recipes", 0.99),
              CategoryLabel("/Politics", 0.5)]
    assert taxonomy_is_tech(labels, DEFAULT_TECH_PREFIXES) is False


_label = st.builds(
    CategoryLabel,
    path=st.text(alphabet="abC/& ", min_size=1, max_size=20),
    confidence=st.floats(min_value=0.0, max_value=1.0),
)


@given(labels=st.lists(_label, max_size=6), extra=_label)
def test_taxonomy_is_tech_monotonic(labels, extra):
    before = taxonomy_is_tech(labels, DEFAULT_TECH_PREFIXES)
    after = taxonomy_is_tech(labels + [extra], DEFAULT_TECH_PREFIXES)
    if before:
        assert after


# -- stub_classify -----------------------------------------------------------

def test_stub_three_distinct_keywords_is_tech():
    verdict = stub_classify("The CPU, the SSD, and the API all matter.")
    assert verdict.is_tech is True
    assert verdict.decided_by == "offline_stub"


def test_stub_single_keyword_not_enough():
    verdict = stub_classify("Only the CPU is mentioned here.")
    assert verdict.is_tech is False


def test_stub_empty_text():
    assert stub_classify("").is_tech is False


def test_stub_repeated_keyword_counts_once():
    verdict = stub_classify("CPU CPU CPU CPU CPU")
    assert verdict.is_tech is False


def test_stub_keywords_must_be_whole_words():
    verdict = stub_classify("SCPUs SSDs APIs")  # all embedded/plural
    assert verdict.is_tech is False


def test_stub_custom_seed_keywords():
    verdict = stub_classify("alpha beta gamma", seed_keywords={"alpha", "beta", "gamma"})
    assert verdict.is_tech is True


def test_classify_is_deterministic_with_stubs():
    chain, _, _ = chain_with(labels=[CategoryLabel("/Politics", 0.5)], llm_answer=True)
    a = classify("same text", chain)
    b = classify("same text", chain)
    assert (a.is_tech, a.decided_by) == (b.is_tech, b.decided_by)
    assert a.labels == b.labels


# -- response parsing ---------------------------------------------------------

@pytest.mark.parametrize("raw,expected", [
    ("yes", True), ("Yes.", True), ("TRUE", True), ("  true\nmore", True),
    ("no", False), ("No!", False), ("false", False), ("FALSE, because", False),
])
def test_parse_boolean_variants(raw, expected):
    assert parse_boolean_response(raw) is expected


@pytest.mark.parametrize("raw", ["", "maybe", "It is likely", "yep", "42"])
def test_parse_boolean_unparseable(raw):
    with pytest.raises(UnparseableResponse):
        parse_boolean_response(raw)


def test_parse_definition_shape():
    raw = "EXPANSION: Neural Processing Unit\nDEFINITION: A chip for AI work."
    assert parse_definition_response(raw) == ("Neural Processing Unit",
                                              "A chip for AI work.")


def test_parse_definition_decline_and_malformed():
    assert parse_definition_response("UNKNOWN") is None
    assert parse_definition_response("unknown") is None
    assert parse_definition_response("Sure! It means things.") is None
    assert parse_definition_response("EXPANSION: only half") is None
