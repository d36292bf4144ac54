from __future__ import annotations

import pytest

from termtip.content import SourceDocument
from termtip.errors import ConfigError
from termtip.glossary import ORIGIN_AI_CACHED
from termtip.markup import concat_text
from termtip.pipeline import PipelineConfig, build_env, run_pipeline


def test_full_run_on_tech_article(tech_article_html):
    env = build_env(PipelineConfig())
    result = run_pipeline(SourceDocument("t", tech_article_html), env)
    assert result.skipped is False
    assert result.classification.is_tech is True
    assert result.annotated is not None
    assert result.annotated.total_wrapped >= 15
    serialized = result.annotated.tree.serialize()
    assert "<dfn><abbr title=" in serialized
    assert concat_text(result.annotated.tree.root) == concat_text(result.sanitized.root)


def test_non_tech_article_skips(cooking_article_html):
    env = build_env(PipelineConfig())
    result = run_pipeline(SourceDocument("c", cooking_article_html), env)
    assert result.skipped is True
    assert result.annotated is None
    assert result.output_tree() is result.sanitized


def test_discovery_definitions_cached_through_pipeline(tmp_path):
    html = ("<article><p>The CPU talks to the XQZ unit over the API bus; "
            "software polls the XQZ for results while the processor idles, "
            "and the whole exchange is invisible to the user.</p></article>")
    config = PipelineConfig(
        store_path=tmp_path / "store.jsonl",
        stub_definitions={"XQZ": ("Example Expansion", "Example definition.")},
    )
    env = build_env(config)
    result = run_pipeline(SourceDocument("t", html), env)
    sources = {t.key: t.source for t in result.resolved}
    assert sources["CPU"] == "dictionary"
    assert sources["XQZ"] == "llm"
    assert env.glossary.get_entry("XQZ").origin == ORIGIN_AI_CACHED

    again = run_pipeline(SourceDocument("t", html), env)
    sources = {t.key: t.source for t in again.resolved}
    assert sources["XQZ"] == "dictionary"


def test_cache_disabled_no_write_back(tmp_path):
    html = ("<article><p>The CPU talks to the XQZ unit over the API bus; "
            "software polls the XQZ for results while the processor idles, "
            "and the whole exchange is invisible to the user.</p></article>")
    config = PipelineConfig(
        store_path=tmp_path / "store.jsonl",
        cache_enabled=False,
        stub_definitions={"XQZ": ("Example Expansion", "Example definition.")},
    )
    env = build_env(config)
    run_pipeline(SourceDocument("t", html), env)
    from termtip.errors import NotFound
    with pytest.raises(NotFound):
        env.glossary.get_entry("XQZ")


def test_annotator_operates_on_sanitized_unextracted_tree(tech_article_html):
    # the aside/footer are stripped, but text outside the extracted article
    # that survives sanitization is still annotated
    env = build_env(PipelineConfig())
    result = run_pipeline(SourceDocument("t", tech_article_html), env)
    out = result.annotated.tree.serialize()
    assert "<aside" not in out
    assert "<footer" not in out
    assert "<h1>" in out  # article heading retained


def test_config_validation_errors():
    with pytest.raises(ConfigError):
        PipelineConfig(provider_mode="live").validate()
    with pytest.raises(ConfigError):
        PipelineConfig(taxonomy_endpoint="http://x").validate()
    with pytest.raises(ConfigError):
        PipelineConfig(provider_mode="mystery").validate()


def test_live_mode_builds_chain():
    config = PipelineConfig(provider_mode="live",
                            taxonomy_endpoint="http://127.0.0.1:9/tax",
                            llm_endpoint="http://127.0.0.1:9/llm")
    env = build_env(config)
    assert env.chain is not None
    assert env.chain.taxonomy_provider.endpoint.endswith("/tax")
