from __future__ import annotations

from pathlib import Path

import pytest

from termtip.glossary import GlossaryStore

FIXTURES = Path(__file__).parent / "fixtures"
CORPUS = FIXTURES / "corpus"


@pytest.fixture
def tech_article_html() -> str:
    return (FIXTURES / "tech_article.html").read_text(encoding="utf-8")


@pytest.fixture
def cooking_article_html() -> str:
    return (FIXTURES / "cooking_article.html").read_text(encoding="utf-8")


@pytest.fixture
def mini_two_terms_html() -> str:
    return (FIXTURES / "mini_two_terms.html").read_text(encoding="utf-8")


def corpus_files() -> list[Path]:
    return sorted(CORPUS.glob("*.html"))


@pytest.fixture
def seeded_store() -> GlossaryStore:
    return GlossaryStore.seeded()


@pytest.fixture
def small_store(tmp_path) -> GlossaryStore:
    """Three-entry store used by the ranking and precedence examples."""
    store = GlossaryStore(tmp_path / "glossary.jsonl")
    text = "\n".join([
        '{"key": "CPU", "expansion": "Central Processing Unit", "definition": "The main processor of a computer that executes program instructions.", "origin": "curated"}',
        '{"key": "API", "expansion": "Application Programming Interface", "definition": "A defined set of rules for software-to-software requests.", "origin": "curated"}',
        '{"key": "TCP", "expansion": "Transmission Control Protocol", "definition": "Core internet protocol that delivers data reliably and in order.", "origin": "curated"}',
    ])
    store._load_lines(text)
    store.save()
    return store
