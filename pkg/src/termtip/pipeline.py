"""End-to-end wiring of the four processing phases.

A PipelineConfig selects offline stubs (default, no credentials needed) or
live HTTP providers, and a local or remote glossary. run_pipeline executes
sanitize -> extract -> classify -> match -> resolve -> annotate, skipping
the last three when the page is not technology-related.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path

from .annotate import (
    DEFAULT_EXCLUDED_ANCESTORS,
    AnnotatedDocument,
    AnnotationPolicy,
    annotate,
)
from .classify import (
    DEFAULT_SEED_KEYWORDS,
    DEFAULT_TECH_PREFIXES,
    DEFAULT_TRUNCATE_CHARS,
    ClassifierChain,
    PageClassification,
    classify,
    stub_classify,
)
from .client import HttpGlossaryClient, LocalGlossaryClient
from .content import (
    DEFAULT_NOISE_SELECTOR_STRINGS,
    ExtractedArticle,
    SourceDocument,
    build_selectors,
    extract_main_content,
    sanitize,
)
from .errors import ConfigError
from .glossary import GlossaryStore
from .markup import MarkupTree
from .matcher import MatchSpan, TermResolver, discover_candidates, find_matches
from .providers import (
    HttpLlmProvider,
    HttpTaxonomyProvider,
    StubLlmProvider,
    StubTaxonomyProvider,
)

MODE_OFFLINE = "offline_stub"
MODE_LIVE = "live"


@dataclass
class PipelineConfig:
    provider_mode: str = MODE_OFFLINE
    store_path: str | Path | None = None
    glossary_url: str | None = None
    noise_selectors: tuple[str, ...] = DEFAULT_NOISE_SELECTOR_STRINGS
    excluded_ancestors: tuple[str, ...] = tuple(sorted(DEFAULT_EXCLUDED_ANCESTORS))
    annotate_every_occurrence: bool = True
    cache_enabled: bool = True
    truncate_chars: int = DEFAULT_TRUNCATE_CHARS
    tech_prefixes: tuple[str, ...] = DEFAULT_TECH_PREFIXES
    seed_keywords: frozenset[str] = DEFAULT_SEED_KEYWORDS
    confidence_threshold: float = 0.0
    taxonomy_endpoint: str | None = None
    llm_endpoint: str | None = None
    # offline definition table for the discovery pass; empty = decline all
    stub_definitions: dict[str, tuple[str, str]] = field(default_factory=dict)
    stub_llm_answer: bool = False

    def validate(self) -> None:
        if self.provider_mode not in (MODE_OFFLINE, MODE_LIVE):
            raise ConfigError(f"unknown provider mode {self.provider_mode!r}")
        if self.provider_mode == MODE_LIVE:
            if not (self.taxonomy_endpoint and self.llm_endpoint):
                raise ConfigError("live mode needs taxonomy and llm endpoints")
        elif self.taxonomy_endpoint or self.llm_endpoint:
            raise ConfigError("offline mode must not configure provider endpoints")
        if self.glossary_url and self.store_path:
            raise ConfigError("choose either a glossary URL or a local store path")


class PipelineEnv:
    """Concrete providers, glossary client, selectors, and policy for one run."""

    def __init__(self, config: PipelineConfig):
        config.validate()
        self.config = config
        self.selectors = build_selectors(config.noise_selectors)
        self.policy = AnnotationPolicy(
            excluded_ancestors=frozenset(config.excluded_ancestors),
            annotate_every_occurrence=config.annotate_every_occurrence,
        )
        if config.provider_mode == MODE_LIVE:
            self.llm = HttpLlmProvider(config.llm_endpoint)
            self.chain = ClassifierChain(
                taxonomy_provider=HttpTaxonomyProvider(config.taxonomy_endpoint),
                llm_provider=self.llm,
                tech_category_prefixes=config.tech_prefixes,
                confidence_threshold=config.confidence_threshold,
                truncate_chars=config.truncate_chars,
            )
        else:
            self.llm = StubLlmProvider(boolean_answer=config.stub_llm_answer,
                                       definitions=config.stub_definitions)
            self.chain = None
        self.glossary = _build_glossary_client(config)

    def classify_text(self, text: str) -> PageClassification:
        if self.chain is not None:
            return classify(text, self.chain)
        return stub_classify(text[:self.config.truncate_chars],
                             self.config.seed_keywords)

    def make_resolver(self, keep_memo: bool = False,
                      provider_only: bool = False) -> TermResolver:
        return TermResolver(self.glossary, self.llm,
                            cache_enabled=self.config.cache_enabled,
                            keep_memo=keep_memo, provider_only=provider_only)


def _build_glossary_client(config: PipelineConfig):
    if config.glossary_url:
        return HttpGlossaryClient(config.glossary_url)
    if config.store_path is not None:
        path = Path(config.store_path)
        if path.exists():
            return LocalGlossaryClient(GlossaryStore.load(path))
        store = GlossaryStore.seeded(path)
        store.save()
        return LocalGlossaryClient(store)
    return LocalGlossaryClient(GlossaryStore.seeded())


def build_env(config: PipelineConfig) -> PipelineEnv:
    return PipelineEnv(config)


@dataclass
class PipelineResult:
    classification: PageClassification
    sanitized: MarkupTree
    article: ExtractedArticle
    matches: list[MatchSpan] = field(default_factory=list)
    resolved: list = field(default_factory=list)
    annotated: AnnotatedDocument | None = None
    skipped: bool = False

    def output_tree(self) -> MarkupTree:
        return self.annotated.tree if self.annotated is not None else self.sanitized


class _NullTimer:
    @contextmanager
    def phase(self, name: str):
        yield


_NULL_TIMER = _NullTimer()


def run_pipeline(doc: SourceDocument, env: PipelineEnv, timer=None,
                 resolver: TermResolver | None = None) -> PipelineResult:
    """Execute the full pipeline on one document.

    ``timer`` (a PhaseTimer) brackets each phase plus the total; ``resolver``
    lets callers carry warm resolution state across documents.
    """
    timer = timer if timer is not None else _NULL_TIMER
    if resolver is None:
        resolver = env.make_resolver()
    with timer.phase("total"):
        with timer.phase("sanitize"):
            tree = sanitize(doc, env.selectors)
        with timer.phase("extract"):
            article = extract_main_content(tree)
        with timer.phase("classify"):
            verdict = env.classify_text(article.clean_text)
        if not verdict.is_tech:
            return PipelineResult(classification=verdict, sanitized=tree,
                                  article=article, skipped=True)
        with timer.phase("match"):
            keys = env.glossary.list_keys()
            spans = find_matches(article.clean_text, keys)
            extra_keys = discover_candidates(article.clean_text, keys)
            if extra_keys:
                spans = spans + find_matches(article.clean_text, extra_keys)
        with timer.phase("resolve"):
            resolved = resolver.resolve(spans)
        with timer.phase("annotate"):
            annotated = annotate(tree, resolved, env.policy)
    return PipelineResult(classification=verdict, sanitized=tree, article=article,
                          matches=spans, resolved=resolved, annotated=annotated)
