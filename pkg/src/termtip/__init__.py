"""Acronym tooltip engine.

Takes raw web-page HTML, decides whether the page is technology-related,
detects technical acronyms, and rewrites the page with hover-tooltip
definition markup; backed by a glossary store/service and a timing
harness.
"""

from .annotate import AnnotatedDocument, AnnotationPolicy, annotate, strip_annotations
from .classify import (
    ClassifierChain,
    PageClassification,
    classify,
    stub_classify,
    taxonomy_is_tech,
)
from .content import (
    ExtractedArticle,
    SourceDocument,
    extract_main_content,
    normalize_whitespace,
    sanitize,
)
from .glossary import GlossaryEntry, GlossaryStore
from .markup import MarkupTree, parse_html
from .matcher import (
    MatchSpan,
    ResolvedTerm,
    TermResolver,
    discover_candidates,
    find_matches,
    resolve,
)
from .pipeline import PipelineConfig, build_env, run_pipeline
from .providers import CategoryLabel, StubLlmProvider, StubTaxonomyProvider

__version__ = "0.1.0"

__all__ = [
    "AnnotatedDocument",
    "AnnotationPolicy",
    "CategoryLabel",
    "ClassifierChain",
    "ExtractedArticle",
    "GlossaryEntry",
    "GlossaryStore",
    "MarkupTree",
    "MatchSpan",
    "PageClassification",
    "PipelineConfig",
    "ResolvedTerm",
    "SourceDocument",
    "StubLlmProvider",
    "StubTaxonomyProvider",
    "TermResolver",
    "annotate",
    "build_env",
    "classify",
    "discover_candidates",
    "extract_main_content",
    "find_matches",
    "normalize_whitespace",
    "parse_html",
    "resolve",
    "run_pipeline",
    "sanitize",
    "strip_annotations",
    "stub_classify",
    "taxonomy_is_tech",
]
