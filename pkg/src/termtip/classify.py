"""Tech-relatedness gate: taxonomy provider first, boolean LLM fallback second.

The taxonomy verdict short-circuits the chain: when any returned category
path starts with a tech prefix, the fallback provider is never invoked.
Offline mode uses a keyword stub instead of the chain.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AllProvidersFailed, ProviderFailure
from .matcher import has_whole_word
from .providers import CategoryLabel

DECIDED_TAXONOMY = "taxonomy"
DECIDED_LLM_FALLBACK = "llm_fallback"
DECIDED_OFFLINE_STUB = "offline_stub"

DEFAULT_TECH_PREFIXES = (
    "/Computers & Electronics",
    "/Internet & Telecom",
    "/Science/Engineering & Technology",
    "/Science/Computer Science",
)

# Payload control: providers see at most this many characters.
DEFAULT_TRUNCATE_CHARS = 5000

# Whole-word keyword vocabulary for the offline stub verdict.
DEFAULT_SEED_KEYWORDS = frozenset({
    "CPU", "GPU", "RAM", "SSD", "API", "HTTP", "HTTPS", "USB", "HTML",
    "WIFI", "VPN", "SQL", "JSON", "DNS", "LAN", "URL", "PDF", "BIOS",
    "software", "hardware", "internet", "browser", "server", "network",
    "processor", "computer", "laptop", "smartphone", "app", "database",
    "digital", "chip", "bluetooth", "download", "upload", "website",
    "email", "encryption", "firmware", "algorithm", "bandwidth",
})

STUB_KEYWORD_THRESHOLD = 3


@dataclass
class PageClassification:
    labels: list[CategoryLabel]
    is_tech: bool
    decided_by: str  # taxonomy | llm_fallback | offline_stub


@dataclass
class ClassifierChain:
    """Provider pair plus the prefix set that defines "technology-related"."""

    taxonomy_provider: object
    llm_provider: object
    tech_category_prefixes: tuple[str, ...] = DEFAULT_TECH_PREFIXES
    confidence_threshold: float = 0.0
    truncate_chars: int = DEFAULT_TRUNCATE_CHARS

    def __post_init__(self):
        if not self.tech_category_prefixes:
            raise ValueError("tech_category_prefixes must be non-empty")


def taxonomy_is_tech(labels, prefixes) -> bool:
    """True iff some label path starts, case-insensitively, with a prefix."""
    folded = tuple(p.lower() for p in prefixes)
    return any(label.path.lower().startswith(folded) for label in labels)


def classify(text: str, chain: ClassifierChain) -> PageClassification:
    """Run the dual-layer gate on ``text``.

    Taxonomy labels matching a tech prefix decide immediately (the LLM is
    not invoked). Otherwise the boolean fallback answers. A failed taxonomy
    degrades to LLM-only; when both providers fail, AllProvidersFailed.
    """
    if not text:
        raise ValueError("classification needs non-empty text")
    snippet = text[:chain.truncate_chars]

    labels: list[CategoryLabel] | None = None
    taxonomy_error: ProviderFailure | None = None
    try:
        labels = chain.taxonomy_provider.categorize(snippet)
    except ProviderFailure as exc:
        taxonomy_error = exc

    accepted: list[CategoryLabel] = []
    if labels is not None:
        accepted = [l for l in labels if l.confidence >= chain.confidence_threshold]
        if taxonomy_is_tech(accepted, chain.tech_category_prefixes):
            return PageClassification(labels=accepted, is_tech=True,
                                      decided_by=DECIDED_TAXONOMY)

    try:
        answer = chain.llm_provider.answer_boolean(snippet)
    except ProviderFailure as exc:
        if taxonomy_error is not None:
            raise AllProvidersFailed(
                f"taxonomy: {taxonomy_error}; llm: {exc}") from exc
        raise
    return PageClassification(labels=accepted, is_tech=answer,
                              decided_by=DECIDED_LLM_FALLBACK)


def stub_classify(text: str, seed_keywords=None) -> PageClassification:
    """Offline verdict: tech iff at least 3 distinct seed keywords occur as
    whole words. Deterministic and networkless."""
    seeds = seed_keywords if seed_keywords is not None else DEFAULT_SEED_KEYWORDS
    hits = 0
    if text:
        seen: set[str] = set()
        for keyword in seeds:
            folded = keyword.lower()
            if folded not in seen and has_whole_word(text, keyword):
                seen.add(folded)
                hits += 1
                if hits >= STUB_KEYWORD_THRESHOLD:
                    break
    return PageClassification(labels=[], is_tech=hits >= STUB_KEYWORD_THRESHOLD,
                              decided_by=DECIDED_OFFLINE_STUB)
