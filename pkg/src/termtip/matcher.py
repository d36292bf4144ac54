"""Acronym detection and definition resolution.

Matching applies an independent case-insensitive word-boundary pattern per
dictionary key (keys escaped literally, so "C++" is safe), collects every
occurrence including overlapping ones, and reduces overlaps with a
longest-match-then-leftmost rule. Resolution takes the dictionary first,
falls back to the definition provider for unknown keys, and writes provider
results back to the glossary when caching is enabled.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass

from .errors import NotFound, ProviderFailure
from .glossary import GlossaryEntry, ORIGIN_AI_CACHED

log = logging.getLogger(__name__)

# Candidate acronym shape: 2-6 uppercase letters/digits with at least 2 letters.
_CANDIDATE_RE = re.compile(r"(?<!\w)[A-Z0-9]{2,6}(?!\w)")

SOURCE_DICTIONARY = "dictionary"
SOURCE_LLM = "llm"
SOURCE_CACHE = "cache"


@dataclass(frozen=True)
class MatchSpan:
    """One whole-word occurrence: canonical key plus [start, end) offsets."""

    key: str
    start: int
    end: int
    surface: str


@dataclass(frozen=True)
class ResolvedTerm:
    key: str
    expansion: str
    definition: str
    source: str  # dictionary | llm | cache

    def title_text(self) -> str:
        return f"{self.expansion} — {self.definition}"


def dedupe_keys(keys) -> list[str]:
    """Drop case-insensitive duplicates, keeping first-seen casing."""
    seen: set[str] = set()
    out: list[str] = []
    for key in keys:
        folded = key.lower()
        if key and folded not in seen:
            seen.add(folded)
            out.append(key)
    return out


def _key_pattern(key: str) -> re.Pattern[str]:
    return re.compile(rf"(?<!\w){re.escape(key)}(?!\w)", re.IGNORECASE)


def has_whole_word(text: str, token: str) -> bool:
    """Case-insensitive whole-word containment under the match boundary rule."""
    return bool(token) and _key_pattern(token).search(text) is not None


def _is_word_char(ch: str) -> bool:
    return ch.isalnum() or ch == "_"


def _regex_candidates(text: str, key: str) -> list[MatchSpan]:
    # step by one char after each hit so overlapping occurrences of the
    # same key are all collected (finditer would skip them)
    pattern = _key_pattern(key)
    out = []
    pos = 0
    while (m := pattern.search(text, pos)) is not None:
        out.append(MatchSpan(key=key, start=m.start(), end=m.end(), surface=m.group()))
        pos = m.start() + 1
    return out


def _candidates_for_key(text: str, folded_text: str | None, key: str) -> list[MatchSpan]:
    """All boundary-valid occurrences of one key, overlaps included.

    Scans with str.find over case-folded text (much faster than a
    lookbehind pattern); keys whose lowercase form changes length fall
    back to the regex scan.
    """
    folded_key = key.lower()
    if folded_text is None or len(folded_key) != len(key):
        return _regex_candidates(text, key)
    out = []
    width = len(folded_key)
    pos = 0
    while (start := folded_text.find(folded_key, pos)) != -1:
        end = start + width
        if ((start == 0 or not _is_word_char(text[start - 1]))
                and (end >= len(text) or not _is_word_char(text[end]))):
            out.append(MatchSpan(key=key, start=start, end=end,
                                 surface=text[start:end]))
        pos = start + 1
    return out


def find_matches(text: str, keys) -> list[MatchSpan]:
    """All non-overlapping whole-word occurrences of the keys in ``text``.

    A neighbor character is a boundary iff it is not alphanumeric and not
    an underscore. Overlaps resolve longest-match first, then leftmost.
    Result is sorted by start offset.
    """
    if not text:
        return []
    folded_text = text.lower()
    if len(folded_text) != len(text):  # offset-shifting fold: regex path
        folded_text = None
    candidates: list[MatchSpan] = []
    for key in dedupe_keys(keys):
        candidates.extend(_candidates_for_key(text, folded_text, key))
    candidates.sort(key=lambda s: (s.start - s.end, s.start))
    chosen: list[MatchSpan] = []
    for cand in candidates:
        if all(cand.end <= c.start or cand.start >= c.end for c in chosen):
            chosen.append(cand)
    chosen.sort(key=lambda s: s.start)
    return chosen


def discover_candidates(text: str, known) -> list[str]:
    """Unknown tokens shaped like acronyms, in first-occurrence order.

    Shape: 2-6 chars, uppercase letters/digits only, at least 2 letters,
    whole word. These are what the definition provider is asked about,
    which bounds the payload.
    """
    known_folded = {k.lower() for k in known}
    seen: set[str] = set()
    out: list[str] = []
    for m in _CANDIDATE_RE.finditer(text):
        token = m.group()
        if sum(ch.isalpha() for ch in token) < 2:
            continue
        folded = token.lower()
        if folded in known_folded or folded in seen:
            continue
        seen.add(folded)
        out.append(token)
    return out


class TermResolver:
    """Resolves match keys to definitions, optionally keeping a warm memo.

    The memo makes repeated resolution across documents (bench --warm)
    serve previously resolved keys with source "cache" instead of hitting
    the glossary or the provider again.
    """

    def __init__(self, glossary, llm=None, cache_enabled: bool = True,
                 keep_memo: bool = False, provider_only: bool = False):
        self.glossary = glossary
        self.llm = llm
        self.cache_enabled = cache_enabled
        self.keep_memo = keep_memo
        self.provider_only = provider_only  # benchmark the provider path alone
        self._memo: dict[str, ResolvedTerm] = {}

    def resolve(self, matches: list[MatchSpan]) -> list[ResolvedTerm]:
        resolved: list[ResolvedTerm] = []
        for key in dedupe_keys(m.key for m in matches):
            term = self._resolve_key(key)
            if term is not None:
                resolved.append(term)
        return resolved

    def _resolve_key(self, key: str) -> ResolvedTerm | None:
        folded = key.lower()
        if self.keep_memo and folded in self._memo:
            hit = self._memo[folded]
            return ResolvedTerm(hit.key, hit.expansion, hit.definition, SOURCE_CACHE)
        term = None if self.provider_only else self._from_glossary(key)
        if term is None:
            term = self._from_provider(key)
        if term is not None and self.keep_memo:
            self._memo[folded] = term
        return term

    def _from_glossary(self, key: str) -> ResolvedTerm | None:
        try:
            entry = self.glossary.get_entry(key)
        except NotFound:
            return None
        return ResolvedTerm(entry.key, entry.expansion, entry.definition,
                            SOURCE_DICTIONARY)

    def _from_provider(self, key: str) -> ResolvedTerm | None:
        if self.llm is None:
            log.warning("no definition provider; %r left unresolved", key)
            return None
        try:
            answer = self.llm.define(key)
        except ProviderFailure as exc:
            log.warning("definition provider unavailable for %r: %s", key, exc)
            return None
        if answer is None:  # provider declined: not a real acronym
            return None
        expansion, definition = answer
        if self.cache_enabled:
            self.glossary.upsert_cached(GlossaryEntry(
                key=key, expansion=expansion, definition=definition,
                origin=ORIGIN_AI_CACHED,
            ))
        return ResolvedTerm(key, expansion, definition, SOURCE_LLM)


def resolve(matches: list[MatchSpan], glossary, llm=None,
            cache_enabled: bool = True) -> list[ResolvedTerm]:
    """One-shot resolution of deduplicated match keys.

    Glossary hits come back with source "dictionary"; unknown keys go to
    the definition provider and, when ``cache_enabled``, are written back
    to the glossary so the next resolution takes the dictionary path.
    Provider failures are non-fatal: those keys are skipped with a warning.
    Glossary transport failures (GlossaryUnreachable) propagate.
    """
    return TermResolver(glossary, llm, cache_enabled).resolve(matches)
