"""Classification and definition providers.

A taxonomy provider maps text to hierarchical category labels; an LLM
provider answers a boolean tech-relatedness question and defines unknown
acronyms. Offline stubs are deterministic and networkless (the default);
HTTP adapters speak to real backends and are opt-in. Call counters are
lock-protected so concurrent pipelines can share a provider.
"""

from __future__ import annotations

import logging
import os
import threading
from dataclasses import dataclass

import httpx

from .errors import LlmUnavailable, TaxonomyUnavailable, UnparseableResponse

log = logging.getLogger(__name__)

DEFAULT_TIMEOUT_S = 10.0

TAXONOMY_API_KEY_VAR = "TAXONOMY_API_KEY"
LLM_API_KEY_VAR = "LLM_API_KEY"

# The boolean gate question sent verbatim to the fallback provider,
# followed by the page text.
BOOLEAN_QUESTION = "Does this text contain technology-related terms?"

DEFINITION_PROMPT_TEMPLATE = (
    "Define the acronym \"{key}\" as used in technology. Reply with two lines:\n"
    "EXPANSION: <the spelled-out form>\n"
    "DEFINITION: <one plain-language sentence>\n"
    "If it is not a real technical acronym, reply with the single word UNKNOWN."
)

_TRUE_TOKENS = {"yes", "true"}
_FALSE_TOKENS = {"no", "false"}


@dataclass(frozen=True)
class CategoryLabel:
    """One taxonomy result: slash-separated category path plus confidence."""

    path: str
    confidence: float

    def __post_init__(self):
        if not self.path:
            raise ValueError("label path must be non-empty")
        if not 0.0 <= self.confidence <= 1.0:
            raise ValueError(f"confidence {self.confidence} outside [0, 1]")


def parse_boolean_response(raw: str) -> bool:
    """Leading yes/true or no/false token, case-insensitive; anything else
    is an error rather than a guess."""
    words = raw.split()
    token = words[0].strip(".,!:;\"'").lower() if words else ""
    if token in _TRUE_TOKENS:
        return True
    if token in _FALSE_TOKENS:
        return False
    raise UnparseableResponse(f"cannot read boolean answer from {raw!r}")


def parse_definition_response(raw: str) -> tuple[str, str] | None:
    """EXPANSION:/DEFINITION: line pair, or None when the provider declines.

    Responses that do not fit the shape count as declines: the rejection
    contract is provider-defined and a malformed answer must not become a
    tooltip.
    """
    stripped = raw.strip()
    if not stripped or stripped.upper() == "UNKNOWN":
        return None
    expansion = definition = None
    for line in stripped.splitlines():
        line = line.strip()
        if line.upper().startswith("EXPANSION:"):
            expansion = line[len("EXPANSION:"):].strip()
        elif line.upper().startswith("DEFINITION:"):
            definition = line[len("DEFINITION:"):].strip()
    if expansion and definition:
        return expansion, definition
    log.warning("definition response did not parse, treating as decline: %r", raw[:80])
    return None


class _Counted:
    """Mixin providing an atomic invocation counter."""

    def __init__(self) -> None:
        self._count_lock = threading.Lock()
        self._calls = 0

    def _count(self) -> None:
        with self._count_lock:
            self._calls += 1

    @property
    def calls(self) -> int:
        with self._count_lock:
            return self._calls


class LlmProviderBase(_Counted):
    """Prompt building and answer parsing shared by every LLM backend."""

    def complete(self, prompt: str) -> str:
        raise NotImplementedError

    def answer_boolean(self, text: str) -> bool:
        prompt = f"{BOOLEAN_QUESTION}\n\n{text}"
        return parse_boolean_response(self.complete(prompt))

    def define(self, key: str) -> tuple[str, str] | None:
        prompt = DEFINITION_PROMPT_TEMPLATE.format(key=key)
        return parse_definition_response(self.complete(prompt))


class StubTaxonomyProvider(_Counted):
    """Returns a fixed label list; optionally fails to exercise degradation."""

    def __init__(self, labels: list[CategoryLabel] | None = None, fail: bool = False):
        super().__init__()
        self.labels = labels if labels is not None else []
        self.fail = fail

    def categorize(self, text: str) -> list[CategoryLabel]:
        self._count()
        if self.fail:
            raise TaxonomyUnavailable("stub taxonomy configured to fail")
        return list(self.labels)


class StubLlmProvider(LlmProviderBase):
    """Deterministic offline LLM: canned boolean answer plus a definition table.

    Keys absent from the table are declined with UNKNOWN, mirroring a
    provider that rejects non-acronyms.
    """

    def __init__(self, boolean_answer: bool = False,
                 definitions: dict[str, tuple[str, str]] | None = None,
                 fail: bool = False):
        super().__init__()
        self.boolean_answer = boolean_answer
        self.definitions = {k.lower(): v for k, v in (definitions or {}).items()}
        self.fail = fail

    def complete(self, prompt: str) -> str:
        self._count()
        if self.fail:
            raise LlmUnavailable("stub LLM configured to fail")
        if prompt.startswith(BOOLEAN_QUESTION):
            return "yes" if self.boolean_answer else "no"
        key = _definition_prompt_key(prompt)
        if key is not None:
            hit = self.definitions.get(key.lower())
            if hit is None:
                return "UNKNOWN"
            expansion, definition = hit
            return f"EXPANSION: {expansion}\nDEFINITION: {definition}"
        return "UNKNOWN"


def _definition_prompt_key(prompt: str) -> str | None:
    marker = 'Define the acronym "'
    if not prompt.startswith(marker):
        return None
    end = prompt.find('"', len(marker))
    return prompt[len(marker):end] if end > 0 else None


class HttpTaxonomyProvider(_Counted):
    """Adapter for a category-classification HTTP service.

    Request:  POST {endpoint} with {"document": {"type": "PLAIN_TEXT",
              "content": <text>}} and a bearer token from TAXONOMY_API_KEY.
    Response: {"categories": [{"name": "/Computers & Electronics",
              "confidence": 0.93}, ...]}
    """

    def __init__(self, endpoint: str, api_key: str | None = None,
                 timeout: float = DEFAULT_TIMEOUT_S,
                 client: httpx.Client | None = None):
        super().__init__()
        self.endpoint = endpoint
        self.api_key = api_key if api_key is not None else os.environ.get(TAXONOMY_API_KEY_VAR, "")
        self.timeout = timeout
        self._client = client or httpx.Client(timeout=timeout)

    def categorize(self, text: str) -> list[CategoryLabel]:
        self._count()
        try:
            response = self._client.post(
                self.endpoint,
                json={"document": {"type": "PLAIN_TEXT", "content": text}},
                headers={"Authorization": f"Bearer {self.api_key}"},
            )
            response.raise_for_status()
            payload = response.json()
        except httpx.HTTPError as exc:
            raise TaxonomyUnavailable(f"taxonomy request failed: {exc}") from exc
        try:
            return [CategoryLabel(c["name"], float(c.get("confidence", 1.0)))
                    for c in payload.get("categories", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise TaxonomyUnavailable(f"malformed taxonomy response: {exc}") from exc


class HttpLlmProvider(LlmProviderBase):
    """Adapter for a chat-completions style HTTP service.

    Request:  POST {endpoint} with {"model": <model>, "messages":
              [{"role": "user", "content": <prompt>}]} and a bearer token
              from LLM_API_KEY.
    Response: {"choices": [{"message": {"content": <answer>}}]}
    """

    def __init__(self, endpoint: str, api_key: str | None = None,
                 model: str = "default", timeout: float = DEFAULT_TIMEOUT_S,
                 client: httpx.Client | None = None):
        super().__init__()
        self.endpoint = endpoint
        self.api_key = api_key if api_key is not None else os.environ.get(LLM_API_KEY_VAR, "")
        self.model = model
        self.timeout = timeout
        self._client = client or httpx.Client(timeout=timeout)

    def complete(self, prompt: str) -> str:
        self._count()
        try:
            response = self._client.post(
                self.endpoint,
                json={"model": self.model,
                      "messages": [{"role": "user", "content": prompt}]},
                headers={"Authorization": f"Bearer {self.api_key}"},
            )
            response.raise_for_status()
            payload = response.json()
            return payload["choices"][0]["message"]["content"]
        except httpx.HTTPError as exc:
            raise LlmUnavailable(f"LLM request failed: {exc}") from exc
        except (KeyError, IndexError, TypeError) as exc:
            raise LlmUnavailable(f"malformed LLM response: {exc}") from exc
