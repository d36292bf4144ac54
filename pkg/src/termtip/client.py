"""Glossary access for the pipeline: direct store calls or the HTTP API.

Both clients expose the same surface (list_keys, get_entry, search,
upsert_cached, submit_contribution, approve_contribution) so the resolver
does not care where the dictionary lives.
"""

from __future__ import annotations

import httpx

from .errors import ConflictCurated, GlossaryUnreachable, NotFound, ValidationFailed
from .glossary import GlossaryEntry, GlossaryStore


class LocalGlossaryClient:
    """In-process client over a GlossaryStore."""

    def __init__(self, store: GlossaryStore):
        self.store = store

    def list_keys(self) -> list[str]:
        return self.store.list_keys()

    def get_entry(self, key: str) -> GlossaryEntry:
        return self.store.get_entry(key)

    def search(self, query: str, limit: int = 20) -> list[GlossaryEntry]:
        return self.store.search(query, limit)

    def upsert_cached(self, entry: GlossaryEntry) -> GlossaryEntry:
        return self.store.upsert_cached(entry)

    def submit_contribution(self, entry: GlossaryEntry) -> int:
        return self.store.submit_contribution(entry)

    def approve_contribution(self, pending_id: int) -> GlossaryEntry:
        return self.store.approve_contribution(pending_id)


def _entry_from_json(record: dict) -> GlossaryEntry:
    return GlossaryEntry(
        key=record["key"],
        expansion=record["expansion"],
        definition=record["definition"],
        origin=record["origin"],
    )


class HttpGlossaryClient:
    """Client for the glossary HTTP/JSON API.

    Transport failures raise GlossaryUnreachable (fatal for resolution).
    """

    def __init__(self, base_url: str, client: httpx.Client | None = None,
                 timeout: float = 10.0):
        self.base_url = base_url.rstrip("/")
        self._client = client or httpx.Client(timeout=timeout)

    def _request(self, method: str, path: str, **kwargs) -> httpx.Response:
        try:
            return self._client.request(method, f"{self.base_url}{path}", **kwargs)
        except httpx.HTTPError as exc:
            raise GlossaryUnreachable(f"glossary service at {self.base_url}: {exc}") from exc

    def list_keys(self) -> list[str]:
        response = self._request("GET", "/terms")
        self._check(response)
        return list(response.json()["keys"])

    def get_entry(self, key: str) -> GlossaryEntry:
        response = self._request("GET", f"/terms/{key}")
        if response.status_code == 404:
            raise NotFound(f"no entry for {key!r}")
        self._check(response)
        return _entry_from_json(response.json())

    def search(self, query: str, limit: int = 20) -> list[GlossaryEntry]:
        response = self._request("GET", "/search",
                                 params={"q": query, "limit": limit})
        self._check(response)
        return [_entry_from_json(r) for r in response.json()["results"]]

    def upsert_cached(self, entry: GlossaryEntry) -> GlossaryEntry:
        response = self._request("POST", "/cache", json=entry.to_json())
        if response.status_code == 409:
            raise ConflictCurated(self._message(response))
        if response.status_code == 400:
            raise ValidationFailed(self._message(response))
        self._check(response)
        return _entry_from_json(response.json())

    def submit_contribution(self, entry: GlossaryEntry) -> int:
        response = self._request("POST", "/contributions", json=entry.to_json())
        if response.status_code == 400:
            raise ValidationFailed(self._message(response))
        self._check(response)
        return int(response.json()["id"])

    def approve_contribution(self, pending_id: int) -> GlossaryEntry:
        response = self._request("POST", f"/contributions/{pending_id}/approve")
        if response.status_code == 404:
            raise NotFound(f"no pending contribution {pending_id}")
        self._check(response)
        return _entry_from_json(response.json())

    @staticmethod
    def _message(response: httpx.Response) -> str:
        try:
            body = response.json()
            return f"{body.get('error', 'error')}: {body.get('message', '')}"
        except ValueError:
            return response.text

    def _check(self, response: httpx.Response) -> None:
        if response.status_code >= 400:
            raise GlossaryUnreachable(
                f"glossary service error {response.status_code}: {self._message(response)}")
