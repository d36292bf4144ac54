"""Acronym dictionary: keyed entry store with JSONL persistence.

Active entries are unique per key (case-insensitive, first-seen casing
kept). Pending contributions live in a separate id-keyed queue so a
correction for an existing key can wait for approval without colliding
with the live entry; they are invisible to list/lookup/search until
approved. Writes are serialized and persisted atomically before being
acknowledged.
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path

from .errors import ConflictCurated, NotFound, StoreUnavailable, ValidationFailed

ORIGIN_CURATED = "curated"
ORIGIN_AI_CACHED = "ai_cached"
ORIGIN_PENDING = "pending_contribution"

_ORIGINS = (ORIGIN_CURATED, ORIGIN_AI_CACHED, ORIGIN_PENDING)

SEED_RESOURCE = "seed_glossary.jsonl"


@dataclass(frozen=True)
class GlossaryEntry:
    key: str
    expansion: str
    definition: str
    origin: str

    def to_json(self, pending_id: int | None = None) -> dict:
        record = {
            "key": self.key,
            "expansion": self.expansion,
            "definition": self.definition,
            "origin": self.origin,
        }
        if pending_id is not None:
            record["id"] = pending_id
        return record


def _validate_entry(entry: GlossaryEntry) -> None:
    if not entry.key or not entry.key.strip():
        raise ValidationFailed("key must be non-empty")
    if not entry.expansion or not entry.expansion.strip():
        raise ValidationFailed("expansion must be non-empty")
    if not entry.definition or not entry.definition.strip():
        raise ValidationFailed("definition must be non-empty")
    if entry.origin not in _ORIGINS:
        raise ValidationFailed(f"unknown origin {entry.origin!r}")


class GlossaryStore:
    """In-memory entry map with optional JSONL file persistence."""

    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path is not None else None
        self._active: dict[str, GlossaryEntry] = {}
        self._pending: dict[int, GlossaryEntry] = {}
        self._next_id = 1
        self._lock = threading.RLock()

    # -- construction ----------------------------------------------------

    @classmethod
    def load(cls, path: str | Path) -> "GlossaryStore":
        store = cls(path)
        try:
            raw = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise StoreUnavailable(f"cannot read store at {path}: {exc}") from exc
        store._load_lines(raw)
        return store

    @classmethod
    def from_text(cls, text: str, path: str | Path | None = None) -> "GlossaryStore":
        store = cls(path)
        store._load_lines(text)
        return store

    @classmethod
    def seeded(cls, path: str | Path | None = None) -> "GlossaryStore":
        """A store pre-populated with the bundled curated dictionary."""
        text = resources.files("termtip").joinpath(
            "data", SEED_RESOURCE).read_text("utf-8")
        return cls.from_text(text, path)

    def _load_lines(self, raw: str) -> None:
        for lineno, line in enumerate(raw.splitlines(), start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
                entry = GlossaryEntry(
                    key=record["key"],
                    expansion=record["expansion"],
                    definition=record["definition"],
                    origin=record["origin"],
                )
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise StoreUnavailable(f"bad store line {lineno}: {exc}") from exc
            if entry.origin == ORIGIN_PENDING:
                pending_id = int(record.get("id", self._next_id))
                self._pending[pending_id] = entry
                self._next_id = max(self._next_id, pending_id + 1)
            else:
                self._active[entry.key.lower()] = entry

    # -- persistence -----------------------------------------------------

    def save(self) -> None:
        """Write all entries as sorted JSONL, atomically (tmp + rename)."""
        if self.path is None:
            return
        with self._lock:
            lines = [json.dumps(e.to_json(), ensure_ascii=False)
                     for e in self._sorted_active()]
            lines += [json.dumps(e.to_json(pending_id=pid), ensure_ascii=False)
                      for pid, e in sorted(self._pending.items())]
        payload = "\n".join(lines) + ("\n" if lines else "")
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=str(self.path.parent), suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(payload)
            os.replace(tmp, self.path)
        except OSError:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def _sorted_active(self) -> list[GlossaryEntry]:
        return sorted(self._active.values(), key=lambda e: e.key.lower())

    # -- read operations ---------------------------------------------------

    def list_keys(self) -> list[str]:
        """All non-pending keys, case-insensitively ascending. Keys only."""
        with self._lock:
            return [e.key for e in self._sorted_active()]

    def get_entry(self, key: str) -> GlossaryEntry:
        with self._lock:
            entry = self._active.get(key.lower())
        if entry is None:
            raise NotFound(f"no entry for {key!r}")
        return entry

    def search(self, query: str, limit: int = 20) -> list[GlossaryEntry]:
        """Substring search over key, expansion, and definition.

        Key-prefix matches rank first, then key-substring, then matches in
        the other fields; ties break by key. An empty query returns the
        first ``limit`` entries in key order.
        """
        if limit < 1:
            raise ValueError("limit must be >= 1")
        with self._lock:
            entries = self._sorted_active()
        if not query:
            return entries[:limit]
        needle = query.lower()
        ranked = []
        for entry in entries:
            key = entry.key.lower()
            if key.startswith(needle):
                rank = 0
            elif needle in key:
                rank = 1
            elif needle in entry.expansion.lower() or needle in entry.definition.lower():
                rank = 2
            else:
                continue
            ranked.append((rank, key, entry))
        ranked.sort(key=lambda r: (r[0], r[1]))
        return [entry for _, _, entry in ranked[:limit]]

    # -- write operations --------------------------------------------------

    def upsert_cached(self, entry: GlossaryEntry) -> GlossaryEntry:
        """Insert or replace an AI-cached definition; curated entries win.

        Persists before returning. Existing casing of the key is kept.
        """
        if entry.origin != ORIGIN_AI_CACHED:
            raise ValueError("upsert_cached requires origin ai_cached")
        _validate_entry(entry)
        with self._lock:
            current = self._active.get(entry.key.lower())
            if current is not None:
                if current.origin == ORIGIN_CURATED:
                    raise ConflictCurated(f"{current.key!r} is curated; not overwritten")
                entry = replace(entry, key=current.key)
            self._active[entry.key.lower()] = entry
            self.save()
        return entry

    def submit_contribution(self, entry: GlossaryEntry) -> int:
        """Queue a suggested/corrected definition; returns its pending id."""
        entry = replace(entry, origin=ORIGIN_PENDING)
        _validate_entry(entry)
        with self._lock:
            pending_id = self._next_id
            self._next_id += 1
            self._pending[pending_id] = entry
            self.save()
        return pending_id

    def approve_contribution(self, pending_id: int) -> GlossaryEntry:
        """Promote a queued contribution to a curated entry (overwrite = the
        correction path)."""
        with self._lock:
            entry = self._pending.get(pending_id)
            if entry is None:
                raise NotFound(f"no pending contribution {pending_id}")
            approved = replace(entry, origin=ORIGIN_CURATED)
            current = self._active.get(approved.key.lower())
            if current is not None:
                approved = replace(approved, key=current.key)
            del self._pending[pending_id]
            self._active[approved.key.lower()] = approved
            self.save()
        return approved

    # -- equality / introspection ------------------------------------------

    def entry_set(self) -> frozenset:
        with self._lock:
            return frozenset(self._active.values()) | frozenset(
                (pid, e) for pid, e in self._pending.items())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GlossaryStore) and self.entry_set() == other.entry_set()

    def __len__(self) -> int:
        with self._lock:
            return len(self._active)
