"""HTTP/JSON API over a glossary store.

Endpoints:
    GET  /terms                        -> {"keys": [...]}        (keys only)
    GET  /terms/{key}                  -> entry object | 404
    GET  /search?q=&limit=             -> {"results": [...]}
    POST /cache                        -> 201 entry | 409 | 400
    POST /contributions                -> 202 {"id": n} | 400
    POST /contributions/{id}/approve   -> 200 entry | 404
    POST /classify {"text": ...}       -> {"is_tech": bool, "decided_by": ...}

Errors are {"error": code, "message": text}. The classify endpoint exists
so browser clients never hold provider credentials; by default it proxies
the offline keyword stub.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .classify import stub_classify
from .errors import ConflictCurated, NotFound, ValidationFailed
from .glossary import ORIGIN_AI_CACHED, GlossaryEntry, GlossaryStore


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status,
                        content={"error": code, "message": message})


def _entry_payload(entry: GlossaryEntry) -> dict:
    return entry.to_json()


def create_app(store: GlossaryStore, classifier=None) -> FastAPI:
    """Build the service over ``store``. ``classifier`` maps text to a
    PageClassification; defaults to the offline stub."""
    classify_text = classifier if classifier is not None else stub_classify
    app = FastAPI(title="glossary service", docs_url=None, redoc_url=None)

    @app.get("/terms")
    def list_terms():
        return {"keys": store.list_keys()}

    @app.get("/terms/{key}")
    def get_term(key: str):
        try:
            return _entry_payload(store.get_entry(key))
        except NotFound as exc:
            return _error(404, "not_found", str(exc))

    @app.get("/search")
    def search_terms(q: str = "", limit: int = 20):
        if limit < 1:
            return _error(400, "bad_request", "limit must be >= 1")
        return {"results": [_entry_payload(e) for e in store.search(q, limit)]}

    @app.post("/cache")
    async def cache_definition(request: Request):
        record = await request.json()
        try:
            entry = GlossaryEntry(
                key=record.get("key", ""),
                expansion=record.get("expansion", ""),
                definition=record.get("definition", ""),
                origin=record.get("origin", ORIGIN_AI_CACHED),
            )
            if entry.origin != ORIGIN_AI_CACHED:
                return _error(400, "validation_failed",
                              "cache writes must have origin ai_cached")
            stored = store.upsert_cached(entry)
        except ConflictCurated as exc:
            return _error(409, "conflict_curated", str(exc))
        except (ValidationFailed, ValueError) as exc:
            return _error(400, "validation_failed", str(exc))
        return JSONResponse(status_code=201, content=_entry_payload(stored))

    @app.post("/contributions")
    async def submit_contribution(request: Request):
        record = await request.json()
        try:
            entry = GlossaryEntry(
                key=record.get("key", ""),
                expansion=record.get("expansion", ""),
                definition=record.get("definition", ""),
                origin="pending_contribution",
            )
            pending_id = store.submit_contribution(entry)
        except ValidationFailed as exc:
            return _error(400, "validation_failed", str(exc))
        return JSONResponse(status_code=202, content={"id": pending_id})

    @app.post("/contributions/{pending_id}/approve")
    def approve_contribution(pending_id: int):
        try:
            return _entry_payload(store.approve_contribution(pending_id))
        except NotFound as exc:
            return _error(404, "not_found", str(exc))

    @app.post("/classify")
    async def classify_endpoint(request: Request):
        record = await request.json()
        text = record.get("text", "")
        if not text:
            return _error(400, "bad_request", "text must be non-empty")
        verdict = classify_text(text)
        return {"is_tech": verdict.is_tech, "decided_by": verdict.decided_by}

    return app
