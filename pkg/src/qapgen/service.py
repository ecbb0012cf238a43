"""Local HTTP service exposing generation, teaching, and DB inspection.

Localhost teaching tool, no auth.  Reads run against the in-memory database
snapshot; writes (teaching) serialize through a single lock and persist the
database and teach queue next to each other on disk.
"""

from __future__ import annotations

import threading
from pathlib import Path

from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .db import TsspDb, open_or_create
from .errors import (
    MalformedTagSet,
    QapgenError,
    SchemaViolation,
    TaggerUnavailable,
    UnmergeableSentence,
)
from .generator import generate
from .lexicon import Lexicon
from .matcher import UNSUCCESSFUL
from .tagging import FixtureTagger
from .teach import OPEN, TeachQueue


class GenerateIn(BaseModel):
    text: str


class TeachIn(BaseModel):
    request_id: int
    interrogative: str


def default_queue_path(db_path: str | Path) -> Path:
    return Path(str(db_path) + ".teach")


def create_app(
    db_path: str | Path,
    queue_path: str | Path | None = None,
    tagger=None,
    lex: Lexicon | None = None,
) -> FastAPI:
    lex = lex if lex is not None else Lexicon.load_default()
    tagger = tagger if tagger is not None else FixtureTagger()
    db = open_or_create(db_path)
    queue = TeachQueue(queue_path if queue_path is not None else default_queue_path(db_path))
    write_lock = threading.Lock()

    app = FastAPI(title="qapgen service")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(RequestValidationError)
    async def _bad_request(request, exc):
        return JSONResponse(status_code=400, content={"code": "bad_request", "detail": str(exc)})

    def _error(status: int, code: str, detail: str) -> JSONResponse:
        return JSONResponse(status_code=status, content={"code": code, "detail": detail})

    @app.get("/health")
    def health():
        return {"status": "ok", "entries": len(db), "open_teach_requests": len(queue.open_requests())}

    @app.post("/generate")
    def generate_qaps(body: GenerateIn):
        if not body.text.strip():
            return _error(400, "bad_request", "text is empty")
        try:
            qaps, prompts = generate(body.text, db, lex, tagger)
        except TaggerUnavailable as exc:
            return _error(503, "tagger_unavailable", str(exc))
        except (SchemaViolation, MalformedTagSet) as exc:
            return _error(400, "bad_request", str(exc))
        with write_lock:
            requests = [
                queue.add(p.sentence_text, p.built_sequence, p.match_class) for p in prompts
            ]
        return {
            "qaps": [q.to_record() for q in qaps],
            "teach_requests": [r.to_json() for r in requests],
        }

    @app.get("/teach/queue")
    def teach_queue():
        return {"requests": [r.to_json() for r in queue.open_requests()]}

    @app.post("/teach")
    def teach(body: TeachIn):
        with write_lock:
            request = queue.get(body.request_id)
            if request is None:
                return _error(404, "not_found", f"no teach request {body.request_id}")
            if request.status != OPEN:
                return _error(409, "not_open", f"request {body.request_id} is {request.status}")
            if not body.interrogative.strip():
                return _error(400, "bad_request", "interrogative is empty")
            try:
                entry, created = db.learn_pair(
                    request.sentence_text, body.interrogative, tagger, lex
                )
            except (UnmergeableSentence, TaggerUnavailable, QapgenError) as exc:
                return {
                    "error": {"code": "unlearnable", "detail": str(exc)},
                    "qaps_now": [],
                }
            if created:
                db.save(db_path)
                queue.resolve(request.id, entry.id)
        qaps, _ = generate(request.sentence_text, db, lex, tagger)
        payload = {"qaps_now": [q.to_record() for q in qaps]}
        if created:
            payload["entry"] = entry.to_json()
        else:
            payload["duplicate"] = True
            payload["entry"] = entry.to_json()
        return payload

    @app.get("/db/entries")
    def db_entries(page: int = 1, per_page: int = 50):
        if page < 1 or per_page < 1:
            return _error(400, "bad_request", "page and per_page must be positive")
        start = (page - 1) * per_page
        rows = db.entries[start : start + per_page]
        return {
            "entries": [e.to_json() for e in rows],
            "page": page,
            "per_page": per_page,
            "total": len(db),
        }

    return app
