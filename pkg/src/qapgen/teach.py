"""Queue of sentences waiting for a human-supplied interrogative.

Persisted as an append-only event log next to the database file so the CLI
and the HTTP service share state; replaying the log reconstructs the queue.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

OPEN = "open"
RESOLVED = "resolved"
SKIPPED = "skipped"


@dataclass
class TeachRequest:
    id: int
    sentence_text: str
    built_sequence: list[str]
    best_match_class: str
    created_at: str
    status: str = OPEN
    entry_id: int | None = None

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "sentence": self.sentence_text,
            "built_sequence": self.built_sequence,
            "best_match_class": self.best_match_class,
            "created_at": self.created_at,
            "status": self.status,
            "entry_id": self.entry_id,
        }


class TeachQueue:
    def __init__(self, path: str | Path):
        self.path = Path(path)
        self.requests: dict[int, TeachRequest] = {}
        self._next_id = 1
        if self.path.exists():
            self._replay()

    def _replay(self) -> None:
        for raw in self.path.read_text(encoding="utf-8").splitlines():
            if not raw.strip():
                continue
            event = json.loads(raw)
            kind = event["event"]
            if kind == "open":
                r = event["request"]
                req = TeachRequest(
                    id=r["id"],
                    sentence_text=r["sentence"],
                    built_sequence=list(r["built_sequence"]),
                    best_match_class=r["best_match_class"],
                    created_at=r["created_at"],
                )
                self.requests[req.id] = req
                self._next_id = max(self._next_id, req.id + 1)
            elif kind == "resolve":
                req = self.requests.get(event["id"])
                if req is not None:
                    req.status = RESOLVED
                    req.entry_id = event.get("entry_id")
            elif kind == "skip":
                req = self.requests.get(event["id"])
                if req is not None:
                    req.status = SKIPPED

    def _append(self, event: dict) -> None:
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(event, ensure_ascii=False) + "\n")

    def open_requests(self) -> list[TeachRequest]:
        return [r for r in self.requests.values() if r.status == OPEN]

    def get(self, request_id: int) -> TeachRequest | None:
        return self.requests.get(request_id)

    def add(self, sentence_text: str, built_sequence: list[str], match_class: str) -> TeachRequest:
        """Queue a sentence; an already-open request for the same sentence
        is returned instead of a duplicate."""
        for req in self.requests.values():
            if req.status == OPEN and req.sentence_text == sentence_text:
                return req
        req = TeachRequest(
            id=self._next_id,
            sentence_text=sentence_text,
            built_sequence=list(built_sequence),
            best_match_class=match_class,
            created_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        )
        self._next_id += 1
        self.requests[req.id] = req
        self._append({"event": "open", "request": req.to_json()})
        return req

    def resolve(self, request_id: int, entry_id: int) -> None:
        req = self.requests[request_id]
        req.status = RESOLVED
        req.entry_id = entry_id
        self._append({"event": "resolve", "id": request_id, "entry_id": entry_id})

    def skip(self, request_id: int) -> None:
        req = self.requests[request_id]
        req.status = SKIPPED
        self._append({"event": "skip", "id": request_id})
