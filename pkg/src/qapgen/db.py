"""Persistent store of learned (declarative, interrogative) pattern pairs.

One JSON record per line, human-auditable and diff-friendly; tag-set
sequences are stored in their canonical bracketed syntax.  Duplicate pairs
(literal tag-set equality) are ignored on learn, so re-importing a training
file is a no-op.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .errors import CorruptDb, QapgenError, UnmergeableSentence
from .lexicon import Lexicon
from .model import DECLARATIVE, INTERROGATIVE, TagSetSequence, parse_tag_set
from .preprocess import extract_interrogative, extract_simple_sentences, normalize, strip_leading_cc
from .builder import build

log = logging.getLogger(__name__)

_HEADER = {"schema": "tssp-db", "version": 1}

ORIGIN_SEED = "seed"
ORIGIN_TAUGHT = "taught"


@dataclass(frozen=True)
class TsspEntry:
    id: int
    x: TagSetSequence
    y: TagSetSequence
    decl: str
    interr: str
    origin: str
    created_at: str

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "x": [ts.render() for ts in self.x],
            "y": [ts.render() for ts in self.y],
            "decl": self.decl,
            "interr": self.interr,
            "origin": self.origin,
            "created_at": self.created_at,
        }


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def build_declarative(text: str, tagger, lex: Lexicon):
    """Preprocess and build the first usable simple sentence of ``text``."""
    tagged = tagger.tag(normalize(text, lex))
    candidates = extract_simple_sentences(tagged)
    if not candidates:
        raise UnmergeableSentence(f"no simple sentence with subject and object in {text!r}")
    errors = []
    for candidate in candidates:
        try:
            return build(strip_leading_cc(candidate, lex), lex, kind=DECLARATIVE)
        except UnmergeableSentence as exc:
            errors.append(str(exc))
    raise UnmergeableSentence("; ".join(errors))


def build_interrogative(text: str, tagger, lex: Lexicon):
    tagged = tagger.tag(normalize(text, lex))
    return build(extract_interrogative(tagged), lex, kind=INTERROGATIVE)


class TsspDb:
    """Append-only collection of learned pattern pairs."""

    def __init__(self, entries: list[TsspEntry] | None = None):
        self.entries: list[TsspEntry] = list(entries or [])
        self._next_id = max((e.id for e in self.entries), default=0) + 1

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def find_literal(self, x: TagSetSequence, y: TagSetSequence) -> TsspEntry | None:
        for entry in self.entries:
            if entry.x.items == x.items and entry.y.items == y.items:
                return entry
        return None

    def add(self, x, y, decl, interr, origin) -> tuple[TsspEntry, bool]:
        existing = self.find_literal(x, y)
        if existing is not None:
            return existing, False
        entry = TsspEntry(
            id=self._next_id, x=x, y=y, decl=decl, interr=interr, origin=origin,
            created_at=_now(),
        )
        self._next_id += 1
        self.entries.append(entry)
        return entry, True

    def learn_pair(
        self, declarative: str, interrogative: str, tagger, lex: Lexicon,
        origin: str = ORIGIN_TAUGHT,
    ) -> tuple[TsspEntry, bool]:
        """Build both patterns and deposit the pair unless already present.

        Returns ``(entry, created)``; ``created`` is False for duplicates.
        """
        x = build_declarative(declarative, tagger, lex).sequence
        y = build_interrogative(interrogative, tagger, lex).sequence
        return self.add(x, y, declarative, interrogative, origin)

    def import_seed(self, path: str | Path, tagger, lex: Lexicon) -> dict[str, int]:
        """Learn every pair of a seed file; failures are counted, not fatal."""
        counts = {"added": 0, "duplicates": 0, "failed": 0}
        with open(path, encoding="utf-8") as fh:
            for n, raw in enumerate(fh, start=1):
                raw = raw.strip()
                if not raw:
                    continue
                try:
                    record = json.loads(raw)
                    _, created = self.learn_pair(
                        record["declarative"], record["interrogative"], tagger, lex,
                        origin=ORIGIN_SEED,
                    )
                except (QapgenError, KeyError, json.JSONDecodeError) as exc:
                    log.warning("seed line %d failed: %s", n, exc)
                    counts["failed"] += 1
                    continue
                counts["added" if created else "duplicates"] += 1
        return counts

    def save(self, path: str | Path) -> None:
        lines = [json.dumps(_HEADER, ensure_ascii=False)]
        lines.extend(json.dumps(e.to_json(), ensure_ascii=False) for e in self.entries)
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "TsspDb":
        raw_lines = Path(path).read_text(encoding="utf-8").splitlines()
        if not raw_lines:
            raise CorruptDb("empty database file", line=1)
        try:
            header = json.loads(raw_lines[0])
        except json.JSONDecodeError as exc:
            raise CorruptDb(f"bad header: {exc}", line=1) from exc
        if header.get("schema") != _HEADER["schema"]:
            raise CorruptDb("not a pattern database file", line=1)
        entries = []
        seen_ids = set()
        for n, raw in enumerate(raw_lines[1:], start=2):
            if not raw.strip():
                continue
            try:
                obj = json.loads(raw)
                entry = TsspEntry(
                    id=int(obj["id"]),
                    x=TagSetSequence(tuple(parse_tag_set(t) for t in obj["x"]), DECLARATIVE),
                    y=TagSetSequence(tuple(parse_tag_set(t) for t in obj["y"]), INTERROGATIVE),
                    decl=obj["decl"],
                    interr=obj["interr"],
                    origin=obj["origin"],
                    created_at=obj["created_at"],
                )
            except (KeyError, ValueError, TypeError, QapgenError, json.JSONDecodeError) as exc:
                raise CorruptDb(str(exc), line=n) from exc
            for problem in entry.x.violations() + entry.y.violations():
                raise CorruptDb(problem, line=n)
            if entry.id in seen_ids:
                raise CorruptDb(f"duplicate entry id {entry.id}", line=n)
            seen_ids.add(entry.id)
            entries.append(entry)
        return cls(entries)


def open_or_create(path: str | Path) -> TsspDb:
    path = Path(path)
    if path.exists():
        return TsspDb.load(path)
    return TsspDb()
