"""Boundary to the SRL/POS/NER taggers.

Annotations cross this boundary in a line-delimited JSON wire format::

    {"text": ..., "tokens": [{"t": word, "pos": ..., "ner": ... or null,
     "srl": [label-or-null per frame]}], "frames": N}

The same format is used for fixture files, bridge output, and service
ingestion.  Two adapters are provided: a deterministic fixture tagger backed
by a pre-annotated corpus (for tests and offline runs) and an HTTP client
for an external tagging process.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import requests

from .errors import SchemaViolation, TaggerUnavailable
from .model import PENN_POS

_PUNCT_RE = re.compile(r"^[^\w\s]+$")


def is_punct(text: str) -> bool:
    return bool(_PUNCT_RE.match(text))


def normalize_srl(label: str | None) -> str | None:
    """Collapse B-/I- prefixes and the ARGM- wrapper to plain labels."""
    if label is None:
        return None
    label = label.upper()
    if label.startswith(("B-", "I-")):
        label = label[2:]
    if label.startswith("ARGM-"):
        label = label[5:]
    if label in ("", "O"):
        return None
    return label


@dataclass(frozen=True)
class TaggedToken:
    text: str
    pos: str
    ner: str | None
    srl_by_frame: tuple[str | None, ...]
    start: int  # char offsets into the sentence text
    end: int

    @property
    def is_punct(self) -> bool:
        return is_punct(self.text)


@dataclass(frozen=True)
class Frame:
    frame_index: int
    token_span_labels: tuple[tuple[int, str], ...]


@dataclass(frozen=True)
class TaggedSentence:
    tokens: tuple[TaggedToken, ...]
    frame_count: int
    source_text: str

    def frames(self) -> list[Frame]:
        out = []
        for f in range(self.frame_count):
            labels = tuple(
                (i, tok.srl_by_frame[f])
                for i, tok in enumerate(self.tokens)
                if tok.srl_by_frame[f] is not None
            )
            out.append(Frame(frame_index=f, token_span_labels=labels))
        return out


def _verb_groups(tokens, frame: int) -> int:
    groups = 0
    in_group = False
    for tok in tokens:
        if tok.srl_by_frame[frame] == "V":
            if not in_group:
                groups += 1
                in_group = True
        else:
            in_group = False
    return groups


def _align(token_texts: list[str], source: str, line: int | None) -> list[tuple[int, int]]:
    spans = []
    cursor = 0
    for t in token_texts:
        idx = source.find(t, cursor)
        if idx < 0:
            raise SchemaViolation(f"token {t!r} does not align with text", line)
        spans.append((idx, idx + len(t)))
        cursor = idx + len(t)
    return spans


def parse_record(obj: dict, line: int | None = None) -> TaggedSentence:
    """Validate one wire record and build a :class:`TaggedSentence`.

    Raises :class:`SchemaViolation` on any structural problem, including
    frames whose V labels form zero or more than two contiguous groups.
    """
    if not isinstance(obj, dict):
        raise SchemaViolation("record is not an object", line)
    text = obj.get("text")
    if not isinstance(text, str) or not text.strip():
        raise SchemaViolation("missing or empty text", line)
    frames = obj.get("frames")
    if not isinstance(frames, int) or frames < 0:
        raise SchemaViolation("frames must be a non-negative integer", line)
    raw_tokens = obj.get("tokens")
    if not isinstance(raw_tokens, list) or not raw_tokens:
        raise SchemaViolation("missing tokens", line)

    texts = []
    parsed = []
    for raw in raw_tokens:
        if not isinstance(raw, dict):
            raise SchemaViolation("token is not an object", line)
        t = raw.get("t")
        pos = raw.get("pos")
        ner = raw.get("ner")
        srl = raw.get("srl")
        if not isinstance(t, str) or not t:
            raise SchemaViolation("token text missing", line)
        if not isinstance(pos, str) or pos not in PENN_POS:
            raise SchemaViolation(f"bad POS {pos!r} for token {t!r}", line)
        if ner is not None and not isinstance(ner, str):
            raise SchemaViolation(f"bad NER for token {t!r}", line)
        if not isinstance(srl, list) or len(srl) != frames:
            raise SchemaViolation(
                f"srl list for token {t!r} must have one entry per frame", line
            )
        texts.append(t)
        parsed.append((t, pos, ner, tuple(normalize_srl(s) for s in srl)))

    spans = _align(texts, text, line)
    tokens = tuple(
        TaggedToken(text=t, pos=pos, ner=ner, srl_by_frame=srl, start=s, end=e)
        for (t, pos, ner, srl), (s, e) in zip(parsed, spans)
    )
    sentence = TaggedSentence(tokens=tokens, frame_count=frames, source_text=text)
    for f in range(frames):
        groups = _verb_groups(tokens, f)
        if groups == 0:
            raise SchemaViolation(f"frame {f} has no V-labeled token", line)
        if groups > 2:
            raise SchemaViolation(f"frame {f} has {groups} disjoint V groups", line)
    return sentence


def to_record(ts: TaggedSentence) -> dict:
    return {
        "text": ts.source_text,
        "tokens": [
            {"t": tok.text, "pos": tok.pos, "ner": tok.ner, "srl": list(tok.srl_by_frame)}
            for tok in ts.tokens
        ],
        "frames": ts.frame_count,
    }


def load_fixture_corpus(path: str | Path) -> list[TaggedSentence]:
    """Parse a fixture file of wire records, one per line, order preserved."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for n, raw in enumerate(fh, start=1):
            raw = raw.strip()
            if not raw:
                continue
            try:
                obj = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise SchemaViolation(f"bad JSON: {exc}", n) from exc
            out.append(parse_record(obj, line=n))
    return out


def lookup_key(text: str) -> str:
    """Normalization applied to sentence text before fixture lookup."""
    text = " ".join(text.split())
    text = re.sub(r"[.?!]+$", "", text).strip()
    return text.lower()


def default_fixture_path() -> Path:
    root = resources.files("qapgen").joinpath("data/fixtures/core_sentences.jsonl")
    with resources.as_file(root) as p:
        return Path(p)


class FixtureTagger:
    """Deterministic tagger backed by a pre-annotated corpus file."""

    def __init__(self, corpus: list[TaggedSentence] | None = None, path: str | Path | None = None):
        if corpus is None:
            corpus = load_fixture_corpus(path if path is not None else default_fixture_path())
        self.corpus = corpus
        self._by_key = {lookup_key(ts.source_text): ts for ts in corpus}

    def tag(self, text: str) -> TaggedSentence:
        if not text or not text.strip():
            raise SchemaViolation("empty sentence")
        key = lookup_key(text)
        try:
            return self._by_key[key]
        except KeyError:
            raise TaggerUnavailable(f"no fixture annotation for {text!r}") from None


class HttpTagger:
    """Client for an external tagging service exposing ``POST <url>``."""

    def __init__(self, url: str, timeout: float = 30.0):
        self.url = url
        self.timeout = timeout

    def tag(self, text: str) -> TaggedSentence:
        if not text or not text.strip():
            raise SchemaViolation("empty sentence")
        try:
            resp = requests.post(self.url, json={"text": text}, timeout=self.timeout)
            resp.raise_for_status()
            obj = resp.json()
        except requests.RequestException as exc:
            raise TaggerUnavailable(f"tagger at {self.url} failed: {exc}") from exc
        return parse_record(obj)
