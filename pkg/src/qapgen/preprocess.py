"""Sentence normalization and simple-sentence extraction.

A complex sentence is split into one candidate simple sentence per SRL
frame; candidates missing a subject or an object are discarded, and leading
coordinating conjunctions are stripped before sequence building.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .lexicon import Lexicon, expand_contractions
from .model import ARGN_LABELS
from .tagging import TaggedSentence, is_punct

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class LabeledToken:
    """A token restricted to one frame: single SRL label, char span kept."""

    text: str
    pos: str
    ner: str | None
    srl: str | None
    start: int
    end: int

    @property
    def is_punct(self) -> bool:
        return is_punct(self.text)

    @property
    def is_argn(self) -> bool:
        return self.srl in ARGN_LABELS


@dataclass(frozen=True)
class SimpleSentence:
    tokens: tuple[LabeledToken, ...]
    frame_origin: tuple[str, int]  # (source sentence text, frame index)
    text: str


def normalize(text: str, lex: Lexicon) -> str:
    """Contraction/slang expansion plus whitespace collapsing."""
    return " ".join(expand_contractions(text, lex).split())


def _restrict(ts: TaggedSentence, frame: int) -> list[LabeledToken]:
    labeled = [i for i, tok in enumerate(ts.tokens) if tok.srl_by_frame[frame] is not None]
    if not labeled:
        return []
    lo, hi = labeled[0], labeled[-1]
    out = []
    for i in range(lo, hi + 1):
        tok = ts.tokens[i]
        srl = tok.srl_by_frame[frame]
        if srl is None and not is_punct(tok.text):
            continue
        out.append(
            LabeledToken(
                text=tok.text, pos=tok.pos, ner=tok.ner, srl=srl, start=tok.start, end=tok.end
            )
        )
    return out


def _verb_group_bounds(tokens) -> list[tuple[int, int]]:
    groups = []
    start = None
    for i, tok in enumerate(tokens):
        if tok.srl == "V":
            if start is None:
                start = i
        elif start is not None:
            groups.append((start, i - 1))
            start = None
    if start is not None:
        groups.append((start, len(tokens) - 1))
    return groups


def _make_simple(ts: TaggedSentence, frame: int, tokens) -> SimpleSentence:
    text = ts.source_text[tokens[0].start : tokens[-1].end]
    return SimpleSentence(tokens=tuple(tokens), frame_origin=(ts.source_text, frame), text=text)


def extract_simple_sentences(ts: TaggedSentence) -> list[SimpleSentence]:
    """One candidate per frame; candidates without both a subject (ArgN
    before the verb group) and an object (ArgN after it) are dropped."""
    out = []
    for frame in range(ts.frame_count):
        tokens = _restrict(ts, frame)
        if not tokens:
            continue
        groups = _verb_group_bounds(tokens)
        if len(groups) != 1:
            log.debug("frame %d dropped: %d verb groups", frame, len(groups))
            continue
        v_lo, v_hi = groups[0]
        has_subject = any(tok.is_argn for tok in tokens[:v_lo])
        has_object = any(tok.is_argn for tok in tokens[v_hi + 1 :])
        if not (has_subject and has_object):
            log.debug("frame %d dropped: subject or object missing", frame)
            continue
        out.append(_make_simple(ts, frame, tokens))
    return out


def extract_interrogative(ts: TaggedSentence) -> SimpleSentence:
    """All tokens with frame-0 labels; no subject/object filter.

    Interrogatives keep unlabeled leading words (the pronoun) and may carry
    two verb groups (helping verb plus main verb).
    """
    frame = 0
    tokens = [
        LabeledToken(
            text=tok.text,
            pos=tok.pos,
            ner=tok.ner,
            srl=tok.srl_by_frame[frame] if ts.frame_count else None,
            start=tok.start,
            end=tok.end,
        )
        for tok in ts.tokens
    ]
    return _make_simple(ts, frame, tokens)


def strip_leading_cc(s: SimpleSentence, lex: Lexicon) -> SimpleSentence:
    """Drop coordinating conjunctions (and stray punctuation) before the
    subject; everything from the first ArgN token on is untouched."""
    first_argn = next((i for i, tok in enumerate(s.tokens) if tok.is_argn), None)
    if first_argn is None or first_argn == 0:
        return s
    kept = [
        tok
        for tok in s.tokens[:first_argn]
        if not (tok.pos == "CC" or tok.text.lower() in lex.cc_words or tok.is_punct)
    ]
    tokens = kept + list(s.tokens[first_argn:])
    if len(tokens) == len(s.tokens):
        return s
    source_text, frame = s.frame_origin
    text = source_text[tokens[0].start : tokens[-1].end]
    return SimpleSentence(tokens=tuple(tokens), frame_origin=s.frame_origin, text=text)
