"""Shared test helpers: a token DSL, hand-built sentences, and the
quadratic LCS oracle kept independent of the suffix-automaton path."""

from __future__ import annotations

from qapgen.model import DECLARATIVE, MATCH_POLICY, TagSet, TagSetSequence
from qapgen.preprocess import LabeledToken, SimpleSentence
from qapgen.tagging import parse_record

NO_SPACE_BEFORE = set(",.;:!?")


def record(spec: str, frames: int = 1) -> dict:
    """Expand ``word/POS/NER/SRL`` tokens into a wire record."""
    tokens = []
    words = []
    for tok in spec.split():
        word, pos, ner, srl = tok.split("/")
        tokens.append({"t": word, "pos": pos, "ner": ner or None, "srl": [srl or None]})
        words.append(word)
    text = ""
    for word in words:
        if text and not (len(word) == 1 and word in NO_SPACE_BEFORE):
            text += " "
        text += word
    return {"text": text, "tokens": tokens, "frames": frames}


def tagged(spec: str):
    return parse_record(record(spec))


def simple(spec: str) -> SimpleSentence:
    """Hand-build a SimpleSentence from the token DSL (single frame)."""
    ts = tagged(spec)
    tokens = tuple(
        LabeledToken(
            text=t.text, pos=t.pos, ner=t.ner, srl=t.srl_by_frame[0], start=t.start, end=t.end
        )
        for t in ts.tokens
    )
    return SimpleSentence(tokens=tokens, frame_origin=(ts.source_text, 0), text=ts.source_text)


def seq(text: str, kind: str = DECLARATIVE) -> TagSetSequence:
    from qapgen.model import parse_sequence

    return parse_sequence(text, kind)


def lcs_oracle(x, xs, policy=MATCH_POLICY) -> tuple[int, int, int]:
    """Quadratic dynamic-programming LCS over policy-canonical symbols.

    Independent of the production suffix-automaton implementation; returns
    (length, x_start, xs_start) with the leftmost xs position on ties.
    """
    a = [policy.key(t) for t in x]
    b = [policy.key(t) for t in xs]
    best, bi, bj = 0, 0, 0
    prev = [0] * (len(b) + 1)
    for i in range(1, len(a) + 1):
        cur = [0] * (len(b) + 1)
        for j in range(1, len(b) + 1):
            if a[i - 1] == b[j - 1]:
                cur[j] = prev[j - 1] + 1
                if cur[j] > best or (cur[j] == best and best > 0 and j - cur[j] < bj):
                    best, bi, bj = cur[j], i - cur[j], j - cur[j]
        prev = cur
    return best, bi, bj
