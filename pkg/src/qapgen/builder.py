"""Builds tag-set sequences from simple sentences.

Basic units are formed by greedy phrasal-verb segmentation, each unit is
merged to a single tag set, consecutive tag sets with the same SRL label are
merged, and the surviving tag sets are mapped back to their source text
spans (the TS-text map) for later question and answer realization.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnmergeableSentence
from .lexicon import Lexicon, match_phrasal_verb
from .model import (
    DECLARATIVE,
    INTERROGATIVE,
    NOUN_POS,
    EquivalencePolicy,
    MATCH_POLICY,
    TagSet,
    TagSetSequence,
)
from .preprocess import LabeledToken, SimpleSentence


@dataclass(frozen=True)
class TextMapEntry:
    position: int
    tag_set: TagSet
    text: str
    span: tuple[int, int]


@dataclass(frozen=True)
class TsTextMap:
    entries: tuple[TextMapEntry, ...]

    def lookup(self, ts: TagSet, policy: EquivalencePolicy = MATCH_POLICY) -> TextMapEntry | None:
        key = policy.key(ts)
        for entry in self.entries:
            if policy.key(entry.tag_set) == key:
                return entry
        return None

    def lookup_srl(self, label: str) -> TextMapEntry | None:
        for entry in self.entries:
            if entry.tag_set.srl == label:
                return entry
        return None

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class BuiltSequence:
    sequence: TagSetSequence
    text_map: TsTextMap
    source: SimpleSentence


def _is_verb_token(tok: LabeledToken) -> bool:
    return tok.srl == "V" or tok.pos.startswith("VB")


def segment_units(s: SimpleSentence, lex: Lexicon) -> list[list[LabeledToken]]:
    """Greedy left-to-right grouping; verb tokens extend over the longest
    phrasal-verb pattern, everything else forms singleton units.

    Unlabeled tokens (stray punctuation and the like) never start a unit:
    they attach to the preceding unit, or to the following one when leading.
    """
    tokens = list(s.tokens)
    units: list[list[LabeledToken]] = []
    pending: list[LabeledToken] = []
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok.srl is None:
            if units:
                units[-1].append(tok)
            else:
                pending.append(tok)
            i += 1
            continue
        span = 1
        if _is_verb_token(tok):
            span = match_phrasal_verb([t.text for t in tokens[i:]], 0, lex)
        unit = pending + tokens[i : i + span]
        pending = []
        units.append(unit)
        i += span
    return units


def merge_unit(unit: list[LabeledToken]) -> TagSet:
    """Collapse one basic unit to a single tag set.

    A unit containing a V-labeled token takes that V tag set with the POS of
    the unit's head verb; otherwise the rightmost tag set with a noun POS
    wins; otherwise the rightmost labeled tag set.
    """
    labeled = [tok for tok in unit if tok.srl is not None]
    if not labeled:
        raise ValueError("unit has no labeled token")
    v_tokens = [tok for tok in labeled if tok.srl == "V"]
    if v_tokens:
        head = next((tok for tok in unit if tok.pos.startswith("VB")), v_tokens[0])
        return TagSet(srl="V", pos=head.pos, ner=v_tokens[0].ner)
    nouns = [tok for tok in labeled if tok.pos in NOUN_POS]
    chosen = nouns[-1] if nouns else labeled[-1]
    return TagSet(srl=chosen.srl, pos=chosen.pos, ner=chosen.ner)


def _merge_pair(a: TagSet, b: TagSet) -> TagSet:
    # same SRL; POS from the rightmost tag set, rightmost non-empty NER
    return TagSet(srl=a.srl, pos=b.pos, ner=b.ner if b.ner is not None else a.ner)


def merge_consecutive(seq: list[TagSet]) -> list[TagSet]:
    """Merge neighbours sharing an SRL label until none remain."""
    out: list[TagSet] = []
    for ts in seq:
        if out and ts.srl is not None and ts.srl == out[-1].srl:
            out[-1] = _merge_pair(out[-1], ts)
        else:
            out.append(ts)
    return out


def _strip_edge_punct(text: str) -> str:
    return text.strip(" \t,.;:!?\"'()[]")


def _first_word_lower(text: str) -> str:
    return text[:1].lower() + text[1:]


def _match_leading_pronoun(tokens: list[LabeledToken], lex: Lexicon) -> tuple[str, int] | None:
    for pronoun in sorted(lex.pronouns, key=lambda p: len(p.split()), reverse=True):
        words = pronoun.split()
        if len(tokens) < len(words):
            continue
        if all(tokens[k].text.lower() == words[k] for k in range(len(words))):
            return pronoun, len(words)
    return None


def build(s: SimpleSentence, lex: Lexicon, kind: str = DECLARATIVE) -> BuiltSequence:
    """Segment, merge, and map one simple sentence to a tag-set sequence.

    In interrogative mode a leading lexicon pronoun becomes a pure pronoun
    tag set and two verb tag sets are tolerated.  Raises
    :class:`UnmergeableSentence` when the result breaks sequence invariants.
    """
    tokens = list(s.tokens)
    while tokens and tokens[-1].is_punct:
        tokens.pop()
    if not tokens:
        raise UnmergeableSentence("no tokens left after dropping punctuation")

    pronoun_entry: tuple[TagSet, tuple[int, int]] | None = None
    if kind == INTERROGATIVE:
        hit = _match_leading_pronoun(tokens, lex)
        if hit is not None:
            pronoun, n = hit
            span = (tokens[0].start, tokens[n - 1].end)
            pronoun_entry = (TagSet(pronoun=pronoun), span)
            tokens = tokens[n:]

    if not any(tok.srl is not None for tok in tokens):
        raise UnmergeableSentence("no labeled tokens to build from")
    trimmed = SimpleSentence(tokens=tuple(tokens), frame_origin=s.frame_origin, text=s.text)
    units = segment_units(trimmed, lex)

    merged: list[tuple[TagSet, tuple[int, int]]] = []
    for unit in units:
        span = (min(tok.start for tok in unit), max(tok.end for tok in unit))
        merged.append((merge_unit(unit), span))

    folded: list[tuple[TagSet, tuple[int, int]]] = []
    for ts, span in merged:
        if folded and ts.srl is not None and ts.srl == folded[-1][0].srl:
            prev_ts, prev_span = folded[-1]
            folded[-1] = (_merge_pair(prev_ts, ts), (prev_span[0], span[1]))
        else:
            folded.append((ts, span))

    if pronoun_entry is not None:
        folded.insert(0, pronoun_entry)

    sequence = TagSetSequence(items=tuple(ts for ts, _ in folded), kind=kind)
    problems = sequence.violations()
    if problems:
        raise UnmergeableSentence("; ".join(problems))

    source_text, _ = s.frame_origin
    entries = []
    sentence_start = s.tokens[0].start
    for position, (ts, span) in enumerate(folded):
        text = _strip_edge_punct(source_text[span[0] : span[1]])
        if not text:
            raise UnmergeableSentence(f"tag set {ts.render()} maps to empty text")
        if span[0] == sentence_start:
            first = s.tokens[0]
            if first.pos not in ("NNP", "NNPS") and first.ner is None and first.text != "I":
                text = _first_word_lower(text)
        entries.append(TextMapEntry(position=position, tag_set=ts, text=text, span=span))

    return BuiltSequence(sequence=sequence, text_map=TsTextMap(entries=tuple(entries)), source=s)
