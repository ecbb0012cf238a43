"""Question and answer realization from matched pattern pairs.

Given the best-matching learned pair (X, Y) for an input sequence Xs, the
question bag is ``[Y' - (X' ∩ Y' - X's)] ∪ (X's - Z')``: pattern tag sets
missing from the input are removed, input tag sets outside the match are
added.  The ordered question is rendered through the input's text map, with
do-support resolution for the helping verb; the answer is the text of
``X' - Y'`` in input order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .builder import BuiltSequence, TsTextMap, build
from .db import TsspDb, TsspEntry
from .errors import EmptyAnswer, UnmergeableSentence, UnresolvableTagSet
from .lexicon import Lexicon, conjugate_do, lemma
from .matcher import PERFECT, UNSUCCESSFUL, MatchResult, best_match
from .model import (
    DECLARATIVE,
    EquivalencePolicy,
    MATCH_POLICY,
    PLURAL_POS,
    TagSet,
    TagSetBag,
    TagSetSequence,
)
from .preprocess import extract_simple_sentences, normalize, strip_leading_cc

log = logging.getLogger(__name__)

_PAST_POS = frozenset({"VBD"})
_PRESENT_POS = frozenset({"VBP", "VBZ"})


@dataclass(frozen=True)
class Qap:
    question: str
    answer: str
    source_sentence: str
    entry_id: int
    match_class: str

    def to_record(self) -> dict:
        return {
            "question": self.question,
            "answer": self.answer,
            "source": self.source_sentence,
            "entry_id": self.entry_id,
        }


@dataclass(frozen=True)
class TeachPrompt:
    """An unpersisted request to teach a new pattern for a sentence."""

    sentence_text: str
    built_sequence: list[str]
    match_class: str


def question_tag_bag(
    x_bag: TagSetBag, y_bag: TagSetBag, xs_bag: TagSetBag, z_bag: TagSetBag
) -> TagSetBag:
    """``[Y' - (X' ∩ Y' - X's)] ∪ (X's - Z')`` over policy-deduplicated bags."""
    removal = x_bag.intersection(y_bag).difference(xs_bag)
    return y_bag.difference(removal).union(xs_bag.difference(z_bag))


def order_question(
    y: TagSetSequence,
    ys_bag: TagSetBag,
    xs: TagSetSequence,
    z_span: tuple[int, int],
) -> list[TagSet]:
    """Order the question bag into a tag-set list.

    When the match covers all of Xs the pattern order Y is kept (filtered to
    the bag).  Otherwise the input tag sets outside the match window are
    appended: first those after the window, then those before, each in input
    order.
    """
    core = [ts for ts in y if ts in ys_bag]
    zs_start, z_len = z_span
    if z_len >= len(xs):
        return core
    core_bag = TagSetBag(core, policy=ys_bag.policy)
    after = [ts for ts in xs.items[zs_start + z_len :] if ts in ys_bag and ts not in core_bag]
    before = [ts for ts in xs.items[:zs_start] if ts in ys_bag and ts not in core_bag]
    return core + after + before


def _subject_number(text_map: TsTextMap) -> str:
    entry = text_map.lookup_srl("ARG0")
    if entry is None:
        v_entry = text_map.lookup_srl("V")
        v_pos = v_entry.position if v_entry is not None else len(text_map)
        for candidate in text_map:
            if candidate.tag_set.is_argn and candidate.position < v_pos:
                entry = candidate
                break
    if entry is None:
        return "singular"
    return "plural" if entry.tag_set.pos in PLURAL_POS else "singular"


def _helping_verb(first_v: TagSet, text_map: TsTextMap, entry: TsspEntry) -> str:
    if first_v.pos in _PAST_POS:
        tense = "past"
    elif first_v.pos in _PRESENT_POS:
        tense = "present"
    else:
        raise UnresolvableTagSet(
            f"cannot resolve helping verb {first_v.render()} of pattern {entry.id}"
        )
    return conjugate_do(tense, _subject_number(text_map))


def realize_question(
    ys: list[TagSet],
    text_map: TsTextMap,
    y_origin: TsspEntry,
    lex: Lexicon,
    policy: EquivalencePolicy = MATCH_POLICY,
) -> str:
    """Render the ordered question tag sets as an interrogative sentence.

    With two verb tag sets the first is the helping verb (do-support from
    the pattern's tense and the input subject's number) and the second takes
    the lemma of the input's verb text.  A non-verb tag set with no mapped
    text aborts the pair.
    """
    v_positions = [i for i, ts in enumerate(ys) if ts.is_verb]
    v_entry = text_map.lookup_srl("V")
    parts: list[str] = []
    for i, ts in enumerate(ys):
        if ts.is_pronoun:
            parts.append(ts.pronoun)
            continue
        if ts.is_verb and len(v_positions) == 2:
            if i == v_positions[0]:
                parts.append(_helping_verb(ts, text_map, y_origin))
            else:
                if v_entry is None:
                    raise UnresolvableTagSet("input has no verb text to inflect")
                parts.append(lemma(v_entry.text, lex))
            continue
        entry = text_map.lookup(ts, policy)
        if entry is None:
            raise UnresolvableTagSet(
                f"no mapped text for {ts.render()} of pattern {y_origin.id}"
            )
        parts.append(entry.text)
    question = " ".join(parts).strip()
    if not question:
        raise UnresolvableTagSet("question realized to empty text")
    return question[0].upper() + question[1:] + "?"


def extract_answer(
    x_bag: TagSetBag,
    y_bag: TagSetBag,
    xs: TagSetSequence,
    text_map: TsTextMap,
    policy: EquivalencePolicy = MATCH_POLICY,
) -> str:
    """Text of the answer bag ``X' - Y'``, in input order.

    Members are located in the input's text map by policy equality, falling
    back to the SRL label alone; when nothing maps, the pair is discarded
    via :class:`EmptyAnswer`.
    """
    answer_bag = x_bag.difference(y_bag)
    located = []
    for member in answer_bag:
        entry = text_map.lookup(member, policy)
        if entry is None and member.srl is not None:
            entry = text_map.lookup_srl(member.srl)
        if entry is not None:
            located.append(entry)
    located = sorted({e.position: e for e in located}.values(), key=lambda e: e.position)
    if not located:
        raise EmptyAnswer("answer tag-set bag is empty or unmapped")
    return " ".join(entry.text for entry in located)


def _qap_for_pair(
    match: MatchResult,
    entry: TsspEntry,
    built: BuiltSequence,
    source_sentence: str,
    lex: Lexicon,
    policy: EquivalencePolicy,
) -> Qap:
    xs = built.sequence
    x_bag = TagSetBag.from_sequence(entry.x, policy)
    y_bag = TagSetBag.from_sequence(entry.y, policy)
    xs_bag = TagSetBag.from_sequence(xs, policy)
    z_bag = TagSetBag.from_sequence(match.z, policy)
    ys_bag = question_tag_bag(x_bag, y_bag, xs_bag, z_bag)
    ys = order_question(entry.y, ys_bag, xs, (match.xs_start, len(match.z)))
    question = realize_question(ys, built.text_map, entry, lex, policy)
    answer = extract_answer(x_bag, y_bag, xs, built.text_map, policy)
    return Qap(
        question=question,
        answer=answer,
        source_sentence=source_sentence,
        entry_id=entry.id,
        match_class=match.match_class,
    )


def generate(
    sentence_text: str,
    db: TsspDb,
    lex: Lexicon,
    tagger,
    policy: EquivalencePolicy = MATCH_POLICY,
) -> tuple[list[Qap], list[TeachPrompt]]:
    """All QAPs for one input sentence, plus teaching prompts.

    Every simple sentence of the input is matched against the database; tied
    best matches each yield a QAP candidate.  Imperfect or failed matches
    queue the sentence for teaching.  Duplicate questions are collapsed
    case-insensitively.  Only tagger errors propagate.
    """
    source = normalize(sentence_text, lex)
    tagged = tagger.tag(source)
    return generate_from_tagged(tagged, source, db, lex, policy)


def generate_from_tagged(
    tagged,
    source: str,
    db: TsspDb,
    lex: Lexicon,
    policy: EquivalencePolicy = MATCH_POLICY,
) -> tuple[list[Qap], list[TeachPrompt]]:
    """Generation core over an already tagged sentence."""
    qaps: list[Qap] = []
    prompts: list[TeachPrompt] = []
    seen_questions: set[str] = set()
    for simple in extract_simple_sentences(tagged):
        try:
            built = build(strip_leading_cc(simple, lex), lex, kind=DECLARATIVE)
        except UnmergeableSentence as exc:
            log.debug("skipping unbuildable frame of %r: %s", source, exc)
            continue
        matches = best_match(db, built.sequence, policy)
        rendered = [ts.render() for ts in built.sequence]
        if not matches:
            prompts.append(TeachPrompt(source, rendered, UNSUCCESSFUL))
            continue
        # a perfect match anywhere in the tie means the pattern is known;
        # only imperfect-at-best sentences go to the teacher
        needs_teaching = all(m.match_class != PERFECT for m, _ in matches)
        for match, entry in matches:
            if match.match_class == UNSUCCESSFUL:
                continue
            try:
                qap = _qap_for_pair(match, entry, built, source, lex, policy)
            except UnresolvableTagSet as exc:
                log.debug("pair %d unresolvable for %r: %s", entry.id, source, exc)
                continue
            except EmptyAnswer:
                continue
            if qap.answer.lower() in qap.question.lower():
                log.debug("discarding answer-revealing question %r", qap.question)
                continue
            key = qap.question.lower()
            if key not in seen_questions:
                seen_questions.add(key)
                qaps.append(qap)
        if needs_teaching:
            prompts.append(TeachPrompt(source, rendered, matches[0][0].match_class))
    return qaps, prompts
