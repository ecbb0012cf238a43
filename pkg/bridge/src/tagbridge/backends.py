"""Tagging backends.

``BuiltinRuleTagger`` is a deterministic, dependency-free tagger for simple
English clauses: lexicon-driven POS, gazetteer NER, and a one-frame SRL
heuristic (verb group, subject, object, prepositional adjuncts).  The
model-backed adapters try their imports lazily and raise
:class:`BackendUnavailable` when the stacks are not installed.
"""

from __future__ import annotations

import re

from .align import project_spans
from .normalize import normalize_ner, normalize_srl


class BackendUnavailable(RuntimeError):
    pass


_TOKEN_RE = re.compile(r"[A-Za-z0-9$']+(?:-[A-Za-z0-9]+)*|[.,;:!?]")

DETERMINERS = {"the", "a", "an", "this", "that", "these", "those", "every", "each"}
POSS_PRONOUNS = {"my", "his", "her", "its", "their", "our", "your"}
PRONOUNS = {"he", "she", "it", "they", "we", "you", "i"}
PREPOSITIONS = {
    "to", "in", "at", "on", "of", "by", "from", "with", "for",
    "after", "before", "because", "during", "about", "over",
}
CONJUNCTIONS = {"and", "but", "or", "nor", "so", "yet", "plus"}
WH_WORDS = {"where": "WRB", "when": "WRB", "why": "WRB", "how": "WRB", "who": "WP", "what": "WP"}
ADVERBS = {"yesterday", "today", "tomorrow", "tonight", "however", "therefore", "well", "early"}

BE_FORMS = {"is": "VBZ", "was": "VBD", "are": "VBP", "were": "VBD", "am": "VBP", "been": "VBN", "being": "VBG", "be": "VB"}
AUX_FORMS = {"did": "VBD", "does": "VBZ", "do": "VBP", "has": "VBZ", "have": "VBP", "had": "VBD"}
MODALS = {"will", "would", "can", "could", "may", "might", "must", "should"}

NUMBER_WORDS = {
    "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten",
    "eleven", "twelve", "twenty", "thirty", "forty", "fifty", "hundred", "thousand", "million",
}
TIME_NUMBERS = {"nine", "noon", "midnight"}
MONTHS = {
    "january", "february", "march", "april", "may", "june", "july",
    "august", "september", "october", "november", "december",
}
TEMPORAL_NOUNS = {
    "week", "month", "year", "day", "night", "spring", "summer", "autumn",
    "winter", "weekend", "season", "morning", "evening",
}

PERSON_NAMES = {
    "john", "mary", "maria", "nora", "marie", "curie", "abraham", "lincoln",
    "albert", "einstein", "leonardo", "da", "vinci", "alexander", "fleming",
    "orville", "wright", "leo", "szilard", "alice", "david", "emma", "frank",
    "grace", "henry", "irene", "kevin", "laura", "oscar",
}
PLACE_NAMES = {
    "boston", "london", "madrid", "berlin", "africa", "america", "vienna",
    "paris", "rome", "tokyo", "oslo", "cairo", "sydney", "lisbon", "dublin",
    "athens", "prague", "united", "states", "titanic",
}
ORG_NAMES = {"nasa"}

# lemma -> transitive motion verb taking "to"
MOTION_VERBS = {"travel", "fly", "walk", "move", "sail", "go", "return", "drive", "come"}
VERB_LEMMAS = MOTION_VERBS | {
    "discover", "meet", "help", "award", "perform", "buy", "paint", "play",
    "sell", "sign", "open", "strike", "launch", "take", "stay", "build",
    "study", "attend", "display", "cook", "invent", "visit", "rain", "leave",
    "love", "pay", "win", "teach", "bring", "eat", "read", "write", "watch",
    "close", "start", "finish", "carry", "hold", "keep", "make", "name",
}
IRREGULAR_PAST = {
    "flew": "fly", "went": "go", "drove": "drive", "came": "come",
    "met": "meet", "bought": "buy", "sold": "sell", "struck": "strike",
    "took": "take", "built": "build", "won": "win", "taught": "teach",
    "brought": "bring", "ate": "eat", "read": "read", "wrote": "write",
    "held": "hold", "kept": "keep", "made": "make", "left": "leave",
    "paid": "pay",
}
IRREGULAR_PARTICIPLE = {
    "flown": "fly", "gone": "go", "driven": "drive", "met": "meet",
    "bought": "buy", "sold": "sell", "struck": "strike", "taken": "take",
    "built": "build", "won": "win", "taught": "teach", "brought": "bring",
    "eaten": "eat", "written": "write", "held": "hold", "kept": "keep",
    "made": "make", "left": "leave", "paid": "pay", "awarded": "award",
    "painted": "paint", "signed": "sign", "canceled": "cancel",
    "invented": "invent", "discovered": "discover",
}


def _verb_lemma(word: str) -> str | None:
    if word in IRREGULAR_PAST:
        return IRREGULAR_PAST[word]
    if word in VERB_LEMMAS:
        return word
    for suffix, strip, add in (("ied", 3, "y"), ("ies", 3, "y"), ("ed", 2, ""), ("es", 2, ""), ("s", 1, ""), ("ing", 3, "")):
        if word.endswith(suffix) and len(word) > len(suffix) + 1:
            stem = word[: -strip] + add
            if stem in VERB_LEMMAS:
                return stem
            if len(stem) >= 3 and stem[-1] == stem[-2] and stem[:-1] in VERB_LEMMAS:
                return stem[:-1]
            if stem + "e" in VERB_LEMMAS:
                return stem + "e"
    return None


class Token:
    __slots__ = ("text", "start", "end", "pos", "ner", "srl")

    def __init__(self, text: str, start: int, end: int):
        self.text = text
        self.start = start
        self.end = end
        self.pos = "NN"
        self.ner: str | None = None
        self.srl: str | None = None

    @property
    def lower(self) -> str:
        return self.text.lower()

    @property
    def is_punct(self) -> bool:
        return self.text in ".,;:!?"


class BuiltinRuleTagger:
    """Deterministic rule tagger for simple subject-verb-object clauses."""

    name = "builtin"

    def tag(self, sentence: str) -> dict:
        tokens = self._tokenize(sentence)
        if not any(not t.is_punct for t in tokens):
            raise ValueError("no word tokens")
        self._pos(tokens)
        self._ner(tokens)
        frames = self._srl(tokens)
        return {
            "text": sentence,
            "tokens": [
                {"t": t.text, "pos": t.pos, "ner": normalize_ner(t.ner),
                 "srl": [normalize_srl(t.srl) if f == 0 else None for f in range(frames)]}
                for t in tokens
            ],
            "frames": frames,
        }

    def _tokenize(self, sentence: str) -> list[Token]:
        return [Token(m.group(0), m.start(), m.end()) for m in _TOKEN_RE.finditer(sentence)]

    def _pos(self, tokens: list[Token]) -> None:
        for i, tok in enumerate(tokens):
            w = tok.lower
            if tok.is_punct:
                tok.pos = tok.text if tok.text in ",.:" else "."
                continue
            if w in WH_WORDS:
                tok.pos = WH_WORDS[w]
            elif w == "many":
                tok.pos = "JJ"
            elif w in BE_FORMS:
                tok.pos = BE_FORMS[w]
            elif w in AUX_FORMS:
                tok.pos = AUX_FORMS[w]
            elif w in MODALS:
                tok.pos = "MD"
            elif w in DETERMINERS:
                tok.pos = "DT"
            elif w in POSS_PRONOUNS:
                tok.pos = "PRP$"
            elif w in PRONOUNS:
                tok.pos = "PRP"
            elif w in CONJUNCTIONS:
                tok.pos = "CC"
            elif w in PREPOSITIONS:
                tok.pos = "TO" if w == "to" and self._next_is_base_verb(tokens, i) else "IN"
            elif re.fullmatch(r"\d+(?:st|nd|rd|th)", w):
                tok.pos = "JJ"
            elif re.fullmatch(r"\d[\d,.]*", w) or w in NUMBER_WORDS:
                tok.pos = "CD"
            elif w in MONTHS:
                tok.pos = "NNP"
            elif w in ADVERBS:
                tok.pos = "RB" if w not in ("yesterday", "today", "tomorrow", "tonight") else "NN"
            elif w.endswith("ly"):
                tok.pos = "RB"
            else:
                lemma = _verb_lemma(w)
                if lemma is not None and not self._nounish_context(tokens, i):
                    tok.pos = self._verb_pos(w, lemma, tokens, i)
                elif tok.text[:1].isupper():
                    tok.pos = "NNP"
                elif w.endswith(("ful", "ous", "ive", "al", "ic")) or w in ("new", "first", "beautiful", "sick", "grand", "nuclear", "neutron-induced", "space"):
                    tok.pos = "JJ"
                elif w.endswith("s") and not w.endswith("ss"):
                    tok.pos = "NNS"
                else:
                    tok.pos = "NN"
        # sentence-initial proper names keep NNP via gazetteer
        for tok in tokens:
            if tok.lower in PERSON_NAMES | PLACE_NAMES | ORG_NAMES:
                tok.pos = "NNP"

    def _next_is_base_verb(self, tokens: list[Token], i: int) -> bool:
        if i + 1 >= len(tokens):
            return False
        nxt = tokens[i + 1].lower
        return _verb_lemma(nxt) == nxt and nxt not in TEMPORAL_NOUNS

    def _nounish_context(self, tokens: list[Token], i: int) -> bool:
        # "the play", "its doors": determiner forces a noun reading
        return i > 0 and tokens[i - 1].lower in DETERMINERS | POSS_PRONOUNS

    def _verb_pos(self, word: str, lemma: str, tokens: list[Token], i: int) -> str:
        if word in IRREGULAR_PARTICIPLE and i > 0 and tokens[i - 1].lower in BE_FORMS:
            return "VBN"
        if word in IRREGULAR_PAST and IRREGULAR_PAST[word] != word:
            return "VBD"
        if word.endswith("ing"):
            return "VBG"
        if word.endswith("ed"):
            prev = tokens[i - 1].lower if i > 0 else ""
            return "VBN" if prev in BE_FORMS or prev in AUX_FORMS else "VBD"
        if word.endswith("s") and word != lemma:
            return "VBZ"
        prev = tokens[i - 1].lower if i > 0 else ""
        if prev == "to" or prev in MODALS or prev in AUX_FORMS:
            return "VB"
        return "VBP"

    def _ner(self, tokens: list[Token]) -> None:
        spans = []
        for tok in tokens:
            w = tok.lower
            if w in PERSON_NAMES:
                spans.append((tok.start, tok.end, "PER"))
            elif w in PLACE_NAMES:
                spans.append((tok.start, tok.end, "LOC"))
            elif w in ORG_NAMES:
                spans.append((tok.start, tok.end, "ORG"))
            elif w in MONTHS or re.fullmatch(r"(1[5-9]|20)\d\d", w):
                spans.append((tok.start, tok.end, "DATE"))
            elif w in TIME_NUMBERS:
                spans.append((tok.start, tok.end, "TIME"))
        projected = project_spans([(t.start, t.end) for t in tokens], spans)
        for tok, label in zip(tokens, projected):
            tok.ner = label

    def _verb_indices(self, tokens: list[Token]) -> list[int]:
        return [i for i, t in enumerate(tokens) if t.pos.startswith("VB")]

    def _verb_run(self, tokens: list[Token], start: int) -> list[int]:
        # a contiguous verb run, crossing "to" only toward another verb
        group = [start]
        j = start + 1
        while j < len(tokens):
            if tokens[j].pos.startswith("VB") or (
                tokens[j].pos == "TO" and j + 1 < len(tokens) and tokens[j + 1].pos.startswith("VB")
            ):
                group.append(j)
                j += 1
            else:
                break
        return group

    def _srl(self, tokens: list[Token]) -> int:
        verbs = self._verb_indices(tokens)
        if not verbs:
            return 0
        group = self._verb_run(tokens, verbs[0])

        # wh-question with do-support: auxiliary verb, then the subject,
        # then the main verb; both verb groups are labeled V
        wh_lead = tokens[0].lower in WH_WORDS
        aux_only = all(tokens[i].lower in AUX_FORMS for i in group)
        later = [i for i in verbs if i > group[-1] + 1]
        if wh_lead and aux_only and later:
            main = self._verb_run(tokens, later[0])
            for i in group + main:
                tokens[i].srl = "V"
            self._label_nominal_run(tokens, group[-1] + 1, main[0], "ARG0")
            main_lemma = None
            for i in reversed(main):
                main_lemma = _verb_lemma(tokens[i].lower)
                if main_lemma:
                    break
            self._label_postverb(tokens, main[-1] + 1, False, False, main_lemma)
            return 1

        for i in group:
            tokens[i].srl = "V"
        v_first, v_last = group[0], group[-1]

        copula = all(tokens[i].lower in BE_FORMS for i in group)
        passive = (
            not copula
            and tokens[v_first].lower in BE_FORMS
            and any(tokens[i].pos == "VBN" for i in group)
        )
        main_lemma = None
        for i in reversed(group):
            main_lemma = _verb_lemma(tokens[i].lower)
            if main_lemma:
                break

        subject_label = "ARG1" if (copula or passive) else "ARG0"
        self._label_nominal_run(tokens, 0, v_first, subject_label)
        self._label_postverb(tokens, v_last + 1, copula, passive, main_lemma)
        return 1

    def _label_nominal_run(self, tokens: list[Token], lo: int, hi: int, label: str) -> None:
        # the noun phrase nearest the verb; leading adverbs/conjunctions and
        # fronted prepositional phrases stay unlabeled here
        idxs = [
            i
            for i in range(lo, hi)
            if tokens[i].pos in ("DT", "PRP$", "PRP", "JJ", "NN", "NNS", "NNP", "NNPS", "CD")
        ]
        if not idxs:
            return
        run = [idxs[-1]]
        for i in reversed(idxs[:-1]):
            if i == run[0] - 1:
                run.insert(0, i)
        # a fronted "On December 17, 1903," phrase: everything before a
        # comma that precedes the subject run is temporal, not the subject
        for i in run:
            tokens[i].srl = label
        if tokens[lo].lower in PREPOSITIONS and any(
            tokens[i].ner in ("DATE", "TIME") for i in range(lo, run[0])
        ):
            for i in range(lo, run[0]):
                if not tokens[i].is_punct:
                    tokens[i].srl = "TMP"

    def _label_postverb(self, tokens, start: int, copula: bool, passive: bool, main_lemma) -> None:
        i = start
        object_label = "ARG2" if copula else "ARG1"
        seen_object = False
        while i < len(tokens):
            tok = tokens[i]
            w = tok.lower
            if tok.is_punct:
                i += 1
                continue
            if w == "because":
                for j in range(i, len(tokens)):
                    if not tokens[j].is_punct:
                        tokens[j].srl = "CAU"
                return
            if w == "by" and passive:
                i = self._label_pp(tokens, i, "ARG0")
                continue
            if w in PREPOSITIONS:
                label = self._pp_label(tokens, i, copula, main_lemma, seen_object)
                if label == object_label:
                    seen_object = True
                i = self._label_pp(tokens, i, label)
                continue
            if w in ("last", "every") and i + 1 < len(tokens) and tokens[i + 1].lower in TEMPORAL_NOUNS:
                tokens[i].srl = "TMP"
                tokens[i + 1].srl = "TMP"
                i += 2
                continue
            if w in ("yesterday", "today", "tomorrow", "tonight"):
                tok.srl = "TMP"
                i += 1
                continue
            if tok.pos in ("DT", "PRP$", "JJ", "NN", "NNS", "NNP", "NNPS", "CD", "PRP"):
                tok.srl = object_label
                seen_object = True
                i += 1
                continue
            i += 1

    def _pp_label(self, tokens, i: int, copula: bool, main_lemma, seen_object: bool) -> str:
        head_ner = None
        temporal = False
        for j in range(i + 1, min(i + 6, len(tokens))):
            if tokens[j].lower in PREPOSITIONS or tokens[j].pos.startswith("VB"):
                break
            if tokens[j].ner in ("DATE", "TIME"):
                temporal = True
            if tokens[j].lower in TEMPORAL_NOUNS:
                temporal = True
            if tokens[j].ner is not None and head_ner is None:
                head_ner = tokens[j].ner
        w = tokens[i].lower
        if temporal and w in ("in", "on", "at", "after", "before", "during"):
            return "TMP"
        if copula:
            return "ARG2"
        if w == "to" and main_lemma in MOTION_VERBS:
            return "ARG1"
        if w == "of" and seen_object:
            return "ARG2" if copula else "ARG1"
        if head_ner == "LOC" and seen_object:
            return "LOC"
        if not seen_object:
            return "ARG1"
        return "LOC" if head_ner == "LOC" else "MNR"

    def _label_pp(self, tokens, i: int, label: str) -> int:
        tokens[i].srl = label
        j = i + 1
        while j < len(tokens):
            tok = tokens[j]
            if tok.is_punct:
                nxt = tokens[j + 1] if j + 1 < len(tokens) else None
                if nxt is not None and nxt.ner in ("DATE", "TIME") and label == "TMP":
                    j += 1
                    continue
                break
            if tok.lower in PREPOSITIONS and tok.lower == "of":
                tok.srl = label
                j += 1
                continue
            if tok.lower in PREPOSITIONS or tok.pos.startswith("VB") or tok.lower == "because":
                break
            if tok.lower in ("yesterday", "today", "tomorrow", "tonight"):
                break
            if tok.lower in ("last", "every") and j + 1 < len(tokens) and tokens[
                j + 1
            ].lower in TEMPORAL_NOUNS:
                break
            if tok.pos in ("DT", "PRP$", "JJ", "NN", "NNS", "NNP", "NNPS", "CD", "PRP"):
                tok.srl = label
                j += 1
                continue
            break
        return j


class AllenNlpBackend:
    """SRL via a pretrained structured-prediction model; heavyweight."""

    name = "allennlp"

    def __init__(self):
        try:
            from allennlp.predictors.predictor import Predictor  # noqa: F401
        except ImportError as exc:
            raise BackendUnavailable(
                "allennlp is not installed; use --backend builtin or install the model stack"
            ) from exc

    def tag(self, sentence: str) -> dict:  # pragma: no cover - needs models
        raise BackendUnavailable("model loading not wired in this environment")


class SpacyBackend:
    """POS/NER via a pretrained pipeline; heavyweight."""

    name = "spacy"

    def __init__(self):
        try:
            import spacy  # noqa: F401
        except ImportError as exc:
            raise BackendUnavailable(
                "spacy is not installed; use --backend builtin or install the model stack"
            ) from exc

    def tag(self, sentence: str) -> dict:  # pragma: no cover - needs models
        raise BackendUnavailable("model loading not wired in this environment")


BACKENDS = {
    "builtin": BuiltinRuleTagger,
    "allennlp": AllenNlpBackend,
    "spacy": SpacyBackend,
}


def load_backend(name: str):
    try:
        cls = BACKENDS[name]
    except KeyError:
        raise BackendUnavailable(f"unknown backend {name!r}") from None
    return cls()
