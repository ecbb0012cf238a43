"""Static English language tables: contractions, slangs, phrasal verbs,
irregular verbs, coordinating conjunctions, and interrogative pronouns.

All tables ship as editable plain-text files (``key<TAB>value`` per line,
``#`` comments) so they can be extended without touching code.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

LEXICON_FILES = (
    "contractions.tsv",
    "slangs.tsv",
    "phrasal_verbs.tsv",
    "irregular_verbs.tsv",
    "cc_words.tsv",
    "pronouns.tsv",
)

_VOWELS = "aeiou"
# Consonants that double before -ed/-ing (stop -> stopped); ll/ss/ff/zz stems
# like "call" or "miss" are left alone.
_DOUBLING = "bdgkmnprt"


def _read_rows(text: str) -> list[tuple[str, str]]:
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "\t" in line:
            key, value = line.split("\t", 1)
        else:
            key, value = line, ""
        rows.append((key.strip().lower(), value.strip()))
    return rows


@dataclass
class Lexicon:
    contractions: dict[str, str] = field(default_factory=dict)
    slangs: dict[str, str] = field(default_factory=dict)
    phrasal_verbs: set[tuple[str, ...]] = field(default_factory=set)
    irregular_verbs: dict[str, str] = field(default_factory=dict)
    cc_words: set[str] = field(default_factory=set)
    pronouns: list[str] = field(default_factory=list)

    # built on load
    _word_re: re.Pattern | None = None
    _word_map: dict[str, str] = field(default_factory=dict)
    _suffix_rules: list[tuple[re.Pattern, str]] = field(default_factory=list)
    _phrasal_index: dict[str, list[tuple[str, ...]]] = field(default_factory=dict)

    @classmethod
    def load_dir(cls, directory: str | Path) -> "Lexicon":
        directory = Path(directory)
        lex = cls()
        lex.contractions = dict(_read_rows((directory / "contractions.tsv").read_text("utf-8")))
        lex.slangs = dict(_read_rows((directory / "slangs.tsv").read_text("utf-8")))
        lex.phrasal_verbs = {
            tuple(key.split()) for key, _ in _read_rows((directory / "phrasal_verbs.tsv").read_text("utf-8"))
        }
        lex.irregular_verbs = dict(_read_rows((directory / "irregular_verbs.tsv").read_text("utf-8")))
        lex.cc_words = {key for key, _ in _read_rows((directory / "cc_words.tsv").read_text("utf-8"))}
        lex.pronouns = [key for key, _ in _read_rows((directory / "pronouns.tsv").read_text("utf-8"))]
        lex._compile()
        return lex

    @classmethod
    def load_default(cls) -> "Lexicon":
        root = resources.files("qapgen").joinpath("data")
        with resources.as_file(root) as directory:
            return cls.load_dir(directory)

    def _compile(self) -> None:
        for pattern in self.phrasal_verbs:
            if len(pattern) < 2:
                raise ValueError(f"phrasal verb pattern needs >= 2 words: {pattern}")
        word_keys: dict[str, str] = {}
        suffix_keys: dict[str, str] = {}
        for table in (self.contractions, self.slangs):
            for key, value in table.items():
                if key.startswith("'"):
                    suffix_keys[key] = value
                else:
                    word_keys[key] = value
        self._word_map = word_keys
        if word_keys:
            alternation = "|".join(re.escape(k) for k in sorted(word_keys, key=len, reverse=True))
            self._word_re = re.compile(rf"(?<![\w'])(?:{alternation})(?![\w'])", re.IGNORECASE)
        else:
            self._word_re = None
        self._suffix_rules = [
            (re.compile(rf"(?<=\w){re.escape(key)}(?![\w'])", re.IGNORECASE), value)
            for key, value in sorted(suffix_keys.items(), key=lambda kv: len(kv[0]), reverse=True)
        ]
        self._phrasal_index = {}
        for pattern in self.phrasal_verbs:
            self._phrasal_index.setdefault(pattern[0], []).append(pattern)
        for patterns in self._phrasal_index.values():
            patterns.sort(key=len, reverse=True)


def _match_initial_case(replacement: str, source: str) -> str:
    if source[:1].isupper():
        return replacement[:1].upper() + replacement[1:]
    return replacement


def expand_contractions(text: str, lex: Lexicon) -> str:
    """Replace listed contractions and slangs with their full forms.

    Replacement casing follows the source token's initial casing; all other
    text is left byte-identical.
    """
    if lex._word_re is not None:
        text = lex._word_re.sub(
            lambda m: _match_initial_case(lex._word_map[m.group(0).lower()], m.group(0)), text
        )
    for pattern, value in lex._suffix_rules:
        text = pattern.sub(" " + value, text)
    return text


def match_phrasal_verb(tokens: list[str], i: int, lex: Lexicon) -> int:
    """Length of the longest phrasal-verb pattern starting at ``tokens[i]``.

    The first pattern word is compared against the lemma of ``tokens[i]``;
    the particles are compared literally (case-insensitive).  Returns 1 when
    no pattern matches.
    """
    head = _lemma_word(tokens[i].lower(), lex)
    for pattern in lex._phrasal_index.get(head, ()):
        span = len(pattern)
        if i + span > len(tokens):
            continue
        if all(tokens[i + k].lower() == pattern[k] for k in range(1, span)):
            return span
    return 1


def _vowel_groups(word: str) -> int:
    return len(re.findall(rf"[{_VOWELS}]+", word))


def _restore_e(stem: str) -> str:
    # dance -> danc, argue -> argu: soft-c and u endings always take e back
    if stem.endswith("c") or stem.endswith("u"):
        return stem + "e"
    # like -> lik: single-syllable consonant-vowel-consonant stems
    if (
        _vowel_groups(stem) == 1
        and len(stem) >= 3
        and stem[-1] not in _VOWELS + "wxy"
        and stem[-2] in _VOWELS
        and stem[-3] not in _VOWELS
    ):
        return stem + "e"
    return stem


def _strip_doubled(stem: str) -> str:
    if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] in _DOUBLING:
        return stem[:-1]
    return stem


def _lemma_word(word: str, lex: Lexicon) -> str:
    if word in lex.irregular_verbs:
        return lex.irregular_verbs[word]
    if len(word) > 4 and word.endswith(("ies", "ied")):
        return word[:-3] + "y"
    if len(word) > 4 and word.endswith("eed"):
        return word[:-1]
    if len(word) > 3 and word.endswith("ed"):
        stem = word[:-2]
        shortened = _strip_doubled(stem)
        if shortened != stem:
            return shortened
        return _restore_e(stem)
    if len(word) > 4 and word.endswith("ing"):
        stem = word[:-3]
        if not any(c in _VOWELS for c in stem):
            return word
        shortened = _strip_doubled(stem)
        if shortened != stem:
            return shortened
        return _restore_e(stem)
    if len(word) > 3 and word.endswith(("ches", "shes", "sses", "xes", "zes", "oes")):
        return word[:-2]
    if len(word) > 3 and word.endswith("s") and not word.endswith("ss") and not word.endswith("us"):
        return word[:-1]
    return word


def lemma(verb_phrase: str, lex: Lexicon) -> str:
    """Lemma of a verb or phrasal verb; particles are preserved.

    The head word goes through the irregular table first, then suffix rules;
    unknown forms pass through the rules unchanged.
    """
    words = verb_phrase.split()
    if not words:
        return verb_phrase
    head = _lemma_word(words[0].lower(), lex)
    return " ".join([head] + words[1:])


def conjugate_do(tense: str, subject_number: str) -> str:
    """Form of the do-support helping verb for the given tense and number."""
    if tense == "past":
        return "did"
    return "does" if subject_number == "singular" else "do"
