"""Tag sets, tag-set sequences, and the POS equivalence policy.

A tag set bundles up to four feature tags for one basic unit of a sentence:
a semantic-role label, a part-of-speech tag, a named-entity class, and an
interrogative pronoun.  Its canonical textual form is ``[t1/t2/t3/t4]`` with
absent slots left empty, e.g. ``[ARG1/NNP/PER/]`` or ``[///where]``.  That
form is used verbatim in database files, logs, and service payloads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import MalformedTagSet

ARGN_LABELS = frozenset({"ARG0", "ARG1", "ARG2", "ARG3", "ARG4", "ARG5"})
VERB_LABEL = "V"

NOUN_POS = frozenset({"NN", "NNP", "NNS", "NNPS"})
PRESENT_POS = frozenset({"VBP", "VBZ"})
PLURAL_POS = frozenset({"NNS", "NNPS"})
VERB_POS = frozenset({"VB", "VBD", "VBG", "VBN", "VBP", "VBZ", "MD"})

# Penn Treebank tags plus the punctuation tags emitted by common tokenizers.
PENN_POS = frozenset(
    {
        "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD",
        "NN", "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR",
        "RBS", "RP", "SYM", "TO", "UH", "VB", "VBD", "VBG", "VBN", "VBP",
        "VBZ", "WDT", "WP", "WP$", "WRB",
        "#", "$", "''", "(", ")", ",", ".", ":", "``", "-LRB-", "-RRB-", "HYPH",
    }
)

DECLARATIVE = "declarative"
INTERROGATIVE = "interrogative"

# ArgM subtypes are open-ended, so anything label-shaped is accepted.
_SRL_RE = re.compile(r"^(?:ARG[0-5]|V|[A-Z]{2,5})$")
_PRONOUN_RE = re.compile(r"^[a-z]+(?: [a-z]+)*$")
_NER_RE = re.compile(r"^[A-Z][A-Z_]{1,11}$")


def _check_srl(label: str) -> None:
    if not _SRL_RE.match(label):
        raise MalformedTagSet(f"unknown SRL label {label!r}")


def _check_pos(label: str) -> None:
    if label not in PENN_POS:
        raise MalformedTagSet(f"unknown POS label {label!r}")


@dataclass(frozen=True)
class TagSet:
    """One ``[SRL/POS/NER/pronoun]`` tag set.

    At least one of ``srl`` and ``pronoun`` must be present.  A pronoun slot
    is pure: when ``pronoun`` is set the other three slots must be empty, as
    in ``[///where]``.
    """

    srl: str | None = None
    pos: str | None = None
    ner: str | None = None
    pronoun: str | None = None

    def __post_init__(self) -> None:
        if self.pronoun is not None:
            if self.srl is not None or self.pos is not None or self.ner is not None:
                raise MalformedTagSet("pronoun tag sets carry no other tags")
            if not _PRONOUN_RE.match(self.pronoun):
                raise MalformedTagSet(f"bad pronoun slot {self.pronoun!r}")
            return
        if self.srl is None:
            raise MalformedTagSet("tag set needs an SRL label or a pronoun")
        _check_srl(self.srl)
        if self.pos is not None:
            _check_pos(self.pos)
        if self.ner is not None and not _NER_RE.match(self.ner):
            raise MalformedTagSet(f"bad NER label {self.ner!r}")

    @property
    def is_verb(self) -> bool:
        return self.srl == VERB_LABEL

    @property
    def is_argn(self) -> bool:
        return self.srl in ARGN_LABELS

    @property
    def is_argm(self) -> bool:
        return self.srl is not None and self.srl != VERB_LABEL and self.srl not in ARGN_LABELS

    @property
    def is_pronoun(self) -> bool:
        return self.pronoun is not None

    def render(self) -> str:
        return "[%s/%s/%s/%s]" % (
            self.srl or "",
            self.pos or "",
            self.ner or "",
            self.pronoun or "",
        )

    def __str__(self) -> str:
        return self.render()


def render_tag_set(ts: TagSet) -> str:
    """Canonical bracketed form; inverse of :func:`parse_tag_set`."""
    return ts.render()


def parse_tag_set(s: str) -> TagSet:
    """Parse a canonical ``[t1/t2/t3/t4]`` string back into a :class:`TagSet`."""
    if not (s.startswith("[") and s.endswith("]")):
        raise MalformedTagSet(f"not a bracketed tag set: {s!r}")
    parts = s[1:-1].split("/")
    if len(parts) != 4:
        raise MalformedTagSet(f"expected 4 slots in {s!r}, got {len(parts)}")
    srl, pos, ner, pronoun = (p if p else None for p in parts)
    if pronoun is not None:
        pronoun = pronoun.lower()
    return TagSet(srl=srl, pos=pos, ner=ner, pronoun=pronoun)


@dataclass(frozen=True)
class EquivalencePolicy:
    """Slot-level equality used by the matcher.

    The listed noun POS tags are mutually equal, as are the listed
    present-tense verb tags; every other slot compares literally.
    """

    noun_class: frozenset[str] = field(default=NOUN_POS)
    present_class: frozenset[str] = field(default=PRESENT_POS)

    def pos_key(self, pos: str | None) -> str | None:
        if pos is None:
            return None
        if pos in self.noun_class:
            return min(self.noun_class)
        if pos in self.present_class:
            return min(self.present_class)
        return pos

    def key(self, ts: TagSet) -> tuple:
        return (ts.srl, self.pos_key(ts.pos), ts.ner, ts.pronoun)


MATCH_POLICY = EquivalencePolicy()


def tag_sets_equal(a: TagSet, b: TagSet, policy: EquivalencePolicy = MATCH_POLICY) -> bool:
    return policy.key(a) == policy.key(b)


@dataclass(frozen=True)
class TagSetSequence:
    """Ordered tag sets for one simple sentence.

    ``kind`` distinguishes declarative patterns (X) from interrogative
    patterns (Y); the verb-multiplicity invariant depends on it.
    """

    items: tuple[TagSet, ...]
    kind: str

    def __post_init__(self) -> None:
        if self.kind not in (DECLARATIVE, INTERROGATIVE):
            raise ValueError(f"bad sequence kind {self.kind!r}")
        object.__setattr__(self, "items", tuple(self.items))

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __getitem__(self, i):
        return self.items[i]

    def render(self) -> str:
        return " ".join(ts.render() for ts in self.items)

    def __str__(self) -> str:
        return self.render()

    def violations(self) -> list[str]:
        """Invariant breaches, empty when the sequence is well formed."""
        problems = []
        prev_srl = None
        for ts in self.items:
            if ts.srl is not None and ts.srl == prev_srl:
                problems.append(f"consecutive tag sets share SRL label {ts.srl}")
            prev_srl = ts.srl
        counts: dict[str, int] = {}
        for ts in self.items:
            if ts.srl is not None:
                counts[ts.srl] = counts.get(ts.srl, 0) + 1
        for label, n in sorted(counts.items()):
            if label == VERB_LABEL:
                limit = 1 if self.kind == DECLARATIVE else 2
                if n > limit:
                    problems.append(f"{n} V tag sets in a {self.kind} sequence (max {limit})")
            elif n > 1:
                problems.append(f"SRL label {label} appears in {n} tag sets")
        return problems


_TAG_SET_RE = re.compile(r"\[[^\[\]]*\]")


def parse_sequence(text: str, kind: str) -> TagSetSequence:
    """Parse a space-separated run of canonical tag sets.

    Splits on bracket boundaries, so multiword pronoun slots like
    ``[///how many]`` survive.
    """
    tokens = _TAG_SET_RE.findall(text)
    if _TAG_SET_RE.sub("", text).strip():
        raise MalformedTagSet(f"stray text outside tag sets in {text!r}")
    items = tuple(parse_tag_set(tok) for tok in tokens)
    return TagSetSequence(items=items, kind=kind)


class TagSetBag:
    """Insertion-ordered set of tag sets, deduplicated under a policy.

    Used by the generation algebra: membership, difference, intersection and
    union all compare members through the policy, while the concrete tag sets
    of the left-hand operand are preserved.
    """

    def __init__(self, members=(), policy: EquivalencePolicy = MATCH_POLICY):
        self.policy = policy
        self._members: list[TagSet] = []
        self._keys: set[tuple] = set()
        for m in members:
            self.add(m)

    @classmethod
    def from_sequence(cls, seq: TagSetSequence, policy: EquivalencePolicy = MATCH_POLICY) -> "TagSetBag":
        return cls(seq.items, policy=policy)

    def add(self, ts: TagSet) -> None:
        key = self.policy.key(ts)
        if key not in self._keys:
            self._keys.add(key)
            self._members.append(ts)

    def __contains__(self, ts: TagSet) -> bool:
        return self.policy.key(ts) in self._keys

    def __iter__(self):
        return iter(self._members)

    def __len__(self) -> int:
        return len(self._members)

    def members(self) -> tuple[TagSet, ...]:
        return tuple(self._members)

    def difference(self, other: "TagSetBag") -> "TagSetBag":
        return TagSetBag((m for m in self._members if m not in other), policy=self.policy)

    def intersection(self, other: "TagSetBag") -> "TagSetBag":
        return TagSetBag((m for m in self._members if m in other), policy=self.policy)

    def union(self, other: "TagSetBag") -> "TagSetBag":
        out = TagSetBag(self._members, policy=self.policy)
        for m in other:
            out.add(m)
        return out

    def __repr__(self) -> str:
        return "TagSetBag({%s})" % ", ".join(m.render() for m in self._members)
