"""Longest-common-substring matching of tag-set sequences.

Sequences are first canonicalized through the equivalence policy (noun and
present-tense POS classes collapse), then matched with a suffix automaton —
a linear-time generalized suffix structure — so the whole pattern database
can be scanned cheaply per input sentence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import (
    DECLARATIVE,
    EquivalencePolicy,
    MATCH_POLICY,
    TagSetSequence,
    tag_sets_equal,
)

PERFECT = "perfect"
SUCCESSFUL = "successful"
UNSUCCESSFUL = "unsuccessful"


class _SuffixAutomaton:
    """Suffix automaton over an arbitrary hashable-symbol sequence."""

    __slots__ = ("lens", "links", "transitions", "first_end")

    def __init__(self, symbols):
        self.lens = [0]
        self.links = [-1]
        self.transitions: list[dict] = [{}]
        self.first_end = [-1]
        last = 0
        for i, c in enumerate(symbols):
            cur = len(self.lens)
            self.lens.append(self.lens[last] + 1)
            self.links.append(-1)
            self.transitions.append({})
            self.first_end.append(i)
            p = last
            while p != -1 and c not in self.transitions[p]:
                self.transitions[p][c] = cur
                p = self.links[p]
            if p == -1:
                self.links[cur] = 0
            else:
                q = self.transitions[p][c]
                if self.lens[p] + 1 == self.lens[q]:
                    self.links[cur] = q
                else:
                    clone = len(self.lens)
                    self.lens.append(self.lens[p] + 1)
                    self.links.append(self.links[q])
                    self.transitions.append(dict(self.transitions[q]))
                    self.first_end.append(self.first_end[q])
                    while p != -1 and self.transitions[p].get(c) == q:
                        self.transitions[p][c] = clone
                        p = self.links[p]
                    self.links[q] = clone
                    self.links[cur] = clone
            last = cur


def lcs(
    x: TagSetSequence, xs: TagSetSequence, policy: EquivalencePolicy = MATCH_POLICY
) -> tuple[int, int, int]:
    """Longest contiguous common substring under the policy.

    Returns ``(length, x_start, xs_start)``; length 0 when nothing matches.
    Among equally long matches the leftmost position in ``xs`` wins.
    """
    if len(x) == 0 or len(xs) == 0:
        return (0, 0, 0)
    automaton = _SuffixAutomaton([policy.key(t) for t in x])
    state, length = 0, 0
    best, best_state, best_end = 0, 0, -1
    for j, c in enumerate(policy.key(t) for t in xs):
        while state and c not in automaton.transitions[state]:
            state = automaton.links[state]
            length = automaton.lens[state]
        if c in automaton.transitions[state]:
            state = automaton.transitions[state][c]
            length += 1
        else:
            state, length = 0, 0
        if length > best:
            best, best_state, best_end = length, state, j
    if best == 0:
        return (0, 0, 0)
    x_start = automaton.first_end[best_state] - best + 1
    return (best, x_start, best_end - best + 1)


def _has_svo(z: TagSetSequence) -> bool:
    v_positions = [i for i, ts in enumerate(z) if ts.is_verb]
    if not v_positions:
        return False
    v = v_positions[0]
    return any(ts.is_argn for ts in z[:v]) and any(ts.is_argn for ts in z[v + 1 :])


def classify(
    z: TagSetSequence,
    x: TagSetSequence,
    xs: TagSetSequence,
    policy: EquivalencePolicy = MATCH_POLICY,
) -> str:
    """Perfect when z = x = xs elementwise; successful when z carries a
    subject, a verb, and an object; unsuccessful otherwise."""
    if not _has_svo(z):
        return UNSUCCESSFUL
    if (
        len(z) == len(x) == len(xs)
        and all(tag_sets_equal(a, b, policy) for a, b in zip(x, xs))
    ):
        return PERFECT
    return SUCCESSFUL


@dataclass(frozen=True)
class MatchResult:
    entry_id: int
    z: TagSetSequence
    x_start: int
    xs_start: int
    match_class: str


def best_match(db, xs: TagSetSequence, policy: EquivalencePolicy = MATCH_POLICY):
    """All pattern pairs achieving the longest LCS against ``xs``.

    The LCS is computed once per distinct declarative pattern.  Ties are
    ordered by shorter pattern first, then lower entry id; an empty database
    or a database with no overlap at all yields an empty list.
    """
    entries = list(db)
    if not entries:
        return []
    by_pattern: dict[tuple, tuple[int, int, int]] = {}
    for entry in entries:
        key = tuple(policy.key(t) for t in entry.x)
        if key not in by_pattern:
            by_pattern[key] = lcs(entry.x, xs, policy)
    best_len = max(result[0] for result in by_pattern.values())
    if best_len == 0:
        return []
    winners = [
        entry
        for entry in entries
        if by_pattern[tuple(policy.key(t) for t in entry.x)][0] == best_len
    ]
    winners.sort(key=lambda e: (len(e.x), e.id))
    out = []
    for entry in winners:
        length, x_start, xs_start = by_pattern[tuple(policy.key(t) for t in entry.x)]
        z = TagSetSequence(items=tuple(xs.items[xs_start : xs_start + length]), kind=DECLARATIVE)
        out.append(
            (
                MatchResult(
                    entry_id=entry.id,
                    z=z,
                    x_start=x_start,
                    xs_start=xs_start,
                    match_class=classify(z, entry.x, xs, policy),
                ),
                entry,
            )
        )
    return out
