import random

from hypothesis import given, settings, strategies as st

from helpers import lcs_oracle, seq

from qapgen.db import TsspDb, TsspEntry
from qapgen.matcher import PERFECT, SUCCESSFUL, UNSUCCESSFUL, best_match, classify, lcs
from qapgen.model import DECLARATIVE, INTERROGATIVE, MATCH_POLICY, TagSet, TagSetSequence

X_JOHN = "[ARG0/NNP/PER/] [V/VBD//] [ARG1/NNP/LOC/] [TMP/NN//]"


def _random_sequence(rng, max_len=20, alphabet=30):
    # alphabet of 30 canonical symbols spread over srl/pos/ner combinations,
    # including noun-class and present-class variants that must collapse
    srls = ["ARG0", "ARG1", "ARG2", "V", "TMP", "LOC"]
    poss = ["NN", "NNP", "NNS", "VB", "VBD", "VBZ", "VBP", "JJ", "IN", "CD"]
    ners = [None, "PER", "LOC"]
    items = []
    for _ in range(rng.randint(1, max_len)):
        items.append(
            TagSet(srl=rng.choice(srls), pos=rng.choice(poss), ner=rng.choice(ners))
        )
    return TagSetSequence(items=tuple(items), kind=DECLARATIVE)


class TestLcs:
    def test_equal_sequences(self):
        x = seq(X_JOHN)
        xs = seq(X_JOHN)
        assert lcs(x, xs) == (4, 0, 0)

    def test_disjoint_alphabets(self):
        x = seq("[ARG0/NN//] [V/VBD//]")
        xs = seq("[TMP/CD/DATE/] [LOC/NNP/LOC/]")
        assert lcs(x, xs)[0] == 0

    def test_policy_classes_collapse(self):
        x = seq("[ARG0/NNP//] [V/VBZ//] [ARG1/NN//]")
        xs = seq("[ARG0/NNS//] [V/VBP//] [ARG1/NNPS//]")
        assert lcs(x, xs)[0] == 3

    def test_starts_are_valid_occurrences(self):
        x = seq("[TMP/NN//] [ARG0/NN//] [V/VBD//] [ARG1/NN//]")
        xs = seq("[ARG0/NNS//] [V/VBD//] [ARG1/NNP//] [LOC/NN//]")
        length, x_start, xs_start = lcs(x, xs)
        assert length == 3
        for k in range(length):
            assert MATCH_POLICY.key(x[x_start + k]) == MATCH_POLICY.key(xs[xs_start + k])

    def test_leftmost_xs_position_wins(self):
        x = seq("[ARG0/NN//]")
        xs = seq("[V/VBD//] [ARG0/NN//] [TMP/NN//] [ARG0/NN//]")
        assert lcs(x, xs) == (1, 0, 1)

    def test_symmetry_of_length(self):
        rng = random.Random(7)
        for _ in range(200):
            a, b = _random_sequence(rng), _random_sequence(rng)
            assert lcs(a, b)[0] == lcs(b, a)[0]

    def test_length_bounded(self):
        rng = random.Random(11)
        for _ in range(200):
            a, b = _random_sequence(rng), _random_sequence(rng)
            assert lcs(a, b)[0] <= min(len(a), len(b))

    def test_self_match(self):
        rng = random.Random(13)
        for _ in range(100):
            a = _random_sequence(rng)
            assert lcs(a, a) == (len(a), 0, 0)

    def test_agrees_with_dp_oracle_random(self):
        rng = random.Random(42)
        for _ in range(1500):
            a, b = _random_sequence(rng), _random_sequence(rng)
            length, x_start, xs_start = lcs(a, b)
            assert length == lcs_oracle(a, b)[0]
            for k in range(length):
                assert MATCH_POLICY.key(a[x_start + k]) == MATCH_POLICY.key(b[xs_start + k])

    @given(st.data())
    @settings(max_examples=200)
    def test_agrees_with_dp_oracle_hypothesis(self, data):
        srls = st.sampled_from(["ARG0", "ARG1", "V", "TMP"])
        poss = st.sampled_from(["NN", "NNS", "VBD", "VBZ", "VBP"])
        items = st.builds(TagSet, srl=srls, pos=poss)
        a = TagSetSequence(tuple(data.draw(st.lists(items, min_size=1, max_size=12))), DECLARATIVE)
        b = TagSetSequence(tuple(data.draw(st.lists(items, min_size=1, max_size=12))), DECLARATIVE)
        assert lcs(a, b)[0] == lcs_oracle(a, b)[0]


class TestClassify:
    def test_perfect(self):
        x, xs = seq(X_JOHN), seq(X_JOHN)
        z = seq(X_JOHN)
        assert classify(z, x, xs) == PERFECT

    def test_missing_object_unsuccessful(self):
        z = seq("[ARG0/NNP/PER/] [V/VBD//]")
        assert classify(z, seq(X_JOHN), seq(X_JOHN)) == UNSUCCESSFUL

    def test_successful_not_perfect(self):
        x = seq("[ARG0/NN//] [V/VBD//] [ARG1/NN//]")
        xs = seq("[ARG0/NN//] [V/VBD//] [ARG1/NN//] [TMP/NN//]")
        z = seq("[ARG0/NN//] [V/VBD//] [ARG1/NN//]")
        assert classify(z, x, xs) == SUCCESSFUL


def _entry(idx, x_text):
    return TsspEntry(
        id=idx,
        x=seq(x_text),
        y=seq("[///who] [V/VBD//] [ARG1/NN//]", INTERROGATIVE),
        decl="d",
        interr="i",
        origin="seed",
        created_at="2026-01-01T00:00:00+00:00",
    )


class TestBestMatch:
    def test_single_perfect_entry(self, john_pair_db):
        xs = seq(X_JOHN)
        results = best_match(john_pair_db, xs)
        assert len(results) == 1
        match, entry = results[0]
        assert match.match_class == PERFECT
        assert len(match.z) == 4

    def test_empty_db(self):
        assert best_match(TsspDb(), seq(X_JOHN)) == []

    def test_no_overlap_returns_empty(self):
        db = TsspDb([_entry(1, "[ARG0/NN//] [V/VBD//] [ARG1/NN//]")])
        assert best_match(db, seq("[LOC/IN//] [TMP/CD/DATE/]")) == []

    def test_tie_break_shorter_pattern_then_id(self):
        db = TsspDb(
            [
                _entry(1, "[ARG0/NN//] [V/VBD//] [ARG1/NN//] [TMP/NN//]"),
                _entry(2, "[ARG0/NN//] [V/VBD//] [ARG1/NN//]"),
                _entry(3, "[ARG0/NN//] [V/VBD//] [ARG1/NN//]"),
            ]
        )
        xs = seq("[ARG0/NNS//] [V/VBD//] [ARG1/NNP//]")
        results = best_match(db, xs)
        assert [entry.id for _, entry in results] == [2, 3, 1]
        assert all(len(m.z) == 3 for m, _ in results)

    def test_deterministic(self, seeded_db):
        xs = seq(X_JOHN)
        first = [(m.entry_id, m.match_class) for m, _ in best_match(seeded_db, xs)]
        second = [(m.entry_id, m.match_class) for m, _ in best_match(seeded_db, xs)]
        assert first == second
