import pytest
from hypothesis import given, strategies as st

from qapgen.lexicon import conjugate_do, expand_contractions, lemma, match_phrasal_verb


class TestExpandContractions:
    def test_contraction_and_slang(self, lex):
        assert expand_contractions("I'm gonna leave", lex) == "I am going to leave"

    def test_empty(self, lex):
        assert expand_contractions("", lex) == ""

    def test_suffix_and_abbreviation(self, lex):
        assert expand_contractions("she's here, e.g., now", lex) == "she is here, for example, now"

    def test_initial_casing_preserved(self, lex):
        assert expand_contractions("Gonna go", lex) == "Going to go"
        assert expand_contractions("Don't stop", lex) == "Do not stop"

    def test_negation_is_whole_word(self, lex):
        assert expand_contractions("can't", lex) == "cannot"
        assert expand_contractions("They didn't win", lex) == "They did not win"

    def test_untouched_text_is_byte_identical(self, lex):
        text = "plain words stay;  exactly -- as, written."
        assert expand_contractions(text, lex) == text

    def test_idempotent_on_samples(self, lex):
        samples = [
            "I'm gonna leave",
            "she's here, e.g., now",
            "They didn't win, i.e., they lost",
            "You've gotta see it",
            "Lemme in, won't ya?",
        ]
        for text in samples:
            once = expand_contractions(text, lex)
            assert expand_contractions(once, lex) == once

    @given(
        st.lists(
            st.sampled_from(
                ["I'm", "gonna", "don't", "she's", "e.g.", "plain", "words", "Boston,", "it."]
            ),
            max_size=8,
        )
    )
    def test_idempotent_random(self, lex, words):
        text = " ".join(words)
        once = expand_contractions(text, lex)
        assert expand_contractions(once, lex) == once


class TestPhrasalVerbs:
    def test_prepositional_verb_span(self, lex):
        assert match_phrasal_verb(["traveled", "to", "Boston"], 0, lex) == 2

    def test_no_particle(self, lex):
        assert match_phrasal_verb(["slept"], 0, lex) == 1

    def test_three_word_pattern(self, lex):
        assert match_phrasal_verb(["is", "about", "to", "leave"], 0, lex) == 3

    def test_pattern_must_fit(self, lex):
        assert match_phrasal_verb(["traveled"], 0, lex) == 1
        assert match_phrasal_verb(["traveled", "slowly"], 0, lex) == 1

    def test_longest_match_is_maximal(self, lex):
        # brute force: no lexicon pattern longer than the returned span matches
        cases = [
            ["is", "going", "to", "leave"],
            ["took", "off", "quickly"],
            ["looked", "after", "the", "children"],
            ["walked", "to", "school"],
        ]
        for tokens in cases:
            span = match_phrasal_verb(tokens, 0, lex)
            head = lemma(tokens[0], lex)
            for pattern in lex.phrasal_verbs:
                if pattern[0] != head or len(pattern) <= span:
                    continue
                fits = len(pattern) <= len(tokens) and all(
                    tokens[k].lower() == pattern[k] for k in range(1, len(pattern))
                )
                assert not fits, f"{pattern} outranks span {span} on {tokens}"


class TestLemma:
    def test_particles_preserved(self, lex):
        assert lemma("flew to", lex) == "fly to"

    def test_fixed_point(self, lex):
        assert lemma("fly", lex) == "fly"

    def test_regular_ed(self, lex):
        assert lemma("traveled", lex) == "travel"

    @pytest.mark.parametrize(
        "form,expected",
        [
            ("studies", "study"),
            ("studied", "study"),
            ("stopped", "stop"),
            ("planned", "plan"),
            ("called", "call"),
            ("liked", "like"),
            ("hoped", "hope"),
            ("agreed", "agree"),
            ("watches", "watch"),
            ("goes", "go"),
            ("misses", "miss"),
            ("takes", "take"),
            ("bought", "buy"),
            ("was", "be"),
            ("bring", "bring"),
            ("launched", "launch"),
            ("displays", "display"),
            ("danced", "dance"),
            ("argued", "argue"),
            ("running", "run"),
            ("making", "make"),
            ("sailed", "sail"),
        ],
    )
    def test_word_table(self, lex, form, expected):
        assert lemma(form, lex) == expected

    def test_idempotent(self, lex):
        forms = ["flew to", "traveled", "studies", "stopped", "was", "made", "plays", "dance"]
        for form in forms:
            once = lemma(form, lex)
            assert lemma(once, lex) == once

    def test_idempotent_over_irregular_table(self, lex):
        for target in set(lex.irregular_verbs.values()):
            assert lemma(target, lex) == target, target


class TestConjugateDo:
    @pytest.mark.parametrize(
        "tense,number,expected",
        [
            ("past", "singular", "did"),
            ("past", "plural", "did"),
            ("present", "singular", "does"),
            ("present", "plural", "do"),
        ],
    )
    def test_table(self, tense, number, expected):
        assert conjugate_do(tense, number) == expected


class TestLexiconTables:
    def test_files_loaded(self, lex):
        assert lex.contractions and lex.slangs and lex.irregular_verbs
        assert lex.pronouns == ["where", "who", "what", "when", "why", "how many"]
        assert {"and", "but", "for", "or", "plus", "so", "therefore", "because"} <= lex.cc_words

    def test_phrasal_patterns_have_particles(self, lex):
        assert all(len(p) >= 2 for p in lex.phrasal_verbs)

    def test_keys_lowercase(self, lex):
        for table in (lex.contractions, lex.slangs, lex.irregular_verbs):
            assert all(k == k.lower() for k in table)
