from helpers import simple

from qapgen.preprocess import (
    extract_interrogative,
    extract_simple_sentences,
    normalize,
    strip_leading_cc,
)


class TestNormalize:
    def test_slang_chain(self, lex):
        assert normalize("He's gotta go", lex) == "He is got to go"

    def test_fixed_point(self, lex):
        assert normalize("plain text", lex) == "plain text"

    def test_abbreviation(self, lex):
        assert normalize("I've, i.e., left", lex) == "I have, that is, left"

    def test_whitespace_collapsed(self, lex):
        assert normalize("  a   b\t c ", lex) == "a b c"


class TestExtraction:
    def test_single_frame_is_itself(self, tagger):
        ts = tagger.tag("John traveled to Boston last week")
        out = extract_simple_sentences(ts)
        assert len(out) == 1
        assert out[0].text == "John traveled to Boston last week"
        assert [t.srl for t in out[0].tokens] == ["ARG0", "V", "ARG1", "ARG1", "TMP", "TMP"]

    def test_two_frame_complex_sentence(self, tagger):
        ts = tagger.tag("John visited the museum and Mary bought a souvenir")
        out = extract_simple_sentences(ts)
        assert len(out) == 2
        assert out[0].text == "John visited the museum"
        assert out[1].text == "Mary bought a souvenir"
        assert [t.text for t in out[1].tokens] == ["Mary", "bought", "a", "souvenir"]

    def test_frame_with_only_time_arguments_dropped(self, tagger):
        ts = tagger.tag("It rained yesterday")
        assert extract_simple_sentences(ts) == []

    def test_count_bounded_by_frames(self, core_corpus):
        for ts in core_corpus:
            assert len(extract_simple_sentences(ts)) <= ts.frame_count

    def test_emitted_sentences_have_subject_and_object(self, core_corpus):
        for ts in core_corpus:
            for simple_sentence in extract_simple_sentences(ts):
                v_idx = [i for i, t in enumerate(simple_sentence.tokens) if t.srl == "V"]
                assert v_idx
                before = simple_sentence.tokens[: v_idx[0]]
                after = simple_sentence.tokens[v_idx[-1] + 1 :]
                assert any(t.is_argn for t in before)
                assert any(t.is_argn for t in after)

    def test_interrogative_keeps_unlabeled_lead(self, tagger):
        ts = tagger.tag("Where did John travel to last week")
        out = extract_interrogative(ts)
        assert out.tokens[0].text == "Where"
        assert out.tokens[0].srl is None


class TestStripLeadingCc:
    def test_pos_cc_removed(self, lex):
        s = simple("But/CC//DIS John/NNP/PER/ARG0 left/VBD//V early/RB//TMP")
        out = strip_leading_cc(s, lex)
        assert [t.text for t in out.tokens] == ["John", "left", "early"]
        assert out.text == "John left early"

    def test_no_leading_cc_unchanged(self, lex):
        s = simple("John/NNP/PER/ARG0 left/VBD//V early/RB//TMP")
        assert strip_leading_cc(s, lex) is s

    def test_listed_words_and_punctuation_removed(self, lex):
        s = simple("Therefore/RB//DIS ,/,// so/CC//DIS John/NNP/PER/ARG0 left/VBD//V early/RB//TMP")
        out = strip_leading_cc(s, lex)
        assert [t.text for t in out.tokens] == ["John", "left", "early"]

    def test_nothing_after_subject_touched(self, lex):
        s = simple("And/CC//DIS Mary/NNP/PER/ARG0 met/VBD//V John/NNP/PER/ARG1 ,/,// too/RB//DIS")
        out = strip_leading_cc(s, lex)
        assert [t.text for t in out.tokens] == ["Mary", "met", "John", ",", "too"]

    def test_idempotent(self, lex):
        s = simple("But/CC//DIS John/NNP/PER/ARG0 left/VBD//V early/RB//TMP")
        once = strip_leading_cc(s, lex)
        assert strip_leading_cc(once, lex) is once

    def test_time_phrase_before_subject_kept(self, lex):
        s = simple(
            "On/IN//TMP Monday/NNP/DATE/TMP ,/,// John/NNP/PER/ARG0 left/VBD//V early/RB//TMP"
        )
        out = strip_leading_cc(s, lex)
        assert [t.text for t in out.tokens] == ["On", "Monday", "John", "left", "early"]
