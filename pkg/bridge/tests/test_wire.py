import pytest

from tagbridge.align import project_spans
from tagbridge.normalize import normalize_ner, normalize_srl
from tagbridge.wire import WireError, validate_record


def _record():
    return {
        "text": "John slept",
        "tokens": [
            {"t": "John", "pos": "NNP", "ner": "PER", "srl": ["ARG0"]},
            {"t": "slept", "pos": "VBD", "ner": None, "srl": ["V"]},
        ],
        "frames": 1,
    }


class TestValidateRecord:
    def test_valid(self):
        validate_record(_record())

    def test_missing_text(self):
        rec = _record()
        rec["text"] = ""
        with pytest.raises(WireError):
            validate_record(rec)

    def test_srl_arity(self):
        rec = _record()
        rec["tokens"][0]["srl"] = []
        with pytest.raises(WireError):
            validate_record(rec)

    def test_unknown_pos(self):
        rec = _record()
        rec["tokens"][0]["pos"] = "NOUN"
        with pytest.raises(WireError):
            validate_record(rec)

    def test_frame_needs_verb(self):
        rec = _record()
        rec["tokens"][1]["srl"] = ["ARG1"]
        with pytest.raises(WireError):
            validate_record(rec)

    def test_misaligned_token(self):
        rec = _record()
        rec["tokens"][1]["t"] = "ran"
        with pytest.raises(WireError):
            validate_record(rec)


class TestNormalize:
    def test_srl_prefixes(self):
        assert normalize_srl("B-ARG0") == "ARG0"
        assert normalize_srl("I-ARGM-TMP") == "TMP"
        assert normalize_srl("AM-LOC") == "LOC"
        assert normalize_srl("R-ARG0") == "ARG0"
        assert normalize_srl("O") is None

    def test_ner_classes(self):
        assert normalize_ner("PERSON") == "PER"
        assert normalize_ner("GPE") == "LOC"
        assert normalize_ner("B-ORG") == "ORG"
        assert normalize_ner("CARDINAL") == "NUMBER"
        assert normalize_ner(None) is None


class TestProjection:
    def test_spans_project_onto_tokens(self):
        # POS tokens: "New"(0,3) "York"(4,8) "City"(9,13); one NER span over all
        tokens = [(0, 3), (4, 8), (9, 13)]
        spans = [(0, 13, "LOC")]
        assert project_spans(tokens, spans) == ["LOC", "LOC", "LOC"]

    def test_longest_span_wins_conflicts(self):
        tokens = [(0, 4), (5, 9)]
        spans = [(0, 9, "LONG"), (5, 9, "SHORT")]
        assert project_spans(tokens, spans) == ["LONG", "LONG"]

    def test_non_overlapping_token_unlabeled(self):
        tokens = [(0, 4), (5, 9), (10, 14)]
        spans = [(5, 9, "PER")]
        assert project_spans(tokens, spans) == [None, "PER", None]
