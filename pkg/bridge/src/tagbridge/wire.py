"""The tagged-sentence wire contract, as validated on the consumer side.

Field names are fixed: text, tokens (t, pos, ner, srl), frames.
"""

from __future__ import annotations

PENN_POS = frozenset(
    {
        "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD",
        "NN", "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR",
        "RBS", "RP", "SYM", "TO", "UH", "VB", "VBD", "VBG", "VBN", "VBP",
        "VBZ", "WDT", "WP", "WP$", "WRB",
        "#", "$", "''", "(", ")", ",", ".", ":", "``", "-LRB-", "-RRB-", "HYPH",
    }
)


class WireError(ValueError):
    pass


def validate_record(obj: dict) -> None:
    """Raise :class:`WireError` unless ``obj`` is a valid wire record."""
    if not isinstance(obj, dict):
        raise WireError("record is not an object")
    text = obj.get("text")
    if not isinstance(text, str) or not text.strip():
        raise WireError("missing or empty text")
    frames = obj.get("frames")
    if not isinstance(frames, int) or frames < 0:
        raise WireError("frames must be a non-negative integer")
    tokens = obj.get("tokens")
    if not isinstance(tokens, list) or not tokens:
        raise WireError("missing tokens")
    cursor = 0
    for tok in tokens:
        if not isinstance(tok, dict):
            raise WireError("token is not an object")
        t = tok.get("t")
        if not isinstance(t, str) or not t:
            raise WireError("token text missing")
        if tok.get("pos") not in PENN_POS:
            raise WireError(f"bad POS {tok.get('pos')!r} for {t!r}")
        ner = tok.get("ner")
        if ner is not None and not isinstance(ner, str):
            raise WireError(f"bad NER for {t!r}")
        srl = tok.get("srl")
        if not isinstance(srl, list) or len(srl) != frames:
            raise WireError(f"srl of {t!r} must list one label per frame")
        if any(s is not None and not isinstance(s, str) for s in srl):
            raise WireError(f"bad SRL entry for {t!r}")
        idx = text.find(t, cursor)
        if idx < 0:
            raise WireError(f"token {t!r} does not align with text")
        cursor = idx + len(t)
    for f in range(frames):
        groups = 0
        in_group = False
        for tok in tokens:
            if tok["srl"][f] == "V":
                if not in_group:
                    groups += 1
                    in_group = True
            else:
                in_group = False
        if groups == 0:
            raise WireError(f"frame {f} has no V-labeled token")
        if groups > 2:
            raise WireError(f"frame {f} has {groups} disjoint V groups")
