"""Projection of span annotations onto the authoritative POS tokenization.

SRL and NER models may tokenize differently; their labels arrive as
character spans and are projected onto the POS tokenizer's tokens.  A token
takes the label of any span it overlaps; when several spans overlap one
token, the longest span wins.
"""

from __future__ import annotations


def project_spans(
    token_spans: list[tuple[int, int]],
    labeled_spans: list[tuple[int, int, str]],
) -> list[str | None]:
    """Map ``(start, end, label)`` spans onto tokens given by char spans."""
    out: list[str | None] = [None] * len(token_spans)
    widths = [0] * len(token_spans)
    for start, end, label in labeled_spans:
        for i, (ts, te) in enumerate(token_spans):
            if ts < end and start < te:  # overlap
                width = end - start
                if out[i] is None or width > widths[i]:
                    out[i] = label
                    widths[i] = width
    return out
