"""Record production: tag one sentence, validate, or report an error record."""

from __future__ import annotations

from .wire import WireError, validate_record


def bridge_tag(sentence: str, backend) -> dict:
    """One wire record for one sentence.

    Per-sentence tagger trouble is reported in-band as
    ``{"text": ..., "error": ...}`` so batch runs survive.
    """
    if not sentence or not sentence.strip():
        return {"text": sentence, "error": "empty sentence"}
    try:
        record = backend.tag(sentence)
        validate_record(record)
        return record
    except (WireError, ValueError) as exc:
        return {"text": sentence, "error": str(exc)}
