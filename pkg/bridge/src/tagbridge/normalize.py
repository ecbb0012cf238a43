"""Label normalization toward the consumer's inventories."""

from __future__ import annotations

# common model tag names -> the wire format's entity classes
NER_CLASS_MAP = {
    "PER": "PER",
    "PERSON": "PER",
    "ORG": "ORG",
    "ORGANIZATION": "ORG",
    "LOC": "LOC",
    "LOCATION": "LOC",
    "GPE": "LOC",
    "FAC": "LOC",
    "DATE": "DATE",
    "TIME": "TIME",
    "MONEY": "MONEY",
    "PERCENT": "PERCENT",
    "CARDINAL": "NUMBER",
    "QUANTITY": "NUMBER",
    "ORDINAL": "NUMBER",
}


def normalize_srl(label: str | None) -> str | None:
    """Collapse B-/I- prefixes and the ARGM- wrapper to plain labels."""
    if label is None:
        return None
    label = label.upper()
    if label.startswith(("B-", "I-")):
        label = label[2:]
    if label.startswith(("ARGM-", "AM-")):
        label = label.split("-", 1)[1]
    if label.startswith("R-") or label.startswith("C-"):
        label = label[2:]
    if label in ("", "O"):
        return None
    return label


def normalize_ner(label: str | None) -> str | None:
    if label is None:
        return None
    label = label.upper()
    if label.startswith(("B-", "I-")):
        label = label[2:]
    if label in ("", "O"):
        return None
    return NER_CLASS_MAP.get(label, label)
