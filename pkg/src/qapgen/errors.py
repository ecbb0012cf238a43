"""Exception types shared across the engine."""


class QapgenError(Exception):
    """Base class for engine errors."""


class MalformedTagSet(QapgenError):
    """A tag set string or field combination violates the canonical form."""


class TaggerUnavailable(QapgenError):
    """The configured tagger cannot annotate the given sentence."""


class SchemaViolation(QapgenError):
    """A tagged-sentence record fails wire-schema validation."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnmergeableSentence(QapgenError):
    """Merging produced a sequence that breaks the tag-set-sequence invariants."""


class UnresolvableTagSet(QapgenError):
    """A question tag set has no mapped text and no resolution rule applies."""


class EmptyAnswer(QapgenError):
    """The answer tag-set bag is empty, so the pair yields no usable QAP."""


class CorruptDb(QapgenError):
    """A pattern-database file cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
