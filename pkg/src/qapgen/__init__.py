"""Pattern-learning question-answer-pair generator.

Learns (declarative, interrogative) tag-set-sequence pattern pairs from
example sentences and uses longest-common-substring matching over those
patterns to turn new declarative sentences into question-answer pairs,
asking the user to teach a new pattern when matching falls short.
"""

from .errors import (
    CorruptDb,
    EmptyAnswer,
    MalformedTagSet,
    QapgenError,
    SchemaViolation,
    TaggerUnavailable,
    UnmergeableSentence,
    UnresolvableTagSet,
)
from .model import (
    DECLARATIVE,
    INTERROGATIVE,
    EquivalencePolicy,
    MATCH_POLICY,
    TagSet,
    TagSetBag,
    TagSetSequence,
    parse_sequence,
    parse_tag_set,
    render_tag_set,
    tag_sets_equal,
)
from .lexicon import Lexicon, conjugate_do, expand_contractions, lemma, match_phrasal_verb
from .tagging import FixtureTagger, HttpTagger, TaggedSentence, load_fixture_corpus
from .builder import BuiltSequence, TsTextMap, build
from .matcher import MatchResult, best_match, classify, lcs
from .generator import Qap, TeachPrompt, generate
from .db import TsspDb, TsspEntry

__version__ = "0.1.0"

__all__ = [
    "CorruptDb", "EmptyAnswer", "MalformedTagSet", "QapgenError",
    "SchemaViolation", "TaggerUnavailable", "UnmergeableSentence",
    "UnresolvableTagSet", "DECLARATIVE", "INTERROGATIVE",
    "EquivalencePolicy", "MATCH_POLICY", "TagSet", "TagSetBag",
    "TagSetSequence", "parse_sequence", "parse_tag_set", "render_tag_set",
    "tag_sets_equal", "Lexicon", "conjugate_do", "expand_contractions",
    "lemma", "match_phrasal_verb", "FixtureTagger", "HttpTagger",
    "TaggedSentence", "load_fixture_corpus", "BuiltSequence", "TsTextMap",
    "build", "MatchResult", "best_match", "classify", "lcs", "Qap",
    "TeachPrompt", "generate", "TsspDb", "TsspEntry", "__version__",
]
