"""Adapter wrapping SRL/POS/NER taggers behind a stable wire format.

One record per sentence::

    {"text": ..., "tokens": [{"t": word, "pos": ..., "ner": ... or null,
     "srl": [label-or-null per frame]}], "frames": N}

Backends plug in behind :class:`tagbridge.backends.Backend`; the builtin
rule backend is deterministic and dependency-free, while model-backed
backends load heavyweight NLP stacks when they are installed.
"""

from .bridge import bridge_tag
from .wire import validate_record

__version__ = "0.1.0"
__all__ = ["bridge_tag", "validate_record", "__version__"]
