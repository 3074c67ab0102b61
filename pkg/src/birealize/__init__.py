"""birealize: bilingual English/French surface realization.

Build constituent trees through an Engine handle, then realize them into
grammatically correct text; ships with a report generator demo and a
translation-drill engine plus HTTP service.
"""

from . import errors
from .drill import (
    Exercise,
    Verdict,
    check_answer,
    instantiate_pattern,
    load_patterns,
    make_exercise,
    tokenize,
)
from .engine import Engine
from .interchange import parse_tree, serialize_tree
from .lexicon import Lexicon, add_to_lexicon, load_lexicon
from .morphology import format_date, number_to_words, pronoun_for
from .realizer import (
    Realization,
    Token,
    Warning,
    apply_sentence_type,
    linearize,
    post_process,
    propagate_agreement,
    realize,
)
from .report import ReportSpec, add_participants, generate_report, tense_for
from .syntax import Constituent, Template, one_of

__version__ = "0.1.0"

__all__ = [
    "Constituent",
    "Engine",
    "Exercise",
    "Lexicon",
    "Realization",
    "ReportSpec",
    "Template",
    "Token",
    "Verdict",
    "Warning",
    "add_participants",
    "add_to_lexicon",
    "apply_sentence_type",
    "check_answer",
    "errors",
    "format_date",
    "generate_report",
    "instantiate_pattern",
    "linearize",
    "load_lexicon",
    "load_patterns",
    "make_exercise",
    "number_to_words",
    "one_of",
    "parse_tree",
    "post_process",
    "pronoun_for",
    "propagate_agreement",
    "realize",
    "serialize_tree",
    "tense_for",
    "tokenize",
]
