"""Dictionary-based language identification for closely related languages.

The method scores a text against per-language stop-word and diacritic
dictionaries, weighting each term by how few languages share it, and
picks the language with the strictly highest score.  It needs no
training, runs in one dictionary pass per language, and reports an
explicit ``und`` outcome instead of guessing when the evidence is absent
or tied.
"""

from .evaluation import (
    ConfusionMatrix,
    CorpusFormatError,
    EvaluationReport,
    LabeledDocument,
    UNCLASSIFIED,
    emit_report,
    evaluate,
    load_corpus,
)
from .lexicon import (
    BUILTIN_DIACRITICS,
    DIACRITIC,
    FOLDING_TABLE,
    Finding,
    LanguageLexicon,
    LexiconError,
    LexiconSet,
    STOPWORD,
    augment_with_stripped_variants,
    builtin_diacritics,
    demo_lexicon_dir,
    load_lexicon,
    save_lexicon,
    strip_diacritics,
    term_language_count,
    validate_lexicon,
)
from .normalize import NormalizedText, diacritic_count, normalize_text, token_count
from .scoring import (
    NO_EVIDENCE,
    PRESETS,
    ScoringConfig,
    TIE,
    TIE_REL_TOL,
    Verdict,
    classify,
    preset_config,
    score_all,
    score_language,
    tf,
    weight,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_DIACRITICS",
    "ConfusionMatrix",
    "CorpusFormatError",
    "DIACRITIC",
    "EvaluationReport",
    "FOLDING_TABLE",
    "Finding",
    "LabeledDocument",
    "LanguageLexicon",
    "LexiconError",
    "LexiconSet",
    "NO_EVIDENCE",
    "NormalizedText",
    "PRESETS",
    "STOPWORD",
    "ScoringConfig",
    "TIE",
    "TIE_REL_TOL",
    "UNCLASSIFIED",
    "Verdict",
    "augment_with_stripped_variants",
    "builtin_diacritics",
    "classify",
    "demo_lexicon_dir",
    "diacritic_count",
    "emit_report",
    "evaluate",
    "load_corpus",
    "load_lexicon",
    "normalize_text",
    "preset_config",
    "save_lexicon",
    "score_all",
    "score_language",
    "strip_diacritics",
    "term_language_count",
    "tf",
    "token_count",
    "validate_lexicon",
    "weight",
]
