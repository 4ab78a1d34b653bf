"""Per-language scoring and classification.

Each language's score is a weighted sum of term frequencies over its two
dictionaries::

    score(text, lang) = p * sum_w tf(count(w)) * weight(w)
                      + (1 - p) * sum_d tf(count(d)) * weight(d)

where ``w`` ranges over the language's stop words, ``d`` over its
diacritic characters, and ``p`` in [0, 1] mixes the two kinds of
evidence.  ``tf`` is the raw occurrence count or its log-dampened form;
``weight`` rewards terms few languages share (``N/n`` where ``N`` is the
number of languages and ``n`` how many of them list the term).  All
logarithms are natural; because a base change only rescales every score
by the same positive constant, it can never change which language wins.

When the fallback flag is on and a text contains no diacritic known to
any language, scoring proceeds with ``p = 1`` (stop words only).  That
effective ``p`` is decided once per text so every language is scored on
the same scale.

Scoring one language costs one dictionary pass (constant-time count
lookups), independent of text length once the text is normalized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .lexicon import DIACRITIC, STOPWORD, LexiconSet
from .normalize import NormalizedText

TF_MODES = ("raw", "log")
WEIGHT_MODES = ("unit", "ratio", "log_ratio")

# Non-classification reasons.
NO_EVIDENCE = "no_evidence"
TIE = "tie"

# Scores tied within this relative tolerance count as equal.  Under the
# log modes a mathematically exact tie is computed from identical term
# multisets in different summation orders, so the comparison must absorb
# float noise without ever merging genuinely distinct scores.
TIE_REL_TOL = 1e-12


@dataclass(frozen=True)
class ScoringConfig:
    """Knobs of the scoring function.

    ``p`` weighs stop-word evidence; diacritics get ``1 - p``.  With
    ``stopword_fallback`` on, a text containing no known diacritic is
    scored with an effective ``p`` of 1.
    """

    p: float
    tf_mode: str = "raw"
    weight_mode: str = "unit"
    stopword_fallback: bool = False

    def __post_init__(self) -> None:
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must be within [0, 1], got {self.p}")
        if self.tf_mode not in TF_MODES:
            raise ValueError(f"tf_mode must be one of {TF_MODES}, got {self.tf_mode!r}")
        if self.weight_mode not in WEIGHT_MODES:
            raise ValueError(
                f"weight_mode must be one of {WEIGHT_MODES}, got {self.weight_mode!r}"
            )


#: The nine stock configurations used throughout the docs and tests.
#: test1/test2 use diacritics only, test3/test4 stop words only,
#: test5..test8 mix both at p=1/2 or p=1/3 with and without ratio
#: weighting, and test9 log-dampens both the frequency and the weight.
PRESETS: dict[str, ScoringConfig] = {
    "test1": ScoringConfig(p=0.0, tf_mode="raw", weight_mode="unit", stopword_fallback=False),
    "test2": ScoringConfig(p=0.0, tf_mode="raw", weight_mode="ratio", stopword_fallback=False),
    "test3": ScoringConfig(p=1.0, tf_mode="raw", weight_mode="unit", stopword_fallback=True),
    "test4": ScoringConfig(p=1.0, tf_mode="raw", weight_mode="ratio", stopword_fallback=True),
    "test5": ScoringConfig(p=1 / 2, tf_mode="raw", weight_mode="unit", stopword_fallback=True),
    "test6": ScoringConfig(p=1 / 3, tf_mode="raw", weight_mode="unit", stopword_fallback=True),
    "test7": ScoringConfig(p=1 / 2, tf_mode="raw", weight_mode="ratio", stopword_fallback=True),
    "test8": ScoringConfig(p=1 / 3, tf_mode="raw", weight_mode="ratio", stopword_fallback=True),
    "test9": ScoringConfig(
        p=1 / 3, tf_mode="log", weight_mode="log_ratio", stopword_fallback=True
    ),
}


def preset_config(name: str) -> ScoringConfig:
    """Look up one of the nine stock configurations by name."""
    try:
        return PRESETS[name]
    except KeyError:
        raise ValueError(
            f"unknown preset {name!r}; choose one of {', '.join(PRESETS)}"
        ) from None


@dataclass(frozen=True)
class Verdict:
    """Classification outcome: a language, or why none was chosen."""

    language: str | None
    reason: str | None = None

    @classmethod
    def classified(cls, language: str) -> "Verdict":
        return cls(language=language, reason=None)

    @classmethod
    def unclassified(cls, reason: str) -> "Verdict":
        return cls(language=None, reason=reason)

    @property
    def is_classified(self) -> bool:
        return self.language is not None


def tf(count: int, mode: str) -> float:
    """Term frequency: the raw count, or ``ln(1 + count)`` in log mode."""
    if mode == "raw":
        return float(count)
    if mode == "log":
        return math.log1p(count)
    raise ValueError(f"unknown tf mode {mode!r}")


def weight(term: str, kind: str, lang: str, lex: LexiconSet, mode: str) -> float:
    """Language-specificity weight of a dictionary term.

    ``n`` is the number of languages listing ``term`` in the ``kind``
    namespace; the weight is 1, ``N/n`` or ``ln(1 + N/n)`` and depends on
    ``lang`` only through the precondition that the term belongs to that
    language's dictionary.
    """
    entry = lex.languages[lang]
    members = entry.stopwords if kind == STOPWORD else entry.diacritics
    if term not in members:
        raise ValueError(f"{kind} {term!r} is not in language {lang!r}")
    return _term_weight(len(lex.languages_with(term, kind)), lex.n_languages, mode)


def _term_weight(n: int, n_languages: int, mode: str) -> float:
    # n >= 1 is guaranteed: the term comes from some language's dictionary.
    if mode == "unit":
        return 1.0
    if mode == "ratio":
        return n_languages / n
    if mode == "log_ratio":
        return math.log1p(n_languages / n)
    raise ValueError(f"unknown weight mode {mode!r}")


def _score_one(nt: NormalizedText, lang: str, lex: LexiconSet, cfg: ScoringConfig, p: float) -> float:
    n_languages = lex.n_languages
    stop_total = 0.0
    if p > 0.0:
        token_freq = nt.token_freq
        for word in lex.sorted_stopwords(lang):
            count = token_freq.get(word, 0)
            if count:
                stop_total += tf(count, cfg.tf_mode) * _term_weight(
                    len(lex.languages_with(word, STOPWORD)), n_languages, cfg.weight_mode
                )
    dia_total = 0.0
    if p < 1.0:
        char_freq = nt.char_freq
        for ch in lex.sorted_diacritics(lang):
            count = char_freq.get(ch, 0)
            if count:
                dia_total += tf(count, cfg.tf_mode) * _term_weight(
                    len(lex.languages_with(ch, DIACRITIC)), n_languages, cfg.weight_mode
                )
    return p * stop_total + (1.0 - p) * dia_total


def score_language(
    nt: NormalizedText, lang: str, lex: LexiconSet, cfg: ScoringConfig
) -> float:
    """Score one language with ``cfg.p`` taken as-is.

    The fallback rule is applied by :func:`score_all`, which decides the
    effective ``p`` once per text before scoring every language.
    """
    if lang not in lex.languages:
        raise ValueError(f"unknown language {lang!r}")
    return _score_one(nt, lang, lex, cfg, cfg.p)


def _effective_p(nt: NormalizedText, lex: LexiconSet, cfg: ScoringConfig) -> float:
    if cfg.stopword_fallback and lex.all_diacritics.isdisjoint(nt.char_freq):
        return 1.0
    return cfg.p


def score_all(nt: NormalizedText, lex: LexiconSet, cfg: ScoringConfig) -> dict[str, float]:
    """Score every language, in lexicon order, with a shared effective p."""
    if lex.n_languages < 2:
        raise ValueError("classification requires at least 2 languages")
    p = _effective_p(nt, lex, cfg)
    return {code: _score_one(nt, code, lex, cfg, p) for code in lex.codes}


def classify(
    nt: NormalizedText, lex: LexiconSet, cfg: ScoringConfig
) -> tuple[Verdict, dict[str, float]]:
    """Pick the strict maximum-score language, or explain why there is none.

    An all-zero score vector yields ``no_evidence``; a maximum shared by
    two or more languages (within ``TIE_REL_TOL`` relative) yields
    ``tie``.
    """
    scores = score_all(nt, lex, cfg)
    best = max(scores.values())
    if best <= 0.0:
        return Verdict.unclassified(NO_EVIDENCE), scores
    top = [
        code
        for code, value in scores.items()
        if math.isclose(value, best, rel_tol=TIE_REL_TOL, abs_tol=0.0)
    ]
    if len(top) > 1:
        return Verdict.unclassified(TIE), scores
    return Verdict.classified(top[0]), scores
