"""Per-language stop-word and diacritic dictionaries.

A :class:`LexiconSet` bundles one :class:`LanguageLexicon` per language
together with a cross-language term index: for every term it records
which languages list it, which is what the specificity weighting in
:mod:`lexid.scoring` consumes.  Stop words and diacritics live in
separate index namespaces, so a one-letter stop word such as ``y`` never
collides with a diacritic character.

On disk a lexicon is a directory with one subdirectory per language::

    <root>/<lang>/stopwords.txt     one word per line
    <root>/<lang>/diacritics.txt    one character per line

Files are UTF-8; surrounding whitespace is trimmed, blank lines and
lines starting with ``#`` are ignored.  Entries must be lowercase and
canonically composed; the loader normalizes them itself and emits a
warning for anything it had to change.
"""

from __future__ import annotations

import hashlib
import logging
import unicodedata
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from pathlib import Path

from .normalize import normalize_text

logger = logging.getLogger(__name__)

# Term-index namespaces.
STOPWORD = "stopword"
DIACRITIC = "diacritic"

# Special characters per language.  The Romanian row carries both the
# comma-below letters and their legacy cedilla spellings, because both
# occur in real-world text.
BUILTIN_DIACRITICS: dict[str, str] = {
    "fr": "àâæçèéêëîïôœùûü",
    "it": "àáèéìíòóùú",
    "pt": "áâãàçéêíóôõú",
    "ro": "ăâîșşțţ",
    "es": "áéíóúñü",
}

# Accent-folding table used to derive plain-ASCII spellings of stop
# words.  œ/æ fold to their two-letter expansions; anything not listed
# passes through unchanged.
FOLDING_TABLE: dict[str, str] = {
    "à": "a", "â": "a", "á": "a", "ă": "a", "ã": "a",
    "æ": "ae",
    "ç": "c",
    "è": "e", "é": "e", "ê": "e", "ë": "e",
    "î": "i", "ï": "i", "ì": "i", "í": "i",
    "ô": "o", "ò": "o", "ó": "o", "õ": "o",
    "œ": "oe",
    "ù": "u", "û": "u", "ü": "u", "ú": "u",
    "ñ": "n",
    "ș": "s", "ş": "s",
    "ț": "t", "ţ": "t",
}


class LexiconError(ValueError):
    """Raised for structural problems in lexicon data or files."""


@dataclass(frozen=True)
class Finding:
    """One diagnostic produced by lexicon loading or validation."""

    severity: str  # "error" or "warning"
    message: str

    def __str__(self) -> str:
        return f"{self.severity}: {self.message}"


@dataclass(frozen=True)
class LanguageLexicon:
    """Stop words and diacritics of a single language.

    Stop words must be single, lowercase, NFC-composed word tokens;
    diacritics must be single alphabetic characters.  Construct through
    :class:`LexiconSet`, which enforces both.
    """

    stopwords: frozenset[str]
    diacritics: frozenset[str]


class LexiconSet:
    """An ordered set of language lexicons plus the cross-language index.

    Immutable after construction; safe to share between any number of
    concurrent scorers.
    """

    def __init__(self, languages: Mapping[str, LanguageLexicon]):
        if not languages:
            raise LexiconError("lexicon contains no languages")
        self._languages: dict[str, LanguageLexicon] = {}
        for code, lexicon in languages.items():
            if not code:
                raise LexiconError("empty language code")
            _check_entries(code, lexicon)
            self._languages[code] = lexicon

        index: dict[tuple[str, str], set[str]] = {}
        for code, lexicon in self._languages.items():
            for word in lexicon.stopwords:
                index.setdefault((STOPWORD, word), set()).add(code)
            for ch in lexicon.diacritics:
                index.setdefault((DIACRITIC, ch), set()).add(code)
        self._index: dict[tuple[str, str], frozenset[str]] = {
            key: frozenset(codes) for key, codes in index.items()
        }
        # Sorted iteration orders make float accumulation reproducible
        # across processes and runs.
        self._sorted_stopwords = {
            code: tuple(sorted(lex.stopwords)) for code, lex in self._languages.items()
        }
        self._sorted_diacritics = {
            code: tuple(sorted(lex.diacritics)) for code, lex in self._languages.items()
        }
        self._all_diacritics = frozenset().union(
            *(lex.diacritics for lex in self._languages.values())
        )

    @property
    def languages(self) -> dict[str, LanguageLexicon]:
        return self._languages

    @property
    def codes(self) -> tuple[str, ...]:
        return tuple(self._languages)

    @property
    def n_languages(self) -> int:
        return len(self._languages)

    @property
    def all_diacritics(self) -> frozenset[str]:
        """Union of every language's diacritic set."""
        return self._all_diacritics

    def sorted_stopwords(self, code: str) -> tuple[str, ...]:
        return self._sorted_stopwords[code]

    def sorted_diacritics(self, code: str) -> tuple[str, ...]:
        return self._sorted_diacritics[code]

    def languages_with(self, term: str, kind: str) -> frozenset[str]:
        """Languages whose ``kind`` dictionary lists ``term``."""
        return self._index.get((kind, term), frozenset())

    def fingerprint(self) -> str:
        """Stable hex digest of the full lexicon content."""
        digest = hashlib.sha256()
        for code in sorted(self._languages):
            lexicon = self._languages[code]
            for word in sorted(lexicon.stopwords):
                digest.update(f"{code}\t{STOPWORD}\t{word}\n".encode())
            for ch in sorted(lexicon.diacritics):
                digest.update(f"{code}\t{DIACRITIC}\t{ch}\n".encode())
        return digest.hexdigest()[:16]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LexiconSet):
            return NotImplemented
        return self._languages == other._languages

    def __repr__(self) -> str:
        return f"LexiconSet({', '.join(self.codes)})"


def _check_entries(code: str, lexicon: LanguageLexicon) -> None:
    for word in lexicon.stopwords:
        if normalize_text(word).tokens != (word,):
            raise LexiconError(
                f"language {code!r}: stop word {word!r} is not a single "
                "normalized token"
            )
    for ch in lexicon.diacritics:
        if len(ch) != 1 or not ch.isalpha():
            raise LexiconError(
                f"language {code!r}: diacritic {ch!r} is not a single letter"
            )


def builtin_diacritics() -> dict[str, frozenset[str]]:
    """Built-in diacritic sets for the five supported Romance languages."""
    return {code: frozenset(chars) for code, chars in BUILTIN_DIACRITICS.items()}


def term_language_count(lex: LexiconSet, term: str, kind: str | None = None) -> int:
    """Number of languages listing ``term``.

    With ``kind`` set to ``STOPWORD`` or ``DIACRITIC``, only that
    namespace is consulted; otherwise the union of both.  Returns 0 only
    for terms absent from every language.
    """
    if kind is not None:
        return len(lex.languages_with(term, kind))
    codes = lex.languages_with(term, STOPWORD) | lex.languages_with(term, DIACRITIC)
    return len(codes)


def strip_diacritics(term: str) -> str:
    """Replace accented characters with their ASCII base spelling."""
    return "".join(FOLDING_TABLE.get(ch, ch) for ch in term)


def augment_with_stripped_variants(lex: LexiconSet) -> LexiconSet:
    """Add the accent-stripped variant of every stop word, per language.

    Diacritic sets are untouched.  Idempotent: augmenting an augmented
    lexicon returns an equal one.
    """
    languages = {
        code: LanguageLexicon(
            stopwords=lexicon.stopwords | {strip_diacritics(w) for w in lexicon.stopwords},
            diacritics=lexicon.diacritics,
        )
        for code, lexicon in lex.languages.items()
    }
    return LexiconSet(languages)


def validate_lexicon(lex: LexiconSet) -> list[Finding]:
    """Diagnose lexicon weaknesses without rejecting the lexicon.

    Error findings mark lexicons unusable for classification (fewer than
    two languages).  Warnings flag stop words shared by (almost) every
    language, accented characters used in stop words that no diacritic
    set lists, and languages with empty diacritic sets.
    """
    findings: list[Finding] = []
    n_langs = lex.n_languages
    if n_langs < 2:
        findings.append(
            Finding("error", f"only {n_langs} language(s); classification needs at least 2")
        )

    shared: list[tuple[str, int]] = []
    for (kind, term), codes in lex._index.items():
        if kind == STOPWORD and n_langs >= 2 and len(codes) >= n_langs - 1:
            shared.append((term, len(codes)))
    for term, count in sorted(shared):
        findings.append(
            Finding("warning", f"stop word {term!r} appears in {count} of {n_langs} languages")
        )

    accented_in_use = {
        ch
        for lexicon in lex.languages.values()
        for word in lexicon.stopwords
        for ch in word
        if ch in FOLDING_TABLE
    }
    for ch in sorted(accented_in_use - lex.all_diacritics):
        findings.append(
            Finding("warning", f"character {ch!r} appears in stop words but in no diacritic set")
        )

    for code, lexicon in lex.languages.items():
        if not lexicon.diacritics:
            findings.append(Finding("warning", f"language {code!r} has an empty diacritic set"))

    return findings


def load_lexicon(root: str | Path, warnings_to: list[Finding] | None = None) -> LexiconSet:
    """Load and validate a lexicon directory.

    Languages are read in sorted directory order.  Structural problems
    (missing files, multi-word stop-word lines, multi-character diacritic
    lines, duplicate codes, no languages at all) raise
    :class:`LexiconError` with file and line context.  Entries the loader
    had to normalize are logged and, when ``warnings_to`` is given, also
    appended to it as :class:`Finding` objects.
    """
    root = Path(root)
    if not root.is_dir():
        raise LexiconError(f"lexicon root {root} is not a directory")

    languages: dict[str, LanguageLexicon] = {}
    for lang_dir in sorted(p for p in root.iterdir() if p.is_dir()):
        code = lang_dir.name.lower()
        if code in languages:
            raise LexiconError(f"duplicate language code {code!r} under {root}")
        stopwords_path = lang_dir / "stopwords.txt"
        diacritics_path = lang_dir / "diacritics.txt"
        for path in (stopwords_path, diacritics_path):
            if not path.is_file():
                raise LexiconError(f"missing lexicon file {path}")
        stopwords = frozenset(_read_stopwords(stopwords_path, warnings_to))
        diacritics = frozenset(_read_diacritics(diacritics_path, warnings_to))
        languages[code] = LanguageLexicon(stopwords=stopwords, diacritics=diacritics)

    if not languages:
        raise LexiconError(f"no language directories under {root}")
    return LexiconSet(languages)


def _warn(message: str, warnings_to: list[Finding] | None) -> None:
    logger.warning("%s", message)
    if warnings_to is not None:
        warnings_to.append(Finding("warning", message))


def _iter_terms(path: Path):
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, 1):
            term = line.strip()
            if not term or term.startswith("#"):
                continue
            yield line_no, term


def _read_stopwords(path: Path, warnings_to: list[Finding] | None) -> list[str]:
    words = []
    for line_no, term in _iter_terms(path):
        tokens = normalize_text(term).tokens
        if len(tokens) != 1:
            raise LexiconError(
                f"{path}:{line_no}: stop word line {term!r} is not a single word"
            )
        if tokens[0] != term:
            _warn(f"{path}:{line_no}: normalized {term!r} to {tokens[0]!r}", warnings_to)
        words.append(tokens[0])
    return words


def _read_diacritics(path: Path, warnings_to: list[Finding] | None) -> list[str]:
    chars = []
    for line_no, term in _iter_terms(path):
        normalized = unicodedata.normalize("NFC", term.lower())
        if normalized != term:
            _warn(f"{path}:{line_no}: normalized {term!r} to {normalized!r}", warnings_to)
        if len(normalized) != 1:
            raise LexiconError(f"{path}:{line_no}: multi-character diacritic {term!r}")
        if not normalized.isalpha():
            raise LexiconError(f"{path}:{line_no}: diacritic {term!r} is not a letter")
        chars.append(normalized)
    return chars


def save_lexicon(lex: LexiconSet, root: str | Path) -> None:
    """Write ``lex`` in the directory layout :func:`load_lexicon` reads.

    Entries are written sorted, so saving equal lexicons produces
    byte-identical trees.
    """
    root = Path(root)
    for code in lex.codes:
        lang_dir = root / code
        lang_dir.mkdir(parents=True, exist_ok=True)
        lexicon = lex.languages[code]
        (lang_dir / "stopwords.txt").write_text(
            "".join(f"{w}\n" for w in sorted(lexicon.stopwords)), encoding="utf-8"
        )
        (lang_dir / "diacritics.txt").write_text(
            "".join(f"{c}\n" for c in sorted(lexicon.diacritics)), encoding="utf-8"
        )


def demo_lexicon_dir() -> Path:
    """Directory of the small sample lexicon shipped with the package.

    The sample covers fr/it/pt/ro/es with roughly 40 stop words each and
    the built-in diacritic sets.  It demonstrates the lexicon format and
    keeps the test suite self-contained; real deployments should supply
    full stop-word lists (several hundred words per language).
    """
    return Path(__file__).resolve().parent / "data" / "demo"
