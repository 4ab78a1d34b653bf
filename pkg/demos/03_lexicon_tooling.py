#!/usr/bin/env python3
# Lexicon tooling: accent folding, augmenting stop lists with their
# accent-stripped spellings, validation diagnostics, and the on-disk
# format round-trip.

import tempfile
from pathlib import Path

from lexid import (
    augment_with_stripped_variants,
    demo_lexicon_dir,
    load_lexicon,
    save_lexicon,
    strip_diacritics,
    validate_lexicon,
)

# --- accent folding -------------------------------------------------------
for word in ("și", "où", "cœur", "înghețată", "mañana", "casa"):
    print(f"{word:>12} -> {strip_diacritics(word)}")
print()

# --- augmentation ---------------------------------------------------------
# Tweets are often typed without accents; adding the stripped spelling of
# every stop word to its own language keeps such texts classifiable.
lex = load_lexicon(demo_lexicon_dir())
augmented = augment_with_stripped_variants(lex)
for code in lex.codes:
    before = len(lex.languages[code].stopwords)
    after = len(augmented.languages[code].stopwords)
    print(f"{code}: {before} stop words -> {after} after augmentation")
added = sorted(augmented.languages["ro"].stopwords - lex.languages["ro"].stopwords)
print("new Romanian entries:", ", ".join(added))
print()

# Augmentation is idempotent: running it again changes nothing.
print("second pass is a no-op:", augment_with_stripped_variants(augmented) == augmented)
print()

# --- validation -----------------------------------------------------------
# Warnings point at weak spots: stop words shared by nearly every
# language carry almost no signal beyond their raw counts.
for finding in validate_lexicon(lex):
    print(finding)
print()

# --- file round-trip --------------------------------------------------------
with tempfile.TemporaryDirectory() as tmp:
    target = Path(tmp) / "augmented"
    save_lexicon(augmented, target)
    print("saved to", target)
    print("layout:", sorted(p.relative_to(target).as_posix() for p in target.rglob("*.txt"))[:4], "...")
    print("reload equals original:", load_lexicon(target) == augmented)
