#!/usr/bin/env python3
# Detecting the language of individual texts with the bundled sample
# lexicon.  The classifier needs no training: each language is scored by
# the stop words and diacritics it shares with the text, and the
# strictly best score wins.

from lexid import classify, demo_lexicon_dir, load_lexicon, normalize_text, preset_config

lex = load_lexicon(demo_lexicon_dir())
print(f"loaded {lex.n_languages} languages: {', '.join(lex.codes)}")
print()

cfg = preset_config("test9")  # log-dampened frequencies and weights, p=1/3

samples = [
    "Le café est déjà froid, mais la soirée ne fait que commencer.",
    "La universidad está muy cerca y el niño canta por la mañana.",
    "Și acum mergem până la școală, după care vom mânca înghețată.",
    "Não gosto de ficar em casa à noite sem nenhuma informação.",
    "Però adesso è già sera in città e non c'è più nessuno.",
    "Mergem la facultate cu tramvaiul",  # no diacritics: stop words decide
]

for text in samples:
    verdict, scores = classify(normalize_text(text), lex, cfg)
    label = verdict.language or f"und ({verdict.reason})"
    ranked = sorted(scores.items(), key=lambda item: -item[1])[:3]
    pretty = ", ".join(f"{code}={value:.3f}" for code, value in ranked)
    print(f"{label:>18}  {text}")
    print(f"{'':>18}  top scores: {pretty}")
    print()

# Some texts are honestly undecidable.  Two diacritics shared by the
# same three languages produce an exact tie, and a text with no
# dictionary term at all carries no evidence.
for text in ["allí estaré", "universitate facultate istorie"]:
    verdict, scores = classify(normalize_text(text), lex, cfg)
    print(f"{text!r} -> language={verdict.language} reason={verdict.reason}")
    print(f"  scores: { {code: round(value, 4) for code, value in scores.items()} }")
