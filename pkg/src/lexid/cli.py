"""Command-line interface: detect, evaluate, dict, presets.

Exit codes: 0 success (an unclassified text is *not* an error), 1 usage
error, 2 I/O error, 3 lexicon validation failure, 4 corpus rejected for
too many malformed lines.  Results go to stdout, logs and summaries to
stderr.  ``--lexicon`` defaults to the ``LID_LEXICON`` environment
variable.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path

from .evaluation import CorpusFormatError, emit_report, evaluate, load_corpus
from .lexicon import (
    BUILTIN_DIACRITICS,
    LexiconError,
    augment_with_stripped_variants,
    load_lexicon,
    save_lexicon,
    strip_diacritics,
    validate_lexicon,
)
from .normalize import normalize_text
from .scoring import PRESETS, ScoringConfig, classify, preset_config

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_LEXICON = 3
EXIT_CORPUS = 4

#: Printed for texts no language wins (ISO 639 "undetermined").
UNDETERMINED = "und"


class UsageError(Exception):
    """Command-line usage problem; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # raise instead of argparse's exit(2)
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _add_lexicon_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--lexicon",
        default=os.environ.get("LID_LEXICON"),
        help="lexicon directory (default: $LID_LEXICON)",
    )


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("scoring configuration")
    group.add_argument("--preset", choices=sorted(PRESETS), help="stock configuration")
    group.add_argument("--p", type=float, help="stop-word mixing coefficient in [0,1]")
    group.add_argument("--tf", choices=("raw", "log"), help="term-frequency mode")
    group.add_argument(
        "--weight", choices=("unit", "ratio", "log_ratio"), help="term-weighting mode"
    )
    group.add_argument(
        "--fallback",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="score diacritic-free texts with stop words only (default: on)",
    )


def _resolve_config(args: argparse.Namespace) -> ScoringConfig:
    explicit = [
        flag
        for flag, value in (
            ("--p", args.p),
            ("--tf", args.tf),
            ("--weight", args.weight),
            ("--fallback/--no-fallback", args.fallback),
        )
        if value is not None
    ]
    if args.preset:
        if explicit:
            raise UsageError(
                f"lexid: error: --preset cannot be combined with {', '.join(explicit)}"
            )
        return preset_config(args.preset)
    if args.p is None:
        raise UsageError("lexid: error: either --preset or --p is required")
    try:
        return ScoringConfig(
            p=args.p,
            tf_mode=args.tf or "raw",
            weight_mode=args.weight or "unit",
            stopword_fallback=True if args.fallback is None else args.fallback,
        )
    except ValueError as exc:
        raise UsageError(f"lexid: error: {exc}") from None


def _require_lexicon(args: argparse.Namespace):
    if not args.lexicon:
        raise UsageError("lexid: error: --lexicon is required (or set LID_LEXICON)")
    return load_lexicon(args.lexicon)


def _cmd_detect(args: argparse.Namespace) -> int:
    sources = sum((args.text is not None, args.stdin, args.file is not None))
    if sources != 1:
        raise UsageError(
            "lexid: error: exactly one input source (TEXT, --stdin or --file) is required"
        )
    lex = _require_lexicon(args)
    cfg = _resolve_config(args)

    if args.stdin:
        inputs = (line.rstrip("\n") for line in sys.stdin)
    elif args.file is not None:
        with open(args.file, encoding="utf-8") as handle:
            inputs = [line.rstrip("\n") for line in handle]
    else:
        inputs = [args.text]

    for text in inputs:
        verdict, scores = classify(normalize_text(text), lex, cfg)
        label = verdict.language or UNDETERMINED
        if args.scores:
            print(
                json.dumps(
                    {"language": label, "reason": verdict.reason, "scores": scores},
                    ensure_ascii=False,
                )
            )
        else:
            print(label)
    return EXIT_OK


def _cmd_evaluate(args: argparse.Namespace) -> int:
    if args.jobs < 1:
        raise UsageError("lexid: error: --jobs must be >= 1")
    lex = _require_lexicon(args)
    cfg = _resolve_config(args)
    corpus = load_corpus(args.corpus, args.format)
    report = evaluate(corpus, lex, cfg, parallelism=args.jobs)
    payload = emit_report(report, args.report)
    if args.out:
        Path(args.out).write_bytes(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
    print(
        f"overall accuracy {report.overall_accuracy * 100:.2f}%"
        f" over {report.total_documents} documents",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_dict(args: argparse.Namespace) -> int:
    if args.action == "strip":
        lines = []
        with open(args.in_path, encoding="utf-8") as handle:
            for line in handle:
                term = line.strip()
                if not term or term.startswith("#"):
                    continue
                lines.append(strip_diacritics(term))
        Path(args.out).write_text("".join(f"{w}\n" for w in lines), encoding="utf-8")
        return EXIT_OK
    if args.action == "augment":
        lex = _require_lexicon(args)
        save_lexicon(augment_with_stripped_variants(lex), args.out)
        return EXIT_OK
    if args.action == "validate":
        findings = []
        lex = load_lexicon(args.lexicon, warnings_to=findings) if args.lexicon else None
        if lex is None:
            raise UsageError("lexid: error: --lexicon is required (or set LID_LEXICON)")
        findings.extend(validate_lexicon(lex))
        for finding in findings:
            print(finding)
        if any(f.severity == "error" for f in findings):
            return EXIT_LEXICON
        return EXIT_OK
    # show-builtin-diacritics
    for code, chars in BUILTIN_DIACRITICS.items():
        print(f"{code}\t{chars}")
    return EXIT_OK


def _cmd_presets(args: argparse.Namespace) -> int:
    for name, cfg in PRESETS.items():
        p = Fraction(cfg.p).limit_denominator(1000)
        fallback = "on" if cfg.stopword_fallback else "off"
        print(f"{name}\tp={p}\ttf={cfg.tf_mode}\tweight={cfg.weight_mode}\tfallback={fallback}")
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="lexid", description=__doc__)
    commands = parser.add_subparsers(dest="command", required=True)

    detect = commands.add_parser("detect", help="classify one text or a stream of lines")
    detect.add_argument("text", nargs="?", default=None, help="text to classify")
    detect.add_argument("--stdin", action="store_true", help="classify each stdin line")
    detect.add_argument("--file", help="classify each line of a file")
    detect.add_argument(
        "--scores", action="store_true", help="print per-language scores as JSON"
    )
    _add_lexicon_flag(detect)
    _add_config_flags(detect)
    detect.set_defaults(func=_cmd_detect)

    evaluate_cmd = commands.add_parser("evaluate", help="run over a labeled corpus")
    evaluate_cmd.add_argument("--corpus", required=True, help="corpus file path")
    evaluate_cmd.add_argument(
        "--format", required=True, choices=("tsv", "jsonl"), help="corpus file format"
    )
    evaluate_cmd.add_argument(
        "--report", choices=("table", "csv", "json"), default="table", help="report format"
    )
    evaluate_cmd.add_argument("--jobs", type=int, default=1, help="parallel workers")
    evaluate_cmd.add_argument("--out", help="write the report to this file")
    _add_lexicon_flag(evaluate_cmd)
    _add_config_flags(evaluate_cmd)
    evaluate_cmd.set_defaults(func=_cmd_evaluate)

    dict_cmd = commands.add_parser("dict", help="lexicon tooling")
    actions = dict_cmd.add_subparsers(dest="action", required=True)
    strip = actions.add_parser("strip", help="fold accented characters in a word list")
    strip.add_argument("--in", dest="in_path", required=True, help="input word list")
    strip.add_argument("--out", required=True, help="output word list")
    augment = actions.add_parser(
        "augment", help="add accent-stripped stop-word variants to a lexicon"
    )
    _add_lexicon_flag(augment)
    augment.add_argument("--out", required=True, help="output lexicon directory")
    validate = actions.add_parser("validate", help="report lexicon weaknesses")
    _add_lexicon_flag(validate)
    actions.add_parser("show-builtin-diacritics", help="print the built-in diacritic sets")
    dict_cmd.set_defaults(func=_cmd_dict)

    presets = commands.add_parser("presets", help="list the stock configurations")
    presets.set_defaults(func=_cmd_presets)

    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s: %(message)s")
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except CorpusFormatError as exc:
        print(f"lexid: corpus error: {exc}", file=sys.stderr)
        return EXIT_CORPUS
    except LexiconError as exc:
        print(f"lexid: lexicon error: {exc}", file=sys.stderr)
        return EXIT_LEXICON
    except OSError as exc:
        print(f"lexid: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:  # e.g. corpus gold labels outside the lexicon
        print(f"lexid: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
