"""Command line entry point: realize, report, drill, serve, lexicon check.

Exit codes: 0 success, 1 usage error, 2 input error.
"""

import argparse
import datetime
import sys

from .drill import load_patterns, run_drill
from .engine import Engine
from .errors import BirealizeError, ParseError, SchemaError, ValidationError
from .interchange import parse_tree
from .lexicon import load_lexicon
from .report import DEMO_PARTICIPANTS, ReportSpec, add_participants, generate_report

USAGE_ERROR, INPUT_ERROR = 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _parse_when(text):
    try:
        return datetime.datetime.fromisoformat(text)
    except ValueError as exc:
        raise BirealizeError(f"bad date-time {text!r}: {exc}") from exc


def _parse_participants(text):
    out = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        name, _, gender = item.partition(":")
        out[name] = gender or "m"
    if not out:
        raise BirealizeError("no participants given")
    return out


def build_parser():
    parser = _Parser(prog="birealize",
                     description="bilingual surface realization engine")
    sub = parser.add_subparsers(dest="command", required=True)

    p_realize = sub.add_parser("realize", help="realize a tree document")
    p_realize.add_argument("tree_file")

    p_report = sub.add_parser("report", help="bilingual meeting report demo")
    p_report.add_argument("--participants", default=None,
                          help="comma list of Name[:g], default the demo trio")
    p_report.add_argument("--event-en", default="assembly")
    p_report.add_argument("--event-fr", default="réunion")
    p_report.add_argument("--date", required=True, help="event date-time, ISO format")
    p_report.add_argument("--today", required=True, help="reference date-time, ISO format")
    p_report.add_argument("--style", choices=("word-table", "interface"), default="word-table")
    p_report.add_argument("--lang", choices=("both", "en", "fr"), default="both")

    p_drill = sub.add_parser("drill", help="interactive translation drill")
    p_drill.add_argument("--source", choices=("en", "fr"), default="en")
    p_drill.add_argument("--target", choices=("en", "fr"), default="fr")
    p_drill.add_argument("--level", type=int, default=0)
    p_drill.add_argument("--seed", type=int, default=None)
    p_drill.add_argument("--patterns", default=None, help="pattern file override")

    p_serve = sub.add_parser("serve", help="start the drill HTTP service")
    p_serve.add_argument("--port", type=int, default=None)
    p_serve.add_argument("--host", default="127.0.0.1")

    p_lex = sub.add_parser("lexicon", help="lexicon utilities")
    lex_sub = p_lex.add_subparsers(dest="lexicon_command", required=True)
    p_check = lex_sub.add_parser("check", help="validate a lexicon against its rules")
    p_check.add_argument("lexicon_file")
    p_check.add_argument("rules_file")
    p_check.add_argument("--lang", choices=("en", "fr"), default="en")
    return parser


def _cmd_realize(args):
    try:
        data = open(args.tree_file, "rb").read()
    except OSError as exc:
        print(f"cannot read {args.tree_file}: {exc}", file=sys.stderr)
        return INPUT_ERROR
    engine = Engine.default()
    try:
        tree = parse_tree(engine, data)
    except (ParseError, SchemaError) as exc:
        print(f"bad tree document: {exc}", file=sys.stderr)
        return INPUT_ERROR
    result = engine.realize(tree)
    print(result.text)
    for warning in result.warnings:
        print(f"warning [{warning.code}] {warning.message}", file=sys.stderr)
    return 0


def _cmd_report(args):
    engine = Engine.default()
    participants = (
        _parse_participants(args.participants) if args.participants else dict(DEMO_PARTICIPANTS)
    )
    add_participants(engine, participants)
    spec = ReportSpec(
        event_en=args.event_en,
        event_fr=args.event_fr,
        participants=list(participants),
        date=_parse_when(args.date),
        today=_parse_when(args.today),
    )
    languages = ("en", "fr") if args.lang == "both" else (args.lang,)
    for lang in languages:
        print(generate_report(engine, spec, style=args.style, language=lang))
    return 0


def _cmd_drill(args):
    if args.source == args.target:
        print("source and target languages must differ", file=sys.stderr)
        return USAGE_ERROR
    engine = Engine.default()
    data = None
    if args.patterns:
        try:
            data = open(args.patterns, "rb").read()
        except OSError as exc:
            print(f"cannot read {args.patterns}: {exc}", file=sys.stderr)
            return INPUT_ERROR
    patterns = load_patterns(engine, data)
    engine.seal()
    run_drill(engine, patterns, args.source, args.target, level=args.level, seed=args.seed)
    return 0


def _cmd_serve(args):
    import os

    import uvicorn

    from .service import create_app

    port = args.port or int(os.environ.get("BIREALIZE_PORT", "8000"))
    uvicorn.run(create_app(), host=args.host, port=port)
    return 0


def _cmd_lexicon_check(args):
    try:
        lexicon_bytes = open(args.lexicon_file, "rb").read()
        rules_bytes = open(args.rules_file, "rb").read()
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return INPUT_ERROR
    try:
        lexicon = load_lexicon(args.lang, lexicon_bytes, rules_bytes)
    except (ParseError, ValidationError) as exc:
        print(f"invalid lexicon: {exc}", file=sys.stderr)
        return INPUT_ERROR
    print(f"{args.lang}: {len(lexicon)} entries, {len(lexicon.ruleset.tables)} tables")
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "realize":
            return _cmd_realize(args)
        if args.command == "report":
            return _cmd_report(args)
        if args.command == "drill":
            return _cmd_drill(args)
        if args.command == "serve":
            return _cmd_serve(args)
        if args.command == "lexicon":
            return _cmd_lexicon_check(args)
    except BirealizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
