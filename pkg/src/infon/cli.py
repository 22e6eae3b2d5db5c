"""Command-line front end: ``eval``, ``repl``, ``check`` and ``explain``."""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import checker
from .checker import CheckConfig, ConfigError, PropertyId, Verdict
from .interp import repl, run_script

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2
EXIT_SYNTAX = 3
EXIT_EVAL = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits 2 by default; keep it explicit
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _property(text: str) -> PropertyId:
    try:
        return PropertyId.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"{text} is not a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="infon", description="Exact infon algebra and model checker.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_eval = sub.add_parser("eval", help="run a script, printing each expression's value")
    p_eval.add_argument("path", nargs="?", default="-", help="script file, or - for stdin")

    sub.add_parser("repl", help="interactive evaluation")

    p_check = sub.add_parser("check", help="verify the laws by exhaustive enumeration")
    p_check.add_argument("--max-order", type=int, default=8)
    p_check.add_argument("--denominator-bound", type=_positive, default=1)
    p_check.add_argument("--property", dest="properties", action="append", type=_property,
                         metavar="P", help="restrict to a property (repeatable)")
    p_check.add_argument("--format", choices=("text", "json"), default="text")
    p_check.add_argument("--seed", type=int, default=None)
    p_check.add_argument("--budget", type=_positive, default=10**7)
    p_check.add_argument("--timing", action="store_true",
                         help="include elapsed times (output is then not reproducible)")

    p_explain = sub.add_parser("explain", help="describe a property")
    p_explain.add_argument("property", type=_property)
    return parser


def _check(args) -> int:
    props = frozenset(args.properties) if args.properties else frozenset(PropertyId)
    try:
        config = CheckConfig(
            max_order=args.max_order,
            denominator_bound=args.denominator_bound,
            properties=props,
            sample_seed=args.seed,
            case_budget=args.budget,
        )
    except ConfigError as exc:
        print(f"infon check: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = checker.run_all(config)
    if args.format == "json":
        sys.stdout.write(report.to_jsonl(timing=args.timing))
    else:
        sys.stdout.write(report.to_text(timing=args.timing))
    unexpected = [
        e for e in report.entries
        if e.verdict is not Verdict.HOLDS and e.verdict is not checker.EXPECTED[e.property]
    ]
    for e in unexpected:
        print(f"infon check: unexpected verdict {e.verdict.value} for {e.property.value}",
              file=sys.stderr)
    return EXIT_UNEXPECTED if unexpected else EXIT_OK


def _explain(prop: PropertyId) -> int:
    anchor, statement = checker.STATEMENTS[prop]
    print(f"{prop.value}")
    print(f"  checks:   {statement}")
    print(f"  anchor:   {anchor}")
    print(f"  expected: {checker.EXPECTED[prop].value}")
    cond = checker.CONDITIONS.get(prop)
    if cond:
        print(f"  condition: {cond}")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "eval":
        if args.path == "-":
            return run_script(sys.stdin, sys.stdout, sys.stderr)
        try:
            with open(args.path, encoding="utf-8") as fh:
                return run_script(fh, sys.stdout, sys.stderr, args.path)
        except OSError as exc:
            print(f"infon eval: error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    if args.command == "repl":
        return repl(sys.stdin, sys.stdout, sys.stderr)
    if args.command == "check":
        return _check(args)
    return _explain(args.property)


if __name__ == "__main__":
    sys.exit(main())
