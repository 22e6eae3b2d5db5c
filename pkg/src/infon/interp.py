"""Evaluation of parsed statements against an environment of named infons."""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Callable, Iterable, TextIO

from . import algebra as alg
from .algebra import Infon, InfonError, Order, Universe
from .syntax import Binary, Call, Let, Literal, Name, Span, Statement, SyntaxProblem, parse_source

Value = object  # Infon | Order | float | bool | frozenset | list


class EvalError(Exception):
    """An evaluation failure with the source span that caused it."""

    def __init__(self, kind: str, message: str, span: Span):
        super().__init__(f"{kind}: {message}")
        self.kind = kind
        self.message = message
        self.span = span


@dataclass
class EvalEnv:
    universe: Universe = field(default_factory=Universe)
    bindings: dict[str, Infon] = field(default_factory=dict)


_BINARY: dict[str, Callable[[Infon, Infon], Infon]] = {
    "+": alg.add_join,
    "-": alg.sub_join,
    "*": alg.mul_join,
    "/": alg.div_join,
}


def _infon(v: Value, span: Span) -> Infon:
    if not isinstance(v, Infon):
        raise EvalError("TypeError", f"expected an infon, got {pretty_print(v)}", span)
    return v


def _order_arg(v: Value, span: Span) -> Order:
    if isinstance(v, Order):
        return v
    return _infon(v, span).order


def _call(name: str, args: list[Value], spans: list[Span]) -> Value:
    if name == "order":
        return alg.order_of(_infon(args[0], spans[0]))
    if name == "bits":
        return alg.order_to_bits(_order_arg(args[0], spans[0]))
    a = _infon(args[0], spans[0])
    if name == "addinv":
        return alg.add_inverse(a)
    if name == "mulinv":
        return alg.mul_inverse(a)
    if name == "members":
        return alg.members(a)
    b = _infon(args[1], spans[1])
    if name == "eq":
        return alg.equal(a, b)
    if name == "iden":
        return alg.identical(a, b)
    if name == "disjoint":
        return alg.disjoint(a, b)
    if name == "intersect":
        return alg.intersection(a, b)
    if name == "evolve":
        return alg.evolve(a, b)
    if name == "cycle":
        return alg.trajectory(a, b)
    raise AssertionError(name)


def evaluate(e: Statement, env: EvalEnv) -> Value:
    """Evaluate an expression; a ``let`` binds and returns the bound infon."""
    if isinstance(e, Let):
        value = _infon(evaluate(e.expr, env), e.expr.span)
        env.bindings[e.name] = value
        return value
    if isinstance(e, Literal):
        try:
            return alg.new_atom(env.universe, e.value, e.order)
        except InfonError as exc:
            raise EvalError(type(exc).__name__, str(exc), e.span) from exc
    if isinstance(e, Name):
        try:
            return env.bindings[e.identifier]
        except KeyError:
            raise EvalError("NameError", f"{e.identifier!r} is not bound", e.span) from None
    if isinstance(e, Binary):
        left = _infon(evaluate(e.left, env), e.left.span)
        right = _infon(evaluate(e.right, env), e.right.span)
        try:
            return _BINARY[e.op](left, right)
        except InfonError as exc:
            raise EvalError(type(exc).__name__, str(exc), e.span) from exc
    if isinstance(e, Call):
        args = [evaluate(a, env) for a in e.args]
        try:
            return _call(e.builtin, args, [a.span for a in e.args])
        except InfonError as exc:
            raise EvalError(type(exc).__name__, str(exc), e.span) from exc
    raise TypeError(f"not an expression: {e!r}")


def run(source: str, env: EvalEnv) -> Value | None:
    """Lex, parse and evaluate one line; blank lines give ``None``."""
    stmt = parse_source(source)
    if stmt is None:
        return None
    return evaluate(stmt, env)


def pretty_print(v: Value) -> str:
    if isinstance(v, Infon):
        return alg.render(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Order):
        return str(v)
    if isinstance(v, float):
        return str(int(v)) if v.is_integer() else f"{v:.4f}"
    if isinstance(v, frozenset):
        return "{" + ", ".join(alg.structure(m) for m in sorted(v, key=lambda m: m.key)) + "}"
    if isinstance(v, list):
        return "[" + ", ".join(pretty_print(x) for x in v) + "]"
    return str(v)


# ---------------------------------------------------------------------------
# Scripts and the REPL
# ---------------------------------------------------------------------------


def strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def format_diagnostic(line: str, span: Span, message: str, where: str = "") -> str:
    start, end = span
    caret = " " * start + "^" * max(1, end - start)
    prefix = f"{where}:{start + 1}: " if where else ""
    return f"{prefix}error: {message}\n  {line}\n  {caret}"


def run_script(lines: Iterable[str], out: TextIO, err: TextIO, name: str = "<stdin>") -> int:
    """Run statements line by line; returns 0, 3 (syntax) or 4 (evaluation)."""
    env = EvalEnv()
    for lineno, raw in enumerate(lines, 1):
        line = strip_comment(raw.rstrip("\n"))
        try:
            stmt = parse_source(line)
            if stmt is None:
                continue
            value = evaluate(stmt, env)
        except SyntaxProblem as exc:
            print(format_diagnostic(line, exc.span, exc.message, f"{name}:{lineno}"), file=err)
            return 3
        except EvalError as exc:
            print(format_diagnostic(line, exc.span, str(exc), f"{name}:{lineno}"), file=err)
            return 4
        if getattr(value, "degenerate", False):
            print(f"{name}:{lineno}: warning: DegenerateCollapse: a zero-valued factor "
                  "collapses the joint value", file=err)
        if not isinstance(stmt, Let):
            print(pretty_print(value), file=out)
    return 0


def repl(stdin: TextIO = sys.stdin, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    env = EvalEnv()
    interactive = stdin.isatty()
    if interactive:
        try:
            import readline  # noqa: F401
        except ImportError:
            pass
    while True:
        if interactive:
            try:
                line = input("infon> ")
            except EOFError:
                print(file=out)
                return 0
        else:
            line = stdin.readline()
            if not line:
                return 0
        line = strip_comment(line).strip()
        if line == ":quit":
            return 0
        if line == ":env":
            for name, value in env.bindings.items():
                print(f"{name} = {alg.structure(value)}", file=out)
            continue
        try:
            stmt = parse_source(line)
            if stmt is None:
                continue
            value = evaluate(stmt, env)
        except SyntaxProblem as exc:
            print(format_diagnostic(line, exc.span, exc.message), file=err)
            continue
        except EvalError as exc:
            print(format_diagnostic(line, exc.span, str(exc)), file=err)
            continue
        if isinstance(stmt, Let):
            print(f"{stmt.name} = {pretty_print(value)}", file=out)
        else:
            print(pretty_print(value), file=out)
