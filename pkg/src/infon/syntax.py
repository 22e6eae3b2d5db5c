"""Lexer and recursive-descent parser for the infon expression language.

Grammar::

    stmt   := "let" NAME "=" expr | expr
    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := NUMBER | "-" NUMBER | NAME | BUILTIN "(" [expr ("," expr)*] ")" | "(" expr ")"

A NUMBER is a decimal or ``p/q`` value with an optional ``_order`` suffix,
e.g. ``5``, ``5.5``, ``12_20``, ``1/2_2``.  The ``p/q`` form is only a single
literal when an order suffix follows; otherwise ``/`` is division.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .algebra import UNBOUNDED, Finite, Order

BUILTINS = {
    "order": 1,
    "bits": 1,
    "addinv": 1,
    "mulinv": 1,
    "eq": 2,
    "iden": 2,
    "disjoint": 2,
    "members": 1,
    "intersect": 2,
    "evolve": 2,
    "cycle": 2,
}

Span = tuple[int, int]


class SyntaxProblem(Exception):
    def __init__(self, message: str, span: Span):
        super().__init__(message)
        self.message = message
        self.span = span


class LexError(SyntaxProblem):
    def __init__(self, offset: int, found: str):
        super().__init__(f"unexpected character {found!r}", (offset, offset + 1))
        self.offset = offset
        self.found = found


class ParseError(SyntaxProblem):
    def __init__(self, span: Span, expected: str, found: str = ""):
        what = f", found {found!r}" if found else ", found end of input"
        super().__init__(f"expected {expected}{what}", span)
        self.expected = expected


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    start: int
    end: int
    value: Fraction | None = None
    order: Order | None = None

    @property
    def span(self) -> Span:
        return (self.start, self.end)


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>(?P<num>\d+(?:\.\d+)?)(?:/(?P<den>\d+)(?=_))?(?:_(?P<ord>\d+(?:\.\d+)?))?)
  | (?P<name>[A-Za-z][A-Za-z0-9_]*)
  | (?P<op>[-+*/(),=])
    """,
    re.VERBOSE,
)

_OP_KINDS = {
    "+": "Plus",
    "-": "Minus",
    "*": "Star",
    "/": "Slash",
    "(": "LParen",
    ")": "RParen",
    ",": "Comma",
    "=": "Equals",
}


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise LexError(pos, source[pos])
        kind = m.lastgroup
        text = m.group(0)
        start, pos = m.start(), m.end()
        if kind == "ws":
            continue
        if kind == "number":
            value = Fraction(m.group("num"))
            if m.group("den"):
                den = int(m.group("den"))
                if den == 0:
                    raise LexError(m.start("den"), m.group("den"))
                value /= den
            order = Finite(Fraction(m.group("ord"))) if m.group("ord") else UNBOUNDED
            tokens.append(Token("Number", text, start, pos, value, order))
        elif kind == "name":
            if text == "let":
                tokens.append(Token("Let", text, start, pos))
            elif text in BUILTINS:
                tokens.append(Token("Builtin", text, start, pos))
            else:
                tokens.append(Token("Name", text, start, pos))
        else:
            tokens.append(Token(_OP_KINDS[text], text, start, pos))
    return tokens


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Literal:
    value: Fraction
    order: Order
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Name:
    identifier: str
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Expr"
    right: "Expr"
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Call:
    builtin: str
    args: tuple["Expr", ...]
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Let:
    name: str
    expr: "Expr"
    span: Span = field(default=(0, 0), compare=False)


Expr = Union[Literal, Name, Binary, Call]
Statement = Union[Let, Expr]


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, expected: str) -> Token:
        tok = self.peek()
        if tok is None or tok.kind != kind:
            self.fail(expected)
        return self.advance()

    def fail(self, expected: str):
        tok = self.peek()
        if tok is None:
            end = self.tokens[-1].end if self.tokens else 0
            raise ParseError((end, end), expected)
        raise ParseError(tok.span, expected, tok.text)

    def statement(self) -> Statement:
        tok = self.peek()
        if tok is not None and tok.kind == "Let":
            self.advance()
            name = self.expect("Name", "a name after 'let'")
            self.expect("Equals", "'='")
            expr = self.expr()
            return Let(name.text, expr, (tok.start, _span(expr)[1]))
        return self.expr()

    def expr(self) -> Expr:
        left = self.term()
        while (tok := self.peek()) is not None and tok.kind in ("Plus", "Minus"):
            self.advance()
            right = self.term()
            left = Binary(tok.text, left, right, (_span(left)[0], _span(right)[1]))
        return left

    def term(self) -> Expr:
        left = self.factor()
        while (tok := self.peek()) is not None and tok.kind in ("Star", "Slash"):
            self.advance()
            right = self.factor()
            left = Binary(tok.text, left, right, (_span(left)[0], _span(right)[1]))
        return left

    def factor(self) -> Expr:
        tok = self.peek()
        if tok is None:
            self.fail("an operand")
        if tok.kind == "Number":
            self.advance()
            return Literal(tok.value, tok.order, tok.span)
        if tok.kind == "Minus":
            nxt = self.tokens[self.i + 1] if self.i + 1 < len(self.tokens) else None
            if nxt is None or nxt.kind != "Number" or nxt.start != tok.end:
                self.fail("an operand")
            self.i += 2
            return Literal(-nxt.value, nxt.order, (tok.start, nxt.end))
        if tok.kind == "Name":
            self.advance()
            return Name(tok.text, tok.span)
        if tok.kind == "Builtin":
            self.advance()
            self.expect("LParen", f"'(' after {tok.text}")
            args: list[Expr] = []
            if (p := self.peek()) is not None and p.kind != "RParen":
                args.append(self.expr())
                while (p := self.peek()) is not None and p.kind == "Comma":
                    self.advance()
                    args.append(self.expr())
            close = self.expect("RParen", "')' or ','")
            arity = BUILTINS[tok.text]
            if len(args) != arity:
                raise ParseError(
                    (tok.start, close.end), f"{arity} argument(s) to {tok.text}", str(len(args))
                )
            return Call(tok.text, tuple(args), (tok.start, close.end))
        if tok.kind == "LParen":
            self.advance()
            inner = self.expr()
            self.expect("RParen", "')'")
            return inner
        self.fail("an operand")


def _span(e: Statement) -> Span:
    return e.span


def parse(tokens: list[Token]) -> Statement | None:
    """Parse one statement; an empty token list yields ``None``."""
    if not tokens:
        return None
    p = _Parser(tokens)
    stmt = p.statement()
    if p.peek() is not None:
        p.fail("an operator or end of input")
    return stmt


def parse_source(source: str) -> Statement | None:
    return parse(tokenize(source))


def parse_literal(text: str) -> tuple[Fraction, Order]:
    """Read a single literal, e.g. ``"3_4"``, into ``(value, order)``."""
    stmt = parse_source(text)
    if not isinstance(stmt, Literal):
        raise ParseError((0, len(text)), "a single infon literal", text)
    return stmt.value, stmt.order
