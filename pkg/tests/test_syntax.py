from fractions import Fraction

import pytest

from infon import UNBOUNDED, Finite
from infon.syntax import (
    Binary,
    Call,
    LexError,
    Let,
    Literal,
    Name,
    ParseError,
    parse,
    parse_literal,
    parse_source,
    tokenize,
)


def kinds(src):
    return [t.kind for t in tokenize(src)]


def test_tokenize_join_example():
    toks = tokenize("3_4 * 4_5")
    assert kinds("3_4 * 4_5") == ["Number", "Star", "Number"]
    assert (toks[0].value, toks[0].order) == (3, Finite(4))
    assert (toks[2].value, toks[2].order) == (4, Finite(5))


def test_tokenize_empty():
    assert tokenize("") == []


def test_tokenize_decimals_are_exact():
    toks = tokenize("5.5+6.5")
    assert kinds("5.5+6.5") == ["Number", "Plus", "Number"]
    assert toks[0].value == Fraction(11, 2) and toks[0].order is UNBOUNDED
    assert toks[2].value == Fraction(13, 2)


def test_fraction_literal_needs_order_suffix():
    assert kinds("1/2_2") == ["Number"]
    assert tokenize("1/2_2")[0].value == Fraction(1, 2)
    assert kinds("1/2") == ["Number", "Slash", "Number"]
    assert kinds("3_4/2_5") == ["Number", "Slash", "Number"]


def test_keywords_and_builtins():
    assert kinds("let A = order(x)") == ["Let", "Name", "Equals", "Builtin", "LParen", "Name", "RParen"]


def test_lexemes_reproduce_source():
    src = "  let  A=(3_4 *4_5)+ 1/2_2 , x "
    rebuilt, pos = [], 0
    for t in tokenize(src):
        rebuilt.append(src[pos:t.start])
        rebuilt.append(t.text)
        pos = t.end
    rebuilt.append(src[pos:])
    assert "".join(rebuilt) == src


def test_lex_error_offset():
    with pytest.raises(LexError) as info:
        tokenize("1_4 $ 2")
    assert info.value.offset == 4 and info.value.found == "$"


def test_parse_additive():
    assert parse_source("1_4 + 2_4") == Binary("+", Literal(1, Finite(4)), Literal(2, Finite(4)))


def test_parse_distribution_shape():
    assert parse_source("a*(b+c)") == Binary("*", Name("a"), Binary("+", Name("b"), Name("c")))


def test_precedence_and_left_associativity():
    assert parse_source("a + b * c") == Binary("+", Name("a"), Binary("*", Name("b"), Name("c")))
    assert parse_source("a - b - c") == Binary("-", Binary("-", Name("a"), Name("b")), Name("c"))
    assert parse_source("a / b * c") == Binary("*", Binary("/", Name("a"), Name("b")), Name("c"))


def test_parse_let_and_call():
    assert parse_source("let A = eq(x, 5_8)") == Let(
        "A", Call("eq", (Name("x"), Literal(5, Finite(8)))))


def test_negative_literal():
    assert parse_source("-3/2") == Binary("/", Literal(-3, UNBOUNDED), Literal(2, UNBOUNDED))
    assert parse_source("5 - 2") == Binary("-", Literal(5, UNBOUNDED), Literal(2, UNBOUNDED))
    with pytest.raises(ParseError):
        parse_source("- 2")


@pytest.mark.parametrize("src", ["1_4 + + 2_4", "(1_4", "1_4)", "let = 3", "eq(1)", "order(1, 2)", "a b"])
def test_parse_errors(src):
    with pytest.raises(ParseError) as info:
        parse_source(src)
    start, end = info.value.span
    assert 0 <= start <= end <= len(src)


def test_parse_error_span_covers_lexeme():
    src = "1_4 + + 2_4"
    with pytest.raises(ParseError) as info:
        parse_source(src)
    start, end = info.value.span
    assert src[start:end] == "+" and start == 6


def test_parse_empty():
    assert parse([]) is None


def test_parse_literal():
    assert parse_literal("12_20") == (12, Finite(20))
    assert parse_literal("1_1") == (1, Finite(1))
    with pytest.raises(ParseError):
        parse_literal("1_2 + 1_2")
