import math
import random
from fractions import Fraction

import pytest

from germlab import (
    ParseError,
    PrimeField,
    RingContext,
    format_polynomial,
    parse_corpus,
    parse_entry,
    parse_expression,
    poly,
)


def test_expression_basics(ctx2):
    x, y = ctx2.variables()
    assert poly(ctx2, "x + y") == x + y
    assert poly(ctx2, "x^3 + y^2") == x**3 + y**2
    assert poly(ctx2, "2*x*y - 3") == 2 * x * y - 3
    assert poly(ctx2, "1/2*y^3") == y.scale(Fraction(1, 2)) * y * y
    assert poly(ctx2, "-x") == -x
    assert poly(ctx2, "-(x + y)*y") == -(x + y) * y
    assert poly(ctx2, "x - - y") == x + y
    assert poly(ctx2, "x^2^3") == x**6  # chained exponents multiply up
    assert poly(ctx2, "2^3 + x") == 8 + x
    assert poly(ctx2, "x^0") == ctx2.one()


def test_precedence(ctx2):
    x, y = ctx2.variables()
    assert poly(ctx2, "x + y * x ^ 2") == x + y * x**2
    assert poly(ctx2, "(x + y) * x ^ 2") == (x + y) * x**2
    assert poly(ctx2, "-x^2") == -(x**2)


def test_round_trip_random(ctx3):
    rng = random.Random("parse-round-trip")
    for _ in range(15):
        p = ctx3.zero()
        for _ in range(4):
            exps = tuple(rng.randint(0, 3) for _ in range(3))
            p = p + ctx3.monomial(exps, Fraction(rng.randint(-6, 6), rng.randint(1, 5)))
        assert parse_expression(format_polynomial(p), ctx3) == p


def test_round_trip_prime_field():
    ctx = RingContext(("x", "y"), PrimeField(13))
    rng = random.Random("parse-gf")
    for _ in range(10):
        p = ctx.zero()
        for _ in range(4):
            exps = (rng.randint(0, 3), rng.randint(0, 3))
            p = p + ctx.monomial(exps, rng.randint(0, 12))
        assert parse_expression(format_polynomial(p), ctx) == p


def expect_error(text, ctx, fragment, line=None, col=None):
    with pytest.raises(ParseError) as info:
        parse_expression(text, ctx)
    message = str(info.value)
    assert fragment in message
    if line is not None:
        assert info.value.line == line
    if col is not None:
        assert info.value.col == col


def test_expression_errors(ctx2):
    expect_error("x ^ -1", ctx2, "non-negative integer", col=3)
    expect_error("x / y", ctx2, "integer literals", col=3)
    expect_error("x + w", ctx2, "unknown variable 'w'", col=5)
    expect_error("2x", ctx2, "unexpected", col=2)
    expect_error("x + ", ctx2, "unexpected end of input")
    expect_error("(x + y", ctx2, "expected ')'")
    expect_error("1/0", ctx2, "zero denominator", col=3)
    expect_error("x @ y", ctx2, "unexpected character '@'", col=3)
    expect_error("x * * y", ctx2, "unexpected '*'", col=5)


CORPUS_TEXT = """\
# a comment
name = cusp
vars = x, y
f = x^3 + y^2
expect_mu = 2
expect_tau = 2
expect_icis = true
tags = ADE, plane-curve

name = pair
vars = x, y, z
f = x*y        # trailing comment
f = x^2 + z^2
expect_tau = infinite
expect_icis = false
"""


def test_parse_corpus_blocks():
    entries = parse_corpus(CORPUS_TEXT)
    assert [e.name for e in entries] == ["cusp", "pair"]
    cusp, pair = entries
    assert cusp.var_names == ("x", "y")
    assert cusp.expect_mu == 2
    assert cusp.expect_icis is True
    assert cusp.tags == ("ADE", "plane-curve")
    assert len(cusp.polys) == 1
    assert pair.expect_tau == math.inf
    assert pair.expect_icis is False
    assert len(pair.polys) == 2
    assert pair.line == 10


def test_parse_entry_single():
    entry = parse_entry("name = a\nvars = x\nf = x^2\n")
    assert entry.name == "a"
    with pytest.raises(ParseError):
        parse_entry(CORPUS_TEXT)


def corpus_error(text, fragment, line=None):
    with pytest.raises(ParseError) as info:
        parse_corpus(text)
    assert fragment in str(info.value)
    if line is not None:
        assert info.value.line == line


def test_corpus_errors():
    corpus_error("vars = x\nf = x^2\n", "missing 'name'")
    corpus_error("name = a\nf = x^2\n", "missing 'vars'")
    corpus_error("name = a\nvars = x\n", "no f lines")
    corpus_error("name = a\nvars = x, x\nf = x^2\n", "duplicate variable", line=2)
    corpus_error("name = a\nvars = x\nf = x^2\nf = x^3\n", "more components than variables")
    corpus_error("name = a\nname = b\nvars = x\nf = x^2\n", "duplicate key 'name'", line=2)
    corpus_error("name = a\nvars = x\nwhat = 3\nf = x^2\n", "unknown key 'what'", line=3)
    corpus_error("name = a\nvars = x\nf = x + 1\n", "vanish at the origin", line=3)
    corpus_error("name = a\nvars = x\nf = y^2\n", "unknown variable 'y'", line=3)
    corpus_error("name = a\nvars = x\nf = x^2\nexpect_mu = maybe\n", "integer or 'infinite'", line=4)
    corpus_error("name = a\nvars = x\nf = x^2\nexpect_icis = yes\n", "true or false", line=4)
    corpus_error("name = a\nvars = x\nf = x^2\ntags = sp ace\n", "bad tag")
    corpus_error(
        "name = a\nvars = x\nf = x^2\n\nname = a\nvars = y\nf = y^2\n",
        "duplicate entry names",
    )
    corpus_error("name = a\nvars = x\njust text\n", "expected 'key = value'", line=3)


def test_error_line_numbers_offset():
    text = "name = a\nvars = x\nf = x ^ -2\n"
    with pytest.raises(ParseError) as info:
        parse_corpus(text)
    assert info.value.line == 3
    assert "line 3" in str(info.value)
