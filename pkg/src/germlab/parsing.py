"""Text formats: polynomial expressions and corpus entry files.

Expression grammar (no implicit multiplication, '^' binds tightest,
then '*', then '+'/'-'; unary minus allowed; '/' only inside rational
literals a/b):

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)*
    atom   := INT ('/' INT)? | IDENT | '(' expr ')'

A corpus file is a sequence of entries separated by blank lines; '#'
starts a comment.  Each entry is key = value lines:

    name = A2            (required, identifier)
    vars = x, y          (required, distinct identifiers)
    f = x^3 + y^2        (one or more)
    expect_mu = 2        (optional; also expect_tau, expect_e_crit,
                          which accept an integer or 'infinite')
    expect_icis = true   (optional boolean)
    tags = ADE, plane-curve   (optional labels)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import inf

from .errors import ParseError
from .fields import QQ
from .ring import LocalPolynomial, RingContext

_TOKEN = re.compile(r"(?P<ws>\s+)|(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()/])")


@dataclass
class _Token:
    kind: str  # int | ident | op | end
    text: str
    line: int
    col: int


def _tokenize(text: str, line: int):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos + 1)
        pos = m.end()
        if m.lastgroup == "ws":
            continue
        tokens.append(_Token(m.lastgroup, m.group(), line, m.start() + 1))
    tokens.append(_Token("end", "", line, len(text) + 1))
    return tokens


class _ExpressionParser:
    def __init__(self, tokens, ctx):
        self.tokens = tokens
        self.pos = 0
        self.ctx = ctx

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok.line, tok.col)

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            self.fail(f"unexpected {tok.text!r} after expression")
        return value

    def expr(self):
        value = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.advance().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        if self.peek().kind == "op" and self.peek().text == "/":
            self.fail("'/' is only allowed between integer literals")
        return value

    def term(self):
        value = self.unary()
        while self.peek().kind == "op" and self.peek().text == "*":
            self.advance()
            value = value * self.unary()
        return value

    def unary(self):
        if self.peek().kind == "op" and self.peek().text == "-":
            self.advance()
            return -self.unary()
        return self.power()

    def power(self):
        value = self.atom()
        while self.peek().kind == "op" and self.peek().text == "^":
            caret = self.advance()
            tok = self.peek()
            if tok.kind != "int":
                self.fail("exponent must be a non-negative integer literal", caret)
            self.advance()
            value = value ** int(tok.text)
        return value

    def atom(self):
        tok = self.advance()
        if tok.kind == "int":
            numerator = int(tok.text)
            if self.peek().kind == "op" and self.peek().text == "/":
                slash = self.advance()
                den_tok = self.peek()
                if den_tok.kind != "int":
                    self.fail("denominator must be an integer literal", slash)
                self.advance()
                if int(den_tok.text) == 0:
                    self.fail("zero denominator", den_tok)
                return self.ctx.constant(Fraction(numerator, int(den_tok.text)))
            return self.ctx.constant(numerator)
        if tok.kind == "ident":
            try:
                return self.ctx.variable(tok.text)
            except KeyError:
                self.fail(f"unknown variable {tok.text!r}", tok)
        if tok.kind == "op" and tok.text == "(":
            value = self.expr()
            closing = self.advance()
            if closing.kind != "op" or closing.text != ")":
                self.fail("expected ')'", closing)
            return value
        if tok.kind == "op" and tok.text == "/":
            self.fail("'/' is only allowed between integer literals", tok)
        self.fail(f"unexpected {tok.text!r}" if tok.text else "unexpected end of input", tok)


def parse_expression(text: str, ctx: RingContext, line: int = 1) -> LocalPolynomial:
    return _ExpressionParser(_tokenize(text, line), ctx).parse()


def poly(ctx: RingContext, text: str) -> LocalPolynomial:
    """Convenience constructor used throughout tests and demos."""
    return parse_expression(text, ctx)


# corpus entries

_KEYS = {
    "name",
    "vars",
    "f",
    "expect_mu",
    "expect_tau",
    "expect_e_crit",
    "expect_icis",
    "tags",
}

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_TAG = re.compile(r"[A-Za-z0-9_-]+\Z")


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    var_names: tuple
    poly_sources: tuple
    polys: tuple  # parsed over the rationals
    expect_mu: object = None
    expect_tau: object = None
    expect_e_crit: object = None
    expect_icis: object = None
    tags: tuple = ()
    line: int = 0

    def context(self, field=None) -> RingContext:
        return RingContext(self.var_names, field)

    def build_polys(self, field=None):
        ctx = self.context(field)
        if field is None or field == QQ:
            return ctx, self.polys
        return ctx, tuple(p.coerce_to(ctx) for p in self.polys)


def _parse_expect(value: str, line: int):
    if value == "infinite":
        return inf
    if re.fullmatch(r"-?\d+", value):
        return int(value)
    raise ParseError(f"expected an integer or 'infinite', got {value!r}", line)


def _parse_block(lines, start_line) -> CorpusEntry:
    fields = {}
    f_sources = []
    for lineno, text in lines:
        if "=" not in text:
            raise ParseError("expected 'key = value'", lineno)
        key, _, value = text.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _KEYS:
            raise ParseError(f"unknown key {key!r}", lineno)
        if key == "f":
            f_sources.append((lineno, value))
            continue
        if key in fields:
            raise ParseError(f"duplicate key {key!r}", lineno)
        fields[key] = (lineno, value)

    if "name" not in fields:
        raise ParseError("entry is missing 'name'", start_line)
    name_line, name = fields["name"]
    if not _IDENT.fullmatch(name):
        raise ParseError(f"entry name {name!r} is not an identifier", name_line)
    if "vars" not in fields:
        raise ParseError(f"entry {name!r} is missing 'vars'", start_line)
    vars_line, vars_text = fields["vars"]
    var_names = tuple(v.strip() for v in vars_text.split(","))
    for v in var_names:
        if not _IDENT.fullmatch(v):
            raise ParseError(f"bad variable name {v!r}", vars_line)
    if len(set(var_names)) != len(var_names):
        raise ParseError("duplicate variable names", vars_line)
    if not f_sources:
        raise ParseError(f"entry {name!r} has no f lines", start_line)
    if len(f_sources) > len(var_names):
        raise ParseError(
            f"entry {name!r} has more components than variables", start_line
        )

    ctx = RingContext(var_names, QQ)
    polys = []
    for lineno, source in f_sources:
        p = parse_expression(source, ctx, line=lineno)
        if p.constant_term() != 0:
            raise ParseError("component does not vanish at the origin", lineno)
        polys.append(p)

    expect_mu = expect_tau = expect_e_crit = expect_icis = None
    if "expect_mu" in fields:
        expect_mu = _parse_expect(fields["expect_mu"][1], fields["expect_mu"][0])
    if "expect_tau" in fields:
        expect_tau = _parse_expect(fields["expect_tau"][1], fields["expect_tau"][0])
    if "expect_e_crit" in fields:
        expect_e_crit = _parse_expect(
            fields["expect_e_crit"][1], fields["expect_e_crit"][0]
        )
    if "expect_icis" in fields:
        lineno, raw = fields["expect_icis"]
        if raw not in ("true", "false"):
            raise ParseError(f"expect_icis must be true or false, got {raw!r}", lineno)
        expect_icis = raw == "true"
    tags = ()
    if "tags" in fields:
        lineno, raw = fields["tags"]
        tags = tuple(t.strip() for t in raw.split(","))
        for tag in tags:
            if not _TAG.fullmatch(tag):
                raise ParseError(f"bad tag {tag!r}", lineno)

    return CorpusEntry(
        name=name,
        var_names=var_names,
        poly_sources=tuple(src for _, src in f_sources),
        polys=tuple(polys),
        expect_mu=expect_mu,
        expect_tau=expect_tau,
        expect_e_crit=expect_e_crit,
        expect_icis=expect_icis,
        tags=tags,
        line=start_line,
    )


def parse_corpus(text: str):
    """Parse a corpus file into a list of entries."""
    blocks = []
    current = []
    current_start = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            if current:
                blocks.append((current_start, current))
                current = []
                current_start = None
            continue
        if current_start is None:
            current_start = lineno
        current.append((lineno, line))
    if current:
        blocks.append((current_start, current))
    entries = [_parse_block(lines, start) for start, lines in blocks]
    names = [e.name for e in entries]
    dupes = {n for n in names if names.count(n) > 1}
    if dupes:
        raise ParseError(f"duplicate entry names: {sorted(dupes)}")
    return entries


def parse_entry(text: str) -> CorpusEntry:
    entries = parse_corpus(text)
    if len(entries) != 1:
        raise ParseError(f"expected exactly one entry, found {len(entries)}")
    return entries[0]
