"""Expression parser for polynomials and rational functions.

Accepts the obvious infix syntax: integer literals, variable names, ``+ - *
/``, powers written ``^`` or ``**``, and parentheses.  ``/`` has the same
precedence as ``*`` and associates left, so ``3/2*x`` means ``(3/2)*x``.
Whitespace (including newlines) is insignificant, which keeps long
transcribed expressions readable as triple-quoted strings.
"""

from __future__ import annotations

import re
from typing import Iterator, NamedTuple

from .mpoly import MPoly, VarTable
from .ratfunc import RatFunc

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>\*\*|[-+*/^()]))"
)


class _Token(NamedTuple):
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> Iterator[_Token]:
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"unexpected character {text[pos]!r} at {pos}")
        pos = m.end()
        for kind in ("number", "name", "op"):
            tok = m.group(kind)
            if tok is not None:
                yield _Token(kind, tok, m.start())
                break
    yield _Token("end", "", n)


class _Parser:
    def __init__(self, ring: VarTable, text: str):
        self.ring = ring
        self.text = text
        self.tokens = list(_tokenize(text))
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def next(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> None:
        tok = self.next()
        if tok.text != text:
            raise ValueError(
                f"expected {text!r} at position {tok.pos}, got {tok.text!r}")

    def parse(self) -> RatFunc:
        out = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ValueError(f"trailing input at position {tok.pos}: {tok.text!r}")
        return out

    def expr(self) -> RatFunc:
        tok = self.peek()
        negate = False
        if tok.kind == "op" and tok.text in "+-":
            self.next()
            negate = tok.text == "-"
        out = self.term()
        if negate:
            out = -out
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.next()
                rhs = self.term()
                out = out - rhs if tok.text == "-" else out + rhs
            else:
                return out

    def term(self) -> RatFunc:
        out = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "*/":
                self.next()
                rhs = self.factor()
                out = out / rhs if tok.text == "/" else out * rhs
            else:
                return out

    def factor(self) -> RatFunc:
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.next()
            inner = self.factor()
            return -inner if tok.text == "-" else inner
        base = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text in ("^", "**"):
            self.next()
            return base ** self.exponent()
        return base

    def exponent(self) -> int:
        sign = 1
        tok = self.next()
        if tok.kind == "op" and tok.text == "-":
            sign = -1
            tok = self.next()
        if tok.kind != "number":
            raise ValueError(f"expected integer exponent at position {tok.pos}")
        return sign * int(tok.text)

    def atom(self) -> RatFunc:
        tok = self.next()
        if tok.kind == "number":
            return RatFunc.const(self.ring, int(tok.text))
        if tok.kind == "name":
            if tok.text not in self.ring.names:
                raise ValueError(
                    f"unknown variable {tok.text!r} at position {tok.pos}")
            return RatFunc.var(self.ring, tok.text)
        if tok.kind == "op" and tok.text == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ValueError(f"unexpected token {tok.text!r} at position {tok.pos}")


def parse_ratfunc(ring: VarTable, text: str) -> RatFunc:
    return _Parser(ring, text).parse()


def parse_poly(ring: VarTable, text: str) -> MPoly:
    rf = parse_ratfunc(ring, text)
    if not rf.is_polynomial():
        raise ValueError("expression is not a polynomial")
    return rf.as_poly()
