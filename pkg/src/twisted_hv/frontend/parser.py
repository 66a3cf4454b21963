"""Recursive-descent parser for Lie/enveloping-algebra expressions.

Grammar::

    expr     := term (("+" | "-") term)*
    term     := ("-")? factor ("*" factor)*
    factor   := primary ("^" nat)?
    primary  := atom | "[" expr "," expr "]" | "(" expr ")" | rational
    atom     := ("L" | "I") "[" int "]" | "C" | "CI" | "CLI"
    rational := int ("/" nat)?

Precedence, tightest first: ``^``, ``*``, unary minus, binary ``+``/``-``.
Parentheses only group; they leave no node behind.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..central import CENTRAL_NAMES
from ..errors import ParseError
from ..structure import MAX_INDEX


@dataclass(frozen=True)
class Number:
    value: Fraction


@dataclass(frozen=True)
class Gen:
    kind: str
    index: int


@dataclass(frozen=True)
class Central:
    name: str


@dataclass(frozen=True)
class Bracket:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


Expr = Union[Number, Gen, Central, Bracket, Mul, Pow, Neg, Add, Sub]

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]+)|(?P<sym>[\[\](),+\-*^/]))")


@dataclass(frozen=True)
class _Tok:
    kind: str  # "int", "name", "sym" or "end"
    text: str
    offset: int


def tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            toks.append(_Tok("end", "", pos))
            return toks
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), m.start(kind)))
        pos = m.end()


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, message: str, expected=(), tok: _Tok | None = None):
        tok = tok or self.tok
        raise ParseError(message, self.text, tok.offset, expected)

    def found(self) -> str:
        return "end of input" if self.tok.kind == "end" else repr(self.tok.text)

    def at(self, sym: str) -> bool:
        return self.tok.kind == "sym" and self.tok.text == sym

    def expect(self, sym: str) -> _Tok:
        if not self.at(sym):
            self.fail(f"unexpected {self.found()}", (f"'{sym}'",))
        tok = self.tok
        self.i += 1
        return tok

    def nat(self) -> int:
        if self.tok.kind != "int":
            self.fail(f"unexpected {self.found()}", ("integer",))
        value = int(self.tok.text)
        self.i += 1
        return value

    def signed_int(self) -> int:
        sign = 1
        if self.at("-"):
            self.i += 1
            sign = -1
        return sign * self.nat()

    def parse(self) -> Expr:
        node = self.expr()
        if self.tok.kind != "end":
            self.fail(f"unexpected {self.found()}", ("'+'", "'-'", "'*'", "end of input"))
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.tok.text
            self.i += 1
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self) -> Expr:
        negate = False
        if self.at("-"):
            self.i += 1
            negate = True
        node = self.factor()
        while self.at("*"):
            self.i += 1
            node = Mul(node, self.factor())
        return Neg(node) if negate else node

    def factor(self) -> Expr:
        node = self.primary()
        if self.at("^"):
            self.i += 1
            if self.at("-"):
                self.fail("negative exponent", ("non-negative integer",))
            node = Pow(node, self.nat())
        return node

    def primary(self) -> Expr:
        tok = self.tok
        if tok.kind == "name":
            return self.atom()
        if self.at("["):
            self.i += 1
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect("]")
            return Bracket(left, right)
        if self.at("("):
            self.i += 1
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "int" or (self.at("-") and self.toks[self.i + 1].kind == "int"):
            num = self.signed_int()
            den = 1
            if self.at("/"):
                self.i += 1
                den_tok = self.tok
                den = self.nat()
                if den == 0:
                    self.fail("zero denominator", tok=den_tok)
            return Number(Fraction(num, den))
        self.fail(
            f"unexpected {self.found()}",
            ("generator", "central element", "'['", "'('", "rational"),
        )

    def atom(self) -> Expr:
        tok = self.tok
        self.i += 1
        if tok.text in ("L", "I"):
            self.expect("[")
            index_tok = self.tok
            index = self.signed_int()
            if abs(index) > MAX_INDEX:
                self.fail(f"generator index {index} out of range", tok=index_tok)
            self.expect("]")
            return Gen(tok.text, index)
        if tok.text in CENTRAL_NAMES:
            return Central(tok.text)
        self.fail(f"unknown symbol {tok.text!r}", ("L[..]", "I[..]", "C", "CI", "CLI"), tok)


def parse(text: str) -> Expr:
    """Parse expression text into an AST, raising :class:`ParseError` on bad input."""
    return _Parser(text).parse()
