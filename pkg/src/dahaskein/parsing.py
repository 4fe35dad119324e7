"""Text grammar for scalars, Laurent polynomials and generator words.

Expressions::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' signed-int)?
    atom   := integer | name | '(' expr ')'

Names are ``s``, ``c`` and, for polynomials, ``x1`` ... ``x<kappa>``.

Words are whitespace- or ``*``-separated letters ``T<i>``, ``x<i>``,
``y<i>``, ``g``, each optionally followed by ``^<signed-int>``; keywords are
case-insensitive.
"""

from __future__ import annotations

import re
from typing import Callable, NamedTuple

from .errors import ParseError
from .laurent import PolyElement
from .scalar import C, S, Scalar

__all__ = ["Token", "parse_scalar", "parse_poly", "tokenize_word", "WordToken"]


class Token(NamedTuple):
    kind: str  # INT, NAME, OP, POW, END
    text: str
    pos: int


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<INT>\d+)|(?P<NAME>[A-Za-z][A-Za-z0-9_]*)|(?P<POW>\^\s*[+-]?\s*\d+)|(?P<OP>[-+*/()]))"
)


def _tokenize(text: str) -> list:
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[bad]!r}", bad, text)
        kind = m.lastgroup
        out.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(Token("END", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, atom: Callable, lift: Callable):
        self.text = text
        self.tokens = _tokenize(text)
        self.k = 0
        self.atom = atom
        self.lift = lift

    def peek(self) -> Token:
        return self.tokens[self.k]

    def take(self) -> Token:
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise ParseError(msg, tok.pos, self.text)

    def parse(self):
        if self.peek().kind == "END":
            self.error("empty expression")
        value = self.expr()
        if self.peek().kind != "END":
            self.error(f"unexpected {self.peek().text!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek().kind == "OP" and self.peek().text in "+-":
            op = self.take().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek().kind == "OP" and self.peek().text in "*/":
            tok = self.take()
            rhs = self.unary()
            if tok.text == "*":
                value = value * rhs
            else:
                try:
                    value = value / rhs
                except (ZeroDivisionError, ArithmeticError) as exc:
                    self.error(str(exc), tok)
        return value

    def unary(self):
        tok = self.peek()
        if tok.kind == "OP" and tok.text in "+-":
            self.take()
            value = self.unary()
            return -value if tok.text == "-" else value
        return self.power()

    def power(self):
        value = self.atom_()
        if self.peek().kind == "POW":
            tok = self.take()
            e = int(re.sub(r"[\s^]", "", tok.text))
            try:
                value = value**e
            except (ZeroDivisionError, ArithmeticError) as exc:
                self.error(str(exc), tok)
        return value

    def atom_(self):
        tok = self.take()
        if tok.kind == "INT":
            return self.lift(Scalar(int(tok.text)))
        if tok.kind == "NAME":
            value = self.atom(tok.text)
            if value is None:
                self.error(f"unknown name {tok.text!r}", tok)
            return value
        if tok.kind == "OP" and tok.text == "(":
            value = self.expr()
            if self.peek().text != ")":
                self.error("expected ')'")
            self.take()
            return value
        self.error(f"unexpected {tok.text or 'end of input'!r}", tok)


def _scalar_atom(name: str):
    return {"s": S, "c": C}.get(name.lower())


def parse_scalar(text: str) -> Scalar:
    """Parse an element of Q(s, c), e.g. ``(s - s^-1)/(s^-1*c^2 - s)``."""
    return _Parser(text, _scalar_atom, lambda x: x).parse()


def parse_poly(text: str, kappa: int) -> PolyElement:
    """Parse a Laurent polynomial in x1..x<kappa> with Q(s, c) coefficients."""
    one = PolyElement.one(kappa)

    def atom(name: str):
        low = name.lower()
        sc = _scalar_atom(low)
        if sc is not None:
            return one.scale(sc)
        m = re.fullmatch(r"x(\d+)", low)
        if m:
            i = int(m.group(1))
            if not 1 <= i <= kappa:
                return None
            return PolyElement.variable(kappa, i)
        return None

    return _Parser(text, atom, lambda x: one.scale(x)).parse()


class WordToken(NamedTuple):
    name: str  # lower-cased keyword: t, x, y, g
    index: int | None
    exponent: int
    pos: int


_WORD_RE = re.compile(r"(?P<name>[TtXxYy])(?P<index>\d+)|(?P<g>[Gg])(?![A-Za-z0-9])")


def tokenize_word(text: str) -> list:
    """Split a generator word into letters; raises ParseError with a position."""
    out = []
    pos, n = 0, len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace() or ch == "*":
            pos += 1
            continue
        m = _WORD_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected {ch!r} in word", pos, text)
        start = pos
        if m.group("g"):
            name, index = "g", None
        else:
            name, index = m.group("name").lower(), int(m.group("index"))
        pos = m.end()
        exponent = 1
        pm = re.compile(r"\^\s*([+-]?\d+)").match(text, pos)
        if pm:
            exponent = int(pm.group(1))
            if exponent == 0:
                raise ParseError("zero exponent", pm.start(1), text)
            pos = pm.end()
        if pos < n and not (text[pos].isspace() or text[pos] == "*"):
            raise ParseError(f"unexpected {text[pos]!r} in word", pos, text)
        out.append(WordToken(name, index, exponent, start))
    return out
