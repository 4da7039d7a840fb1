"""Canonical text form of polynomials and rational functions, and a parser.

Terms are printed in increasing graded-lex order, coefficients as ``p/q``::

    (2*t)/(1 + t^2)
"""

from __future__ import annotations

import re
from fractions import Fraction

from .field import Field, Poly, RatFunc, to_fraction


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_raw(p, names) -> str:
    items = list(p.to_dict().items())
    if not items:
        return "0"
    items.reverse()  # flint lists terms in decreasing order
    pieces = []
    for k, v in items:
        c = to_fraction(v)
        mono = "*".join(names[i] if e == 1 else f"{names[i]}^{int(e)}" for i, e in enumerate(k) if e)
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        pieces.append((neg, body))
    first_neg, first = pieces[0]
    out = ("-" if first_neg else "") + first
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


def format_poly(p: Poly) -> str:
    return _format_raw(p._p, p.field.names)


def format_ratfunc(f: RatFunc) -> str:
    num = _format_raw(f._n, f.field.names)
    if f._d.is_one():
        return num
    return f"({num})/({_format_raw(f._d, f.field.names)})"


def format_scalar(x) -> str:
    if isinstance(x, RatFunc):
        return format_ratfunc(x)
    return _format_coeff(to_fraction(x))


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


class ParseError(ValueError):
    pass


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


class _Parser:
    def __init__(self, tokens, field: Field, aliases: dict[str, str]):
        self.toks = tokens
        self.i = 0
        self.field = field
        self.aliases = aliases

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, val=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (val and tok[1] != val):
            raise ParseError(f"expected {val or kind}, got {tok[1]!r}")
        self.i += 1
        return tok

    def expr(self):
        v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            v = v + rhs if op == "+" else v - rhs
        return v

    def term(self):
        v = self.unary()
        while True:
            tok = self.peek()
            if tok in (("op", "*"), ("op", "/")):
                self.take()
                rhs = self.unary()
                v = v * rhs if tok[1] == "*" else v / rhs
            elif tok[0] in ("num", "name") or tok == ("op", "("):
                v = v * self.unary()  # implicit multiplication, e.g. 2tau
            else:
                return v

    def unary(self):
        tok = self.peek()
        if tok == ("op", "-"):
            self.take()
            return -self.unary()
        if tok == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            if self.peek() == ("op", "("):
                self.take()
                e = self.expr()
                self.take("op", ")")
                if not e.is_constant() or e.constant_value().denominator != 1:
                    raise ParseError("exponents must be integers")
                k = int(e.constant_value())
            else:
                k = self.take("num")[1]
            return base ** (sign * k)
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return self.field(val)
        if kind == "name":
            self.take()
            name = self.aliases.get(val, val)
            if name not in self.field.names:
                raise ParseError(f"unknown indeterminate {val!r} for field {self.field.names}")
            return self.field.gen(name)
        if (kind, val) == ("op", "("):
            self.take()
            v = self.expr()
            self.take("op", ")")
            return v
        raise ParseError(f"unexpected token {val!r}")


def parse_ratfunc(text: str, field: Field, aliases: dict[str, str] | None = None) -> RatFunc:
    p = _Parser(_tokenize(text), field, aliases or {})
    v = p.expr()
    if p.i != len(p.toks):
        raise ParseError(f"trailing input: {p.toks[p.i:]}")
    return v


def parse_poly(text: str, field: Field) -> Poly:
    f = parse_ratfunc(text, field)
    if not f.is_polynomial():
        raise ParseError(f"{text!r} is not a polynomial")
    return f.num * (1 / f.den.leading_coefficient())


def parse_scalar(text: str, field: Field | None):
    """Parse a coefficient: a rational if ``field`` is None, else a RatFunc."""
    if field is None:
        return Fraction(text.strip())
    return parse_ratfunc(text, field)
