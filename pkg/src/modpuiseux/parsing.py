"""Text grammar for polynomial input.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/')? unary)*      -- '*' may be omitted
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?                   -- '**' accepted for '^'
    atom   := INT | NAME | '(' expr ')'

Coefficients are integers or quotients ``a/b``; division is only allowed by
nonzero constants.  Whitespace is ignored.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(\*\*|[-+*/^()]))")


def _tokenize(text):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].strip()[:1]!r} at position {pos}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


# sparse polynomials: {exponent tuple: Fraction}

def _add(a, b, sign=1):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + sign * v
        if not out[k]:
            del out[k]
    return out


def _mul(a, b):
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            out[k] = out.get(k, 0) + va * vb
            if not out[k]:
                del out[k]
    return out


class _Parser:
    def __init__(self, text, names):
        self.toks = _tokenize(text)
        self.i = 0
        self.names = names
        self.zero = (0,) * len(names)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def const(self, c):
        return {self.zero: Fraction(c)} if c else {}

    def parse(self):
        if not self.toks:
            raise ParseError("empty polynomial")
        e = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"unexpected token {self.peek()[1]!r}")
        return e

    def expr(self):
        acc = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            sign = 1 if self.take()[1] == "+" else -1
            acc = _add(acc, self.term(), sign)
        return acc

    def term(self):
        acc = self.unary()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = _mul(acc, self.unary())
            elif kind == "op" and val == "/":
                self.take()
                d = self.unary()
                if not d or set(d) != {self.zero}:
                    raise ParseError("division is only allowed by nonzero constants")
                acc = {k: v / d[self.zero] for k, v in acc.items()}
            elif kind in ("num", "name") or (kind == "op" and val == "("):
                acc = _mul(acc, self.unary())
            else:
                return acc

    def unary(self):
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            u = self.unary()
            return u if val == "+" else {k: -v for k, v in u.items()}
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer")
            acc = self.const(1)
            for _ in range(val):
                acc = _mul(acc, base)
            return acc
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self.const(val)
        if kind == "name":
            if val not in self.names:
                raise ParseError(f"unknown variable {val!r}; expected one of {', '.join(self.names)}")
            k = [0] * len(self.names)
            k[self.names.index(val)] = 1
            return {tuple(k): Fraction(1)}
        if kind == "op" and val == "(":
            e = self.expr()
            if self.take() != ("op", ")"):
                raise ParseError("missing ')'")
            return e
        raise ParseError(f"unexpected token {val!r}" if val is not None else "unexpected end of input")


def parse_sparse(text: str, names=("x", "y")) -> dict:
    """Parse into ``{exponent tuple: Fraction}``."""
    return _Parser(text, tuple(names)).parse()


def parse_bipoly(text: str):
    """Parse a polynomial in x and y over Q."""
    from .bpoly import BiPoly
    from .fields import QQ
    return BiPoly.from_dict(QQ, parse_sparse(text, ("x", "y")))


def parse_unipoly(text: str, field, var="z"):
    """Parse a univariate polynomial and map it into ``field``."""
    from .upoly import UniPoly
    terms = parse_sparse(text, (var,))
    deg = max((k[0] for k in terms), default=-1)
    return UniPoly(field, [field(terms.get((i,), 0)) for i in range(deg + 1)])
