"""Recursive-descent parser for noncommutative polynomial text.

Grammar (whitespace ignored)::

    poly   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' int)?
    atom   := coeff | var | '(' poly ')' | '[' poly ',' poly ']'
    coeff  := int ('/' int)?

``[a,b]`` means ``a*b - b*a``.  Variables are ``x1 .. xn``; alphabets of size
at most four also accept ``x, y, z, w``.
"""

from __future__ import annotations

import re

from .fields import Field, QQ
from .freealg import NcPoly, commutator
from .words import default_names

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S)")


class PolySyntaxError(ValueError):
    def __init__(self, message, text, pos):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


def _tokenize(text):
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        start = pos
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, nvars, field, names):
        self.text = text
        self.nvars = nvars
        self.field = field
        self.tokens = _tokenize(text)
        self.i = 0
        self.lookup = {f"x{k + 1}": k for k in range(nvars)}
        for k, name in enumerate(names or default_names(nvars)):
            self.lookup[name] = k

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            raise PolySyntaxError(f"expected {want!r}, found {tok[1] or 'end of input'!r}", self.text, tok[2])
        self.i += 1
        return tok

    def error(self, message):
        raise PolySyntaxError(message, self.text, self.peek()[2])

    def poly(self):
        negate = False
        if self.peek()[:2] == ("op", "-"):
            self.take()
            negate = True
        result = self.term()
        if negate:
            result = -result
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            t = self.term()
            result = result + t if op == "+" else result - t
        return result

    def term(self):
        result = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            result = result * self.factor()
        return result

    def factor(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            base = base ** int(self.take("int")[1])
        return base

    def atom(self):
        kind, value, pos = self.peek()
        if kind == "int":
            self.take()
            text = value
            if self.peek()[:2] == ("op", "/"):
                self.take()
                text += "/" + self.take("int")[1]
            try:
                c = self.field.parse(text)
            except ZeroDivisionError:
                raise PolySyntaxError(f"coefficient {text} is not defined in {self.field}", self.text, pos) from None
            return NcPoly.constant(c, self.nvars, self.field)
        if kind == "name":
            self.take()
            if value not in self.lookup:
                raise PolySyntaxError(f"unknown variable {value!r}", self.text, pos)
            return NcPoly.var(self.lookup[value], self.nvars, self.field)
        if (kind, value) == ("op", "("):
            self.take()
            inner = self.poly()
            self.take("op", ")")
            return inner
        if (kind, value) == ("op", "["):
            self.take()
            a = self.poly()
            self.take("op", ",")
            b = self.poly()
            self.take("op", "]")
            return commutator(a, b)
        self.error(f"unexpected {value or 'end of input'!r}")


def parse_poly(text: str, nvars: int = 2, field: Field = QQ, names=None) -> NcPoly:
    p = _Parser(text, nvars, field, names)
    result = p.poly()
    if p.peek()[0] != "end":
        p.error(f"unexpected {p.peek()[1]!r}")
    return result
