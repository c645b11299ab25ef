"""Recursive-descent parser for polynomial text.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := INT | VAR | VAR '^' INT | '(' expr ')' | '-' factor

Implicit multiplication and division are rejected.
"""

from __future__ import annotations

import re

from ezd.poly import MonomialOrder, PolyRing, Polynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, src: str = ""):
        self.pos = pos
        self.src = src
        super().__init__(f"{message} at position {pos}" + (f" in {src!r}" if src else ""))


def _tokenize(src: str):
    toks = []
    i = 0
    while i < len(src):
        m = _TOKEN.match(src, i)
        if not m or m.end() == i:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            toks.append(("INT", m.group(1), start))
        elif m.group(2) is not None:
            toks.append(("VAR", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch == "/":
                raise ParseError("division is not allowed", start, src)
            if ch not in "+-*^()":
                raise ParseError(f"unexpected character {ch!r}", start, src)
            toks.append((ch, ch, start))
        i = m.end()
    toks.append(("EOF", "", len(src)))
    return toks


class _Parser:
    def __init__(self, src: str, ring: PolyRing):
        self.src = src
        self.ring = ring
        self.toks = _tokenize(src)
        self.i = 0
        self.index = {name: k for k, name in enumerate(ring.var_names)}

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "EOF" else repr(kind)
            got = "end of input" if tok[0] == "EOF" else repr(tok[1])
            raise ParseError(f"expected {want}, got {got}", tok[2], self.src)
        self.i += 1
        return tok

    def expr(self) -> Polynomial:
        acc = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        kind, text, pos = self.peek()
        if kind == "INT":
            self.take()
            return self.ring.constant(int(text))
        if kind == "VAR":
            self.take()
            if text not in self.index:
                raise ParseError(f"unknown variable {text!r}", pos, self.src)
            v = self.ring.var(self.index[text])
            if self.peek()[0] == "^":
                self.take()
                return v ** int(self.take("INT")[1])
            return v
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        if kind == "-":
            self.take()
            return -self.factor()
        what = "end of input" if kind == "EOF" else repr(text)
        raise ParseError(f"unexpected {what}", pos, self.src)

    def parse(self) -> Polynomial:
        out = self.expr()
        kind, text, pos = self.peek()
        if kind != "EOF":
            if kind in ("VAR", "INT", "("):
                raise ParseError("implicit multiplication is not allowed", pos, self.src)
            raise ParseError(f"unexpected {text!r}", pos, self.src)
        return out


def parse_polynomial(src: str, var_names, field, order=MonomialOrder.GREVLEX) -> Polynomial:
    """Parse ``src`` into a canonical polynomial over ``field[var_names]``."""
    ring = var_names if isinstance(var_names, PolyRing) else PolyRing(field, var_names, order)
    return _Parser(src, ring).parse()
