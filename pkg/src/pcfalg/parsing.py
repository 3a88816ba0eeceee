"""Text syntax for elements and continued fractions.

Element grammar (whitespace-insensitive)::

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := ('-' | '+') unary | atom
    atom  := INT | '(' expr ')' | 'sqrt' '(' expr ')'

A continued fraction is ``[e, ...]`` (finite) or ``[e, ...; e, ...]``
(periodic, the semicolon separating the initial part from the period).
Error positions are byte offsets into the UTF-8 encoded input.
"""
from __future__ import annotations

from .cfcore import Fcf
from .exactnum import QuadElem, TowerElem, TowerMismatch, adjoin_sqrt, div, sqrt_in_field
from .pcf import Pcf


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at byte {pos}")
        self.message = message
        self.pos = pos


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0
        self.radicand = None

    def error(self, msg, at=None):
        i = self.i if at is None else at
        raise ParseError(msg, len(self.text[:i].encode("utf-8")))

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            self.error(f"expected '{ch}', found '{found}'")
        self.i += 1

    def at_end(self) -> bool:
        return self.peek() == ""

    # elements ---------------------------------------------------------
    def expr(self):
        v = self.term()
        while self.peek() in ("+", "-"):
            op_at = self.i
            op = self.text[self.i]
            self.i += 1
            w = self.term()
            v = self.combine(op, v, w, op_at)
        return v

    def term(self):
        v = self.unary()
        while self.peek() in ("*", "/"):
            op_at = self.i
            op = self.text[self.i]
            self.i += 1
            w = self.unary()
            v = self.combine(op, v, w, op_at)
        return v

    def combine(self, op, v, w, at):
        try:
            if op == "+":
                return v + w
            if op == "-":
                return v - w
            if op == "*":
                return v * w
            return div(v, w)
        except TowerMismatch:
            self.error("mixed radicands", at)
        except ZeroDivisionError:
            self.error("division by zero", at)

    def unary(self):
        c = self.peek()
        if c == "-":
            self.i += 1
            return -self.unary()
        if c == "+":
            self.i += 1
            return self.unary()
        return self.atom()

    def atom(self):
        c = self.peek()
        start = self.i
        if c.isdigit():
            while self.i < len(self.text) and self.text[self.i].isdigit():
                self.i += 1
            return int(self.text[start : self.i])
        if c == "(":
            self.i += 1
            v = self.expr()
            self.expect(")")
            return v
        if self.text.startswith("sqrt", self.i):
            self.i += 4
            self.expect("(")
            arg_at = self.i
            v = self.expr()
            self.expect(")")
            if v == 0:
                return 0
            if isinstance(v, TowerElem) and v.c1 != 0:
                self.error("square root of a tower value is not supported", arg_at)
            try:
                r = sqrt_in_field(v)
                return r if r is not None else adjoin_sqrt(v)
            except TowerMismatch:
                self.error("mixed radicands", arg_at)
        self.error(f"unexpected '{c}'" if c else "unexpected end of input")

    # continued fractions ----------------------------------------------
    def quotient(self):
        self.skip()
        at = self.i
        v = self.expr()
        if isinstance(v, TowerElem):
            if v.c1 != 0:
                self.error("partial quotients cannot be tower values", at)
            v = v.c0
        if isinstance(v, QuadElem) and v.b != 0:
            if self.radicand is None:
                self.radicand = v.d
            elif self.radicand != v.d:
                self.error("mixed radicands", at)
        return v

    def qlist(self, stops):
        out = []
        if self.peek() in stops:
            return out
        while True:
            out.append(self.quotient())
            if self.peek() == ",":
                self.i += 1
                continue
            return out

    def cf(self):
        self.expect("[")
        first = self.qlist(("]", ";"))
        if self.peek() == ";":
            self.i += 1
            semi = self.i
            rep = self.qlist(("]",))
            self.expect("]")
            if not rep:
                self.error("empty repeating part", semi)
            result = ("pcf", first, rep)
        else:
            close = self.i
            self.expect("]")
            if not first:
                self.error("empty continued fraction", close)
            result = ("fcf", first)
        return result


def _finish(p: _Parser):
    if not p.at_end():
        p.error(f"unexpected '{p.peek()}'")


def parse_elem(text: str):
    p = _Parser(text)
    if p.at_end():
        p.error("empty input")
    v = p.expr()
    _finish(p)
    return v


def parse_cf(text: str):
    """Parse an Fcf ``[...]`` or a Pcf ``[...; ...]``."""
    p = _Parser(text)
    start = p.i
    res = p.cf()
    _finish(p)
    try:
        if res[0] == "pcf":
            return Pcf(res[1], res[2])
        return Fcf(res[1])
    except TowerMismatch:
        p.error("mixed radicands", start)
