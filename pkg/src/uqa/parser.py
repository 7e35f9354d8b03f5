"""Text syntax for scalars and algebra elements.

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor (['*'|'/'] factor)*        juxtaposition multiplies
    factor  := '-' factor | atom ['^' ['-'] INT]
    atom    := INT | 'q' | E<i> | F<i> | K<i> | 'K(' weight ')' | '(' expr ')'

``K<i>`` stands for K_{alpha_i}.  Division is by scalars only, and negative
powers are allowed for scalars and torus elements.  Everything the renderer
prints parses back to the same value.
"""

from __future__ import annotations

import re
from typing import Optional, Union

from .algebra import Element, UqAlgebra
from .rootdata import CartanDatum, parse_weight
from .scalar import Q, Scalar

__all__ = ["ParseError", "parse_element", "parse_scalar", "tokenize"]


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}" + (f" in {text!r}" if text else ""))


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<kw>K\()
  | (?P<gen>[EFK])(?P<idx>\d+)
  | (?P<q>q)
  | (?P<op>[-+*/^()])
""", re.VERBOSE)


def tokenize(text: str) -> list[tuple[str, object, int]]:
    """Tokens as (kind, value, position); weights inside K(...) are kept as raw text."""
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind == "ws":
            pos = m.end()
            continue
        if kind == "int":
            out.append(("int", int(m.group("int")), pos))
        elif kind == "kw":
            close = text.find(")", m.end())
            if close < 0:
                raise ParseError("unclosed K(", pos, text)
            out.append(("kweight", (text[m.end():close], m.end()), pos))
            pos = close + 1
            continue
        elif kind in ("gen", "idx"):
            out.append(("gen", (m.group("gen"), int(m.group("idx"))), pos))
        elif kind == "q":
            out.append(("q", None, pos))
        else:
            out.append((m.group("op"), None, pos))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


Value = Union[Scalar, Element]
_ATOM_START = {"int", "q", "gen", "kweight", "("}


class _Parser:
    def __init__(self, text: str, alg: Optional[UqAlgebra]):
        self.text = text
        self.alg = alg
        self.toks = tokenize(text)
        self.i = 0

    # helpers ----------------------------------------------------------------

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise self.error(f"expected {kind!r}, found {self.describe(tok)}", tok[2])
        self.i += 1
        return tok

    def describe(self, tok) -> str:
        if tok[0] == "end":
            return "end of input"
        return repr(self.text[tok[2]:tok[2] + 1])

    def error(self, message: str, pos: int) -> ParseError:
        return ParseError(message, pos, self.text)

    def as_scalar(self, v: Value) -> Optional[Scalar]:
        if isinstance(v, Scalar):
            return v
        if not v.terms:
            return Scalar.from_int(0)
        if len(v.terms) == 1:
            (m, c), = v.terms.items()
            if not m.f and not m.e and not any(m.torus):
                return c
        return None

    def add(self, a: Value, b: Value, sign: int) -> Value:
        if isinstance(a, Scalar) and isinstance(b, Scalar):
            return a + b if sign > 0 else a - b
        a, b = self.alg.coerce(a), self.alg.coerce(b)
        return a + b if sign > 0 else a - b

    def mul(self, a: Value, b: Value) -> Value:
        if isinstance(a, Scalar):
            return a * b if isinstance(b, Scalar) else b.scale(a)
        if isinstance(b, Scalar):
            return a.scale(b)
        return a * b

    # grammar ----------------------------------------------------------------

    def parse(self) -> Value:
        v = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise self.error(f"unexpected {self.describe(tok)}", tok[2])
        return v

    def expr(self) -> Value:
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        v = self.term()
        if sign < 0:
            v = -v
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            v = self.add(v, self.term(), 1 if op == "+" else -1)
        return v

    def term(self) -> Value:
        v = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                v = self.mul(v, self.factor())
            elif kind == "/":
                pos = self.take()[2]
                d = self.as_scalar(self.factor())
                if d is None:
                    raise self.error("division by a non-scalar", pos)
                if not d:
                    raise self.error("division by zero", pos)
                v = self.mul(v, d.inverse())
            elif kind in _ATOM_START:
                v = self.mul(v, self.factor())
            else:
                return v

    def factor(self) -> Value:
        if self.peek()[0] == "-":
            self.take()
            return -self.factor()
        base = self.atom()
        if self.peek()[0] != "^":
            return base
        pos = self.take()[2]
        sign = 1
        if self.peek()[0] == "-":
            self.take()
            sign = -1
        n = sign * self.take("int")[1]
        return self.power(base, n, pos)

    def power(self, base: Value, n: int, pos: int) -> Value:
        s = self.as_scalar(base)
        if s is not None:
            if not s and n < 0:
                raise self.error("negative power of zero", pos)
            return s ** n
        if n >= 0:
            return base ** n
        if len(base.terms) == 1:
            (m, c), = base.terms.items()
            if not m.f and not m.e:
                return self.alg.K(tuple(n * x for x in m.torus)).scale(c ** n)
        raise self.error("negative powers apply to scalars and K only", pos)

    def atom(self) -> Value:
        tok = self.take()
        kind, val, pos = tok
        if kind == "int":
            return Scalar.from_int(val)
        if kind == "q":
            return Q
        if kind == "(":
            v = self.expr()
            self.take(")")
            return v
        if kind in ("gen", "kweight"):
            if self.alg is None:
                raise self.error("generators are not allowed in a scalar", pos)
            datum = self.alg.datum
            if kind == "kweight":
                body, start = val
                try:
                    return self.alg.K(parse_weight(body, datum))
                except ValueError as exc:
                    raise self.error(str(exc), start) from None
            letter, i = val
            if not 1 <= i <= datum.rank:
                raise self.error(f"unknown node index {i} for {datum.name}", pos)
            if letter == "E":
                return self.alg.E(i)
            if letter == "F":
                return self.alg.F(i)
            return self.alg.Ki(i)
        raise self.error(f"unexpected {self.describe(tok)}", pos)


def parse_scalar(text: str) -> Scalar:
    return _Parser(text, None).parse()


def parse_element(text: str, alg: Union[UqAlgebra, CartanDatum]) -> Element:
    if isinstance(alg, CartanDatum):
        alg = UqAlgebra(alg)
    v = _Parser(text, alg).parse()
    return alg.coerce(v)

