"""Word grammar for model elements.

::

    expr := term+
    term := atom | atom '^' int | '(' expr ')' | '(' expr ')' '^' int
    atom := s1 .. s6 | R | rho | a1 | a2 | id
    int  := '-'? [0-9]+

Juxtaposition is the group product, read left to right.  ``R`` is one unit
of 2*pi/30, so ``R^5`` is the rotation by 2*pi/6.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .model import DEFAULT_MODEL, FramedModel, ModelElement

__all__ = [
    "ATOMS",
    "Atom",
    "DslSyntaxError",
    "Power",
    "Product",
    "evaluate",
    "flatten",
    "parse",
    "to_text",
]

ATOMS = ("s1", "s2", "s3", "s4", "s5", "s6", "R", "rho", "a1", "a2", "id")

_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<sym>[()^]))")


class DslSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Power:
    base: Union[Atom, "Product"]
    exponent: int


@dataclass(frozen=True)
class Product:
    terms: tuple[Expr, ...]


Expr = Union[Atom, Power, Product]


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise DslSyntaxError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def end_pos(self) -> int:
        return len(self.text)

    def expr(self) -> Product:
        terms = []
        while (tok := self.peek()) is not None and not (tok[0] == "sym" and tok[1] == ")"):
            terms.append(self.term())
        if not terms:
            pos = tok[2] if tok else self.end_pos()
            raise DslSyntaxError("expected a term", pos)
        return Product(tuple(terms))

    def term(self) -> Expr:
        kind, value, pos = self.take()
        if kind == "name":
            if value not in ATOMS:
                raise DslSyntaxError(f"unknown atom {value!r}", pos)
            base: Expr = Atom(value)
        elif kind == "sym" and value == "(":
            base = self.expr()
            close = self.take()
            if close is None or close[1] != ")":
                raise DslSyntaxError("expected ')'", close[2] if close else self.end_pos())
        else:
            raise DslSyntaxError(f"unexpected {value!r}", pos)
        tok = self.peek()
        if tok is not None and tok[0] == "sym" and tok[1] == "^":
            self.take()
            num = self.take()
            if num is None or num[0] != "int":
                raise DslSyntaxError("expected an integer exponent", num[2] if num else self.end_pos())
            return Power(base, int(num[1]))
        return base


def parse(text: str) -> Product:
    p = _Parser(text)
    out = p.expr()
    if p.peek() is not None:
        raise DslSyntaxError("unbalanced ')'", p.peek()[2])
    return out


def to_text(e: Expr) -> str:
    if isinstance(e, Atom):
        return e.name
    if isinstance(e, Power):
        base = e.base.name if isinstance(e.base, Atom) else f"({to_text(e.base)})"
        return f"{base}^{e.exponent}"
    parts = [f"({to_text(t)})" if isinstance(t, Product) else to_text(t) for t in e.terms]
    return " ".join(parts)


def evaluate(e: Expr | str, model: FramedModel = DEFAULT_MODEL) -> ModelElement:
    if isinstance(e, str):
        e = parse(e)
    if isinstance(e, Atom):
        return model.named(e.name)
    if isinstance(e, Power):
        return model.power(evaluate(e.base, model), e.exponent)
    return model.product(*(evaluate(t, model) for t in e.terms))


def flatten(e: Expr | str) -> list[tuple[str, int]]:
    """Expand powers and inverses into a left-to-right list of (atom, sign)."""
    if isinstance(e, str):
        e = parse(e)
    if isinstance(e, Atom):
        return [] if e.name == "id" else [(e.name, 1)]
    if isinstance(e, Power):
        inner = flatten(e.base)
        if e.exponent < 0:
            inner = [(n, -s) for n, s in reversed(inner)]
        return inner * abs(e.exponent)
    return [x for t in e.terms for x in flatten(t)]
