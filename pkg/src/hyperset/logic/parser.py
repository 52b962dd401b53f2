"""Surface syntax for formulas.

::

    D(x,y)  S(x,y)  E(x,y)  x=y  x!=y  true  false
    !f   f & g   f | g   f -> g   exists x. f   forall x. f   (f)

Precedence from tightest: ``!``, ``&``, ``|``, ``->`` (right associative);
a quantifier body extends as far right as possible.  :func:`pretty` prints
every binary connective in parentheses, so ``parse(pretty(f)) == f``.
"""
from __future__ import annotations

import re

from ..errors import ParseError
from .syntax import (
    BINARY,
    QUANTIFIERS,
    And,
    Atom,
    Bottom,
    Eq,
    Exists,
    Forall,
    Formula,
    Implies,
    Not,
    Or,
    Top,
)

_TOKEN = re.compile(r"\s*(->|!=|[()!&|=,.]|[A-Za-z_][A-Za-z0-9_]*)")
_KEYWORDS = {"exists", "forall", "true", "false"}
_RELS = {"D", "S", "E"}


def _tokenize(text: str) -> list[str]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r} at offset {pos}")
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> str | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected: str | None = None, what: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            wanted = what or (repr(expected) if expected else "more input")
            raise ParseError(f"unexpected end of formula, expected {wanted}")
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, found {tok!r}")
        self.i += 1
        return tok

    def var(self) -> str:
        tok = self.take(what="a variable")
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok) or tok in _KEYWORDS:
            raise ParseError(f"expected a variable, found {tok!r}")
        return tok

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.peek() == "->":
            self.take()
            return Implies(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.peek() == "|":
            self.take()
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.peek() == "&":
            self.take()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.peek()
        if tok == "!":
            self.take()
            return Not(self.unary())
        if tok in ("exists", "forall"):
            self.take()
            v = self.var()
            self.take(".")
            body = self.formula()
            return Exists(v, body) if tok == "exists" else Forall(v, body)
        if tok == "(":
            self.take()
            f = self.formula()
            self.take(")")
            return f
        if tok == "true":
            self.take()
            return Top()
        if tok == "false":
            self.take()
            return Bottom()
        if tok in _RELS and self.i + 1 < len(self.toks) and self.toks[self.i + 1] == "(":
            self.take()
            self.take("(")
            u = self.var()
            self.take(",")
            v = self.var()
            self.take(")")
            return Atom(tok, u, v)
        u = self.var()
        op = self.take(what="'=' or '!='")
        if op not in ("=", "!="):
            raise ParseError(f"expected '=' or '!=' after {u!r}, found {op!r}")
        v = self.var()
        return Eq(u, v) if op == "=" else Not(Eq(u, v))


def parse(text: str) -> Formula:
    p = _Parser(text)
    if p.peek() is None:
        raise ParseError("empty formula")
    f = p.formula()
    if p.peek() is not None:
        raise ParseError(f"trailing input starting at {p.peek()!r}")
    return f


def _open(f: Formula) -> bool:
    # Printed text ends in an unterminated quantifier body.
    while isinstance(f, Not):
        f = f.body
    return isinstance(f, QUANTIFIERS)


_OPS = {And: "&", Or: "|", Implies: "->"}


def pretty(f: Formula) -> str:
    if isinstance(f, Atom):
        return f"{f.rel}({f.left},{f.right})"
    if isinstance(f, Eq):
        return f"{f.left}={f.right}"
    if isinstance(f, Top):
        return "true"
    if isinstance(f, Bottom):
        return "false"
    if isinstance(f, Not):
        if isinstance(f.body, Eq):
            return f"{f.body.left}!={f.body.right}"
        return "!" + pretty(f.body)
    if isinstance(f, BINARY):
        left = pretty(f.left)
        if _open(f.left):
            left = f"({left})"
        return f"({left} {_OPS[type(f)]} {pretty(f.right)})"
    if isinstance(f, QUANTIFIERS):
        q = "exists" if isinstance(f, Exists) else "forall"
        return f"{q} {f.var}. {pretty(f.body)}"
    raise TypeError(f"not a formula: {f!r}")
