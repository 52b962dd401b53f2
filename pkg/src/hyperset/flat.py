"""Flat systems of equations ``x = S_x`` and their unique solutions.

Text format, one equation per line::

    x = { y, #0, #{#0} }
    y = { x, #1 }

Bare names are indeterminates.  ``#n`` is the von Neumann natural ``n`` and
``#{...}`` a literal set of literals; both must be well-founded.  Lines starting
with ``#`` or ``%`` are comments.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import NotWellFoundedError, ParseError, PreconditionError, UnknownNameError
from .store import Hyperset, Store, default_store, is_well_founded

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")


@dataclass(frozen=True, eq=False)
class FlatSystem:
    equations: Mapping[str, frozenset[str]]
    atoms: Mapping[str, Hyperset] = field(default_factory=dict)
    allow_nonwf_atoms: bool = False

    @property
    def indeterminates(self) -> frozenset[str]:
        return frozenset(self.equations)

    @classmethod
    def of(cls, equations: Mapping[str, Iterable[str]], atoms: Mapping[str, Hyperset] | None = None, **kw) -> FlatSystem:
        return cls({x: frozenset(s) for x, s in equations.items()}, dict(atoms or {}), **kw)

    def validate(self) -> None:
        clash = self.indeterminates & set(self.atoms)
        if clash:
            raise PreconditionError(f"names used both as indeterminate and atom: {sorted(clash)}")
        for x, rhs in self.equations.items():
            for name in rhs:
                if name not in self.equations and name not in self.atoms:
                    raise UnknownNameError(f"equation for {x!r} references unknown name {name!r}")
        if not self.allow_nonwf_atoms:
            for name, h in self.atoms.items():
                if not is_well_founded(h):
                    raise NotWellFoundedError(f"atom {name!r} is not well-founded")


def solve(system: FlatSystem, store: Store | None = None) -> dict[str, Hyperset]:
    """The unique solution, as canonical hypersets."""
    system.validate()
    if store is None:
        store = next(iter(system.atoms.values())).store if system.atoms else default_store()
    graph = {
        x: [name if name in system.equations else system.atoms[name] for name in sorted(rhs)]
        for x, rhs in system.equations.items()
    }
    nodes = store.insert_graph(graph)
    return {x: Hyperset(store, nodes[x]) for x in sorted(system.equations)}


# -- literal sets --------------------------------------------------------


class _Cursor:
    def __init__(self, text: str, line: int | None):
        self.text = text
        self.pos = 0
        self.line = line

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            got = self.peek() or "end of line"
            raise ParseError(f"expected {ch!r}, found {got!r}", self.line)
        self.pos += 1

    def name(self) -> str:
        self.skip()
        m = _NAME.match(self.text, self.pos)
        if not m:
            raise ParseError(f"expected a name at {self.text[self.pos:]!r}", self.line)
        self.pos = m.end()
        return m.group()

    def literal(self, store: Store) -> tuple[str, Hyperset]:
        """Parse ``#n`` or ``#{...}``; returns normalized text and the set."""
        self.expect("#")
        if self.peek() == "{":
            self.pos += 1
            parts: list[tuple[str, Hyperset]] = []
            if self.peek() != "}":
                parts.append(self.literal(store))
                while self.peek() == ",":
                    self.pos += 1
                    parts.append(self.literal(store))
            self.expect("}")
            uniq = {h: t for t, h in parts}
            text = "#{" + ",".join(sorted(set(uniq.values()))) + "}"
            return text, store.set_of(uniq)
        self.skip()
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            raise ParseError("expected a natural or '{' after '#'", self.line)
        self.pos = m.end()
        n = int(m.group())
        return f"#{n}", store.natural(n)


def parse_literal(text: str, store: Store | None = None) -> Hyperset:
    store = store or default_store()
    cur = _Cursor(text, None)
    _, h = cur.literal(store)
    if cur.peek():
        raise ParseError(f"trailing input {text[cur.pos:]!r}")
    return h


def parse_flat_system(text: str, store: Store | None = None) -> FlatSystem:
    store = store or default_store()
    equations: dict[str, set[str]] = {}
    atoms: dict[str, Hyperset] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        cur = _Cursor(line, lineno)
        x = cur.name()
        cur.expect("=")
        cur.expect("{")
        rhs: set[str] = set()
        if cur.peek() != "}":
            while True:
                if cur.peek() == "#":
                    lit, h = cur.literal(store)
                    atoms[lit] = h
                    rhs.add(lit)
                else:
                    rhs.add(cur.name())
                if cur.peek() != ",":
                    break
                cur.pos += 1
        cur.expect("}")
        if cur.peek():
            raise ParseError(f"trailing input {line[cur.pos:]!r}", lineno)
        if x in equations:
            raise ParseError(f"second equation for {x!r}", lineno)
        equations[x] = rhs
    return FlatSystem({x: frozenset(s) for x, s in equations.items()}, atoms)


def format_flat_system(system: FlatSystem) -> str:
    lines = []
    for x in sorted(system.equations):
        rhs = ", ".join(sorted(system.equations[x]))
        lines.append(f"{x} = {{{' ' + rhs + ' ' if rhs else ''}}}")
    return "\n".join(lines) + ("\n" if lines else "")
