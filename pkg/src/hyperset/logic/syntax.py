"""First-order formulas over L1 = {D}, L0 = {S, D} and LNBG = {E}.

Terms are variables only.  Formulas are immutable and hashable, so they can
key caches.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from typing import Callable, Iterable, Iterator

from ..errors import LanguageError
from ..structures import LANGUAGES


class Formula:
    __slots__ = ()

    def __and__(self, other: Formula) -> Formula:
        return And(self, other)

    def __or__(self, other: Formula) -> Formula:
        return Or(self, other)

    def __invert__(self) -> Formula:
        return Not(self)

    def __rshift__(self, other: Formula) -> Formula:
        return Implies(self, other)

    def __str__(self) -> str:
        from .parser import pretty

        return pretty(self)


@dataclass(frozen=True, repr=False)
class Top(Formula):
    pass


@dataclass(frozen=True, repr=False)
class Bottom(Formula):
    pass


@dataclass(frozen=True, repr=False)
class Atom(Formula):
    rel: str
    left: str
    right: str


@dataclass(frozen=True, repr=False)
class Eq(Formula):
    left: str
    right: str


@dataclass(frozen=True, repr=False)
class Not(Formula):
    body: Formula


@dataclass(frozen=True, repr=False)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, repr=False)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, repr=False)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, repr=False)
class Exists(Formula):
    var: str
    body: Formula


@dataclass(frozen=True, repr=False)
class Forall(Formula):
    var: str
    body: Formula


for _cls in (Top, Bottom, Atom, Eq, Not, And, Or, Implies, Exists, Forall):
    _cls.__repr__ = lambda self: f"<{str(self)}>"

BINARY = (And, Or, Implies)
QUANTIFIERS = (Exists, Forall)


def D(u: str, v: str) -> Atom:
    return Atom("D", u, v)


def S(u: str, v: str) -> Atom:
    return Atom("S", u, v)


def E(u: str, v: str) -> Atom:
    return Atom("E", u, v)


def neq(u: str, v: str) -> Formula:
    return Not(Eq(u, v))


def conj(fs: Iterable[Formula]) -> Formula:
    fs = list(fs)
    return reduce(And, fs) if fs else Top()


def disj(fs: Iterable[Formula]) -> Formula:
    fs = list(fs)
    return reduce(Or, fs) if fs else Bottom()


def exists(vs: Iterable[str], body: Formula) -> Formula:
    for v in reversed(list(vs)):
        body = Exists(v, body)
    return body


def forall(vs: Iterable[str], body: Formula) -> Formula:
    for v in reversed(list(vs)):
        body = Forall(v, body)
    return body


def conjuncts(f: Formula) -> list[Formula]:
    """Flatten nested conjunctions."""
    if isinstance(f, And):
        return conjuncts(f.left) + conjuncts(f.right)
    return [f]


# -- traversals ----------------------------------------------------------


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    if isinstance(f, Not):
        yield from subformulas(f.body)
    elif isinstance(f, BINARY):
        yield from subformulas(f.left)
        yield from subformulas(f.right)
    elif isinstance(f, QUANTIFIERS):
        yield from subformulas(f.body)


def free_vars(f: Formula) -> frozenset[str]:
    if isinstance(f, (Atom, Eq)):
        return frozenset((f.left, f.right))
    if isinstance(f, Not):
        return free_vars(f.body)
    if isinstance(f, BINARY):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, QUANTIFIERS):
        return free_vars(f.body) - {f.var}
    return frozenset()


def variables(f: Formula) -> frozenset[str]:
    out: set[str] = set()
    for g in subformulas(f):
        if isinstance(g, (Atom, Eq)):
            out.update((g.left, g.right))
        elif isinstance(g, QUANTIFIERS):
            out.add(g.var)
    return frozenset(out)


def relations(f: Formula) -> frozenset[str]:
    return frozenset(g.rel for g in subformulas(f) if isinstance(g, Atom))


def quantifier_rank(f: Formula) -> int:
    if isinstance(f, Not):
        return quantifier_rank(f.body)
    if isinstance(f, BINARY):
        return max(quantifier_rank(f.left), quantifier_rank(f.right))
    if isinstance(f, QUANTIFIERS):
        return 1 + quantifier_rank(f.body)
    return 0


def is_sentence(f: Formula) -> bool:
    return not free_vars(f)


def check_language(f: Formula, lang: str) -> None:
    extra = relations(f) - set(LANGUAGES[lang])
    if extra:
        raise LanguageError(f"formula uses {sorted(extra)}, which are not in {lang}")


def language_of(f: Formula) -> str:
    """Smallest of L1, L0, LNBG containing the formula's symbols."""
    rels = relations(f)
    for lang in ("L1", "L0", "LNBG"):
        if rels <= set(LANGUAGES[lang]):
            return lang
    raise LanguageError(f"no single language has all of {sorted(rels)}")


def fresh(avoid: Iterable[str], prefix: str = "v") -> Iterator[str]:
    """Infinite supply of variable names not in ``avoid``."""
    avoid = set(avoid)
    for i in itertools.count():
        name = f"{prefix}{i}"
        if name not in avoid:
            yield name


def transform(f: Formula, fn: Callable[[Formula], Formula | None]) -> Formula:
    """Bottom-up rewrite; ``fn`` returns a replacement or ``None`` to keep."""
    if isinstance(f, Not):
        f = Not(transform(f.body, fn))
    elif isinstance(f, BINARY):
        f = type(f)(transform(f.left, fn), transform(f.right, fn))
    elif isinstance(f, QUANTIFIERS):
        f = type(f)(f.var, transform(f.body, fn))
    out = fn(f)
    return f if out is None else out


def rename_relations(f: Formula, mapping: dict[str, str]) -> Formula:
    return transform(f, lambda g: Atom(mapping.get(g.rel, g.rel), g.left, g.right) if isinstance(g, Atom) else None)
