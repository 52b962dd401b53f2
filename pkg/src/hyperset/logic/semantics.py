"""Satisfaction on finite structures.

Each subformula is evaluated once into a boolean table with one axis per free
variable (sorted by name), then combined by broadcasting.  An
:class:`Evaluator` keeps those tables for its structure, so repeated queries
sharing subformulas (translated sentences, Hintikka formulas) are cheap.
"""
from __future__ import annotations

from typing import Mapping

import numpy as np

from ..errors import LanguageError, PreconditionError, UnboundVariableError
from ..structures import FiniteStructure
from .syntax import (
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
    check_language,
    free_vars,
)

Table = tuple[tuple[str, ...], np.ndarray]


def _align(table: Table, target: tuple[str, ...]) -> np.ndarray:
    vs, arr = table
    if vs == target:
        return arr
    order = sorted(range(len(vs)), key=lambda i: target.index(vs[i]))
    arr = np.transpose(arr, order) if order != list(range(len(vs))) else arr
    present = [vs[i] for i in order]
    shape = []
    it = iter(arr.shape)
    for v in target:
        shape.append(next(it) if v in present else 1)
    return arr.reshape(shape)


class Evaluator:
    def __init__(self, m: FiniteStructure):
        self.m = m
        self.n = m.size
        self._mats = m.matrices
        self._cache: dict[Formula, Table] = {}

    def table(self, f: Formula) -> Table:
        hit = self._cache.get(f)
        if hit is None:
            hit = self._compute(f)
            self._cache[f] = hit
        return hit

    def _compute(self, f: Formula) -> Table:
        n = self.n
        if isinstance(f, Atom):
            mat = self._mats.get(f.rel)
            if mat is None:
                raise LanguageError(f"relation {f.rel} is not in {self.m.lang}")
            if f.left == f.right:
                return (f.left,), np.diagonal(mat).copy()
            if f.left < f.right:
                return (f.left, f.right), mat
            return (f.right, f.left), mat.T
        if isinstance(f, Eq):
            if f.left == f.right:
                return (f.left,), np.ones(n, dtype=bool)
            return tuple(sorted((f.left, f.right))), np.eye(n, dtype=bool)
        if isinstance(f, Top):
            return (), np.array(True)
        if isinstance(f, Bottom):
            return (), np.array(False)
        if isinstance(f, Not):
            vs, arr = self.table(f.body)
            return vs, ~arr
        if isinstance(f, (And, Or, Implies)):
            lt = self.table(f.left)
            rt = self.table(f.right)
            vs = tuple(sorted(set(lt[0]) | set(rt[0])))
            a, b = _align(lt, vs), _align(rt, vs)
            if isinstance(f, And):
                out = a & b
            elif isinstance(f, Or):
                out = a | b
            else:
                out = ~a | b
            return vs, out
        if isinstance(f, (Exists, Forall)):
            vs, arr = self.table(f.body)
            if f.var in vs:
                axis = vs.index(f.var)
                out = arr.any(axis=axis) if isinstance(f, Exists) else arr.all(axis=axis)
                return vs[:axis] + vs[axis + 1 :], out
            # vacuous quantifier: only the emptiness of the domain matters
            if isinstance(f, Exists):
                return vs, arr & (n > 0)
            return vs, arr | (n == 0)
        raise TypeError(f"not a formula: {f!r}")

    def holds(self, f: Formula, asg: Mapping[str, int] | None = None) -> bool:
        asg = dict(asg or {})
        missing = free_vars(f) - set(asg)
        if missing:
            raise UnboundVariableError(f"no value for free variables {sorted(missing)}")
        for v, x in asg.items():
            if not 0 <= x < self.n:
                raise PreconditionError(f"{v} is assigned {x}, outside 0..{self.n - 1}")
        vs, arr = self.table(f)
        return bool(arr[tuple(asg[v] for v in vs)])

    def satisfying(self, f: Formula, var: str) -> list[int]:
        """Elements satisfying a formula with one free variable."""
        extra = free_vars(f) - {var}
        if extra:
            raise UnboundVariableError(f"no value for free variables {sorted(extra)}")
        return [x for x in range(self.n) if self.holds(f, {var: x})]


def evaluate(m: FiniteStructure, f: Formula, asg: Mapping[str, int] | None = None) -> bool:
    """Truth of ``f`` in ``m`` under ``asg`` (variable -> vertex index)."""
    check_language(f, m.lang)
    return Evaluator(m).holds(f, asg)


def satisfies_all(m: FiniteStructure, fs, asg: Mapping[str, int] | None = None) -> bool:
    ev = Evaluator(m)
    for f in fs:
        check_language(f, m.lang)
        if not ev.holds(f, asg):
            return False
    return True

