"""Uniform interpretation of digraphs in loop-free graphs.

Gadget for a digraph on vertices ``0..n-1``:

* vertex ``v`` becomes node ``v`` (same index) with a pendant triangle;
* an edge ``u -> v`` with ``u != v`` becomes a path ``u - a - b - v`` where
  ``a`` (the tail side) carries one pendant leaf;
* a loop at ``v`` becomes a node ``c`` adjacent to ``v`` carrying two leaves.

Triangles occur only in vertex markers, so vertex nodes are definable; the
leaf on ``a`` fixes the direction.  :func:`translate` relativizes quantifiers
to vertex nodes and replaces ``E`` by the definition of the decorated paths.
"""
from __future__ import annotations

from ..structures import FiniteStructure, structure
from ..errors import LanguageError
from .syntax import (
    And,
    Atom,
    D,
    Eq,
    Exists,
    Forall,
    Formula,
    Implies,
    Not,
    Or,
    conj,
    check_language,
    fresh,
    neq,
    transform,
    variables,
)


def interpret_digraph(d: FiniteStructure) -> FiniteStructure:
    if d.lang != "LNBG":
        raise LanguageError(f"expected an LNBG structure, got {d.lang}")
    labels: list[tuple] = [("vertex", v) for v in d.domain]
    index: dict[tuple, int] = {lab: i for i, lab in enumerate(labels)}
    edges: list[tuple[int, int]] = []

    def node(label: tuple) -> int:
        if label not in index:
            index[label] = len(labels)
            labels.append(label)
        return index[label]

    def link(p: tuple, q: tuple) -> None:
        edges.append((node(p), node(q)))

    for v in d.domain:
        t = [("tri", v, i) for i in range(3)]
        link(("vertex", v), t[0])
        link(t[0], t[1])
        link(t[1], t[2])
        link(t[2], t[0])
    for u, v in sorted(d.relations["E"]):
        if u == v:
            c = ("loop", v)
            link(("vertex", v), c)
            link(c, ("loop-leaf", v, 0))
            link(c, ("loop-leaf", v, 1))
        else:
            a, b = ("tail", u, v), ("head", u, v)
            link(("vertex", u), a)
            link(a, b)
            link(b, ("vertex", v))
            link(a, ("tail-leaf", u, v))
    return structure("L1", len(labels), labels=tuple(labels), D=edges)


class _Defs:
    """Defining formulas, with bound variables drawn fresh against ``avoid``."""

    def __init__(self, avoid):
        self._names = fresh(avoid, "g")
        self._pool: list[str] = []

    def new(self, k: int) -> list[str]:
        while len(self._pool) < k:
            self._pool.append(next(self._names))
        return self._pool[:k]

    def in_triangle(self, y: str) -> Formula:
        p, q = self._fresh_except(2, {y})
        return Exists(p, Exists(q, conj([neq(p, y), neq(q, y), neq(p, q), D(y, p), D(y, q), D(p, q)])))

    def vertex(self, x: str) -> Formula:
        (y,) = self._fresh_except(1, {x})
        return And(Not(self.in_triangle(x)), Exists(y, And(D(x, y), self.in_triangle(y))))

    def leaf(self, z: str) -> Formula:
        w, w2 = self._fresh_except(2, {z})
        return Exists(w, And(D(z, w), Forall(w2, Implies(D(z, w2), Eq(w2, w)))))

    def marked(self, a: str) -> Formula:
        (leaf,) = self._fresh_except(1, {a})
        return Exists(leaf, And(D(a, leaf), self.leaf(leaf)))

    def edge(self, x: str, y: str) -> Formula:
        a, b = self._fresh_except(2, {x, y})
        head = conj([D(a, b), D(b, y), Not(self.vertex(b)), Not(self.marked(b))])
        path = conj([D(x, a), Not(self.vertex(a)), self.marked(a), Exists(b, head)])
        (c,) = self._fresh_except(1, {x, y})
        l1, l2 = self._fresh_except(2, {x, y, c})
        loop = Exists(c, conj([
            D(x, c),
            Not(self.vertex(c)),
            Exists(l1, Exists(l2, conj([neq(l1, l2), D(c, l1), D(c, l2), self.leaf(l1), self.leaf(l2)]))),
        ]))
        return Or(And(neq(x, y), Exists(a, path)), And(Eq(x, y), loop))

    def _fresh_except(self, k: int, taken: set[str]) -> list[str]:
        out: list[str] = []
        i = 0
        while len(out) < k:
            name = self.new(i + 1)[i]
            if name not in taken:
                out.append(name)
            i += 1
        return out


def translate(theta: Formula) -> Formula:
    """L1 sentence true on ``interpret_digraph(d)`` iff ``theta`` holds in ``d``."""
    check_language(theta, "LNBG")
    defs = _Defs(variables(theta))

    def step(g: Formula):
        if isinstance(g, Atom):
            return defs.edge(g.left, g.right)
        if isinstance(g, Exists):
            return Exists(g.var, And(defs.vertex(g.var), g.body))
        if isinstance(g, Forall):
            return Forall(g.var, Implies(defs.vertex(g.var), g.body))
        return None

    return transform(theta, step)


def vertex_formula(x: str) -> Formula:
    """The formula picking out vertex nodes of a gadget graph."""
    return _Defs({x}).vertex(x)
