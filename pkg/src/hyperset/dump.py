"""Canonical dump of hereditarily finite hypersets, and the APG text format.

A dump lists every node hereditarily reachable from the named points, one
per line as ``id: {child, ...}``, followed by ``name := id`` lines marking the
points.  Ids are assigned by stratum (rank for well-founded nodes) and then by
refinement color, so the text depends only on the sets themselves.  The same
syntax, read back with :func:`parse_apg`, describes arbitrary (uncollapsed)
membership graphs.
"""
from __future__ import annotations

import re
from typing import Iterable, Mapping

from . import bisim
from .errors import AccessibilityError, ParseError
from .store import Hyperset, Store, closure, default_store


def canonical_numbering(hs: Iterable[Hyperset]) -> dict[Hyperset, int]:
    """Structure-only numbering of the hereditary closure of ``hs``."""
    nodes = closure(hs)
    children = {h: list(h.elements()) for h in nodes}
    height = bisim.strata(children)
    color = bisim.refine(children, height)
    if len(set(color.values())) != len(nodes):
        raise AssertionError("closure of canonical nodes is not discrete under refinement")
    return {h: color[h] for h in nodes}


def canonical_order(hs: Iterable[Hyperset]) -> list[Hyperset]:
    hs = list(hs)
    num = canonical_numbering(hs)
    return sorted(set(hs), key=num.__getitem__)


def dump(points: Mapping[str, Hyperset] | Hyperset, name: str = "point") -> str:
    if isinstance(points, Hyperset):
        points = {name: points}
    num = canonical_numbering(points.values())
    by_id = sorted(num, key=num.__getitem__)
    lines = []
    for h in by_id:
        kids = ", ".join(str(k) for k in sorted(num[c] for c in h.elements()))
        lines.append(f"{num[h]}: {{{kids}}}")
    for p in sorted(points):
        lines.append(f"{p} := {num[points[p]]}")
    return "\n".join(lines) + "\n"


_NODE = re.compile(r"^(\d+)\s*:\s*\{([^}]*)\}$")
_POINT = re.compile(r"^([A-Za-z_][A-Za-z0-9_']*)\s*:=\s*(\d+)$")


def parse_apg(text: str) -> tuple[dict[int, frozenset[int]], dict[str, int]]:
    """Parse dump syntax into ``(children, points)`` without collapsing."""
    children: dict[int, frozenset[int]] = {}
    points: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        m = _NODE.match(line)
        if m:
            node = int(m.group(1))
            body = m.group(2).strip()
            try:
                kids = frozenset(int(t) for t in body.split(",")) if body else frozenset()
            except ValueError:
                raise ParseError(f"bad child list {body!r}", lineno) from None
            if node in children:
                raise ParseError(f"node {node} listed twice", lineno)
            children[node] = kids
            continue
        m = _POINT.match(line)
        if m:
            points[m.group(1)] = int(m.group(2))
            continue
        raise ParseError(f"cannot read {line!r}", lineno)
    for node, kids in children.items():
        for c in kids:
            if c not in children:
                raise AccessibilityError(f"child {c} of node {node} is not declared")
    for p, node in points.items():
        if node not in children:
            raise AccessibilityError(f"point {p} names undeclared node {node}")
    return children, points


def load_dump(text: str, store: Store | None = None) -> tuple[dict[str, Hyperset], frozenset[Hyperset]]:
    """Collapse a dump/APG into the store.

    Returns the named points and the set of all listed nodes.
    """
    store = store or default_store()
    children, points = parse_apg(text)
    nodes = store.insert_graph(children)
    named = {p: Hyperset(store, nodes[n]) for p, n in points.items()}
    return named, frozenset(Hyperset(store, n) for n in nodes.values())
