"""Partition refinement and strongly connected components on membership digraphs.

Graphs here are plain mappings ``node -> iterable of child nodes``; nodes are
any hashable values.
"""
from __future__ import annotations

from typing import Hashable, Iterable, Mapping, TypeVar

N = TypeVar("N", bound=Hashable)


def refine(
    children: Mapping[N, Iterable[N]],
    initial: Mapping[N, Hashable] | None = None,
) -> dict[N, int]:
    """Coarsest stable partition of ``children`` refining ``initial``.

    Each round splits blocks by the set of blocks of a node's children until
    the number of blocks stops growing.  Starting from a single block this is
    the maximal bisimulation.  Block numbers are assigned by sorting the
    signatures, so they depend only on the structure (and the initial labels),
    never on node identity or iteration order.
    """
    kids = {v: tuple(cs) for v, cs in children.items()}
    if initial is None:
        block = {v: 0 for v in kids}
    else:
        labels = sorted(set(initial[v] for v in kids))
        lookup = {lab: i for i, lab in enumerate(labels)}
        block = {v: lookup[initial[v]] for v in kids}
    count = len(set(block.values()))
    while True:
        sig = {v: (block[v], tuple(sorted(set(block[c] for c in kids[v])))) for v in kids}
        order = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        block = {v: order[sig[v]] for v in kids}
        if len(order) == count:
            return block
        count = len(order)


def quotient(children: Mapping[N, Iterable[N]], block: Mapping[N, int]) -> dict[int, frozenset[int]]:
    return {block[v]: frozenset(block[c] for c in cs) for v, cs in children.items()}


def strongly_connected_components(children: Mapping[N, Iterable[N]]) -> list[list[N]]:
    """Tarjan's algorithm, iterative.  Components come out children-first
    (reverse topological order of the condensation)."""
    index: dict[N, int] = {}
    low: dict[N, int] = {}
    on_stack: set[N] = set()
    stack: list[N] = []
    out: list[list[N]] = []
    counter = 0
    kids = {v: list(cs) for v, cs in children.items()}

    for root in kids:
        if root in index:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            recurse = False
            cs = kids[v]
            while i < len(cs):
                c = cs[i]
                i += 1
                if c not in index:
                    work.append((v, i))
                    work.append((c, 0))
                    recurse = True
                    break
                if c in on_stack:
                    low[v] = min(low[v], index[c])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                out.append(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return out


def is_cyclic_component(comp: list[N], children: Mapping[N, Iterable[N]]) -> bool:
    if len(comp) > 1:
        return True
    v = comp[0]
    return v in set(children[v])


def strata(children: Mapping[N, Iterable[N]]) -> dict[N, int]:
    """Height in the SCC condensation: 0 for childless nodes, else one more
    than the highest child component.  Agrees with rank on well-founded nodes."""
    comp_of: dict[N, int] = {}
    height: dict[N, int] = {}
    for ci, comp in enumerate(strongly_connected_components(children)):
        for v in comp:
            comp_of[v] = ci
        h = 0
        for v in comp:
            for c in children[v]:
                if comp_of[c] != ci:
                    h = max(h, height[c] + 1)
        if is_cyclic_component(comp, children):
            h += 1
        for v in comp:
            height[v] = h
    return height
