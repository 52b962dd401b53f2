"""Canonical store of hereditarily finite hypersets.

Every set lives in a :class:`Store` as a node of a bisimulation-collapsed
membership graph, so two sets are equal exactly when their node ids are.
Acyclic nodes are hash-consed on their child sets; cyclic strongly connected
components are interned on a canonical form computed by partition refinement.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Mapping

from . import bisim
from .errors import AccessibilityError, CrossStoreError, NotWellFoundedError


class Store:
    """Append-only table of canonical nodes.

    Readers never need a lock: rows are only appended and never mutated.
    Insertions are serialized by an internal lock.
    """

    def __init__(self) -> None:
        self._children: list[frozenset[int]] = []
        self._index: dict[frozenset[int], int] = {}
        self._cyclic_index: dict[tuple, tuple[int, ...]] = {}
        self._wf: list[bool] = []
        self._rank: list[int | None] = []
        self._lock = threading.RLock()
        self._naturals: list[int] = []

    def __len__(self) -> int:
        return len(self._children)

    def __bool__(self) -> bool:
        return True

    def __repr__(self) -> str:
        return f"<Store {len(self)} nodes at {id(self):#x}>"

    def handle(self, node: int) -> Hyperset:
        if not 0 <= node < len(self._children):
            raise IndexError(node)
        return Hyperset(self, node)

    def nodes(self) -> Iterator[Hyperset]:
        for i in range(len(self._children)):
            yield Hyperset(self, i)

    def children_of(self, node: int) -> frozenset[int]:
        return self._children[node]

    # -- insertion ---------------------------------------------------------

    def _append(self, kids: frozenset[int], wf: bool) -> int:
        node = len(self._children)
        self._children.append(kids)
        self._index[kids] = node
        self._wf.append(wf)
        if wf:
            self._rank.append(1 + max((self._rank[c] for c in kids), default=-1))
        else:
            self._rank.append(None)
        return node

    def set_of(self, elements: Iterable[Hyperset]) -> Hyperset:
        """The set whose elements are exactly ``elements``."""
        kids = frozenset(self._own(h) for h in elements)
        with self._lock:
            node = self._index.get(kids)
            if node is None:
                node = self._append(kids, all(self._wf[c] for c in kids))
        return Hyperset(self, node)

    def _own(self, h: Hyperset) -> int:
        if h.store is not self:
            raise CrossStoreError(f"{h!r} belongs to a different store")
        return h.node

    def insert_graph(self, children: Mapping[Hashable, Iterable[Hashable]]) -> dict[Hashable, int]:
        """Collapse a membership graph into the store.

        ``children`` maps local keys to their children; a child is either a
        local key or a :class:`Hyperset` of this store.  Returns the canonical
        node of every local key.
        """
        local = {k: list(cs) for k, cs in children.items()}
        for k, cs in local.items():
            for c in cs:
                if isinstance(c, Hyperset):
                    self._own(c)
                elif c not in local:
                    raise AccessibilityError(f"child {c!r} of {k!r} is not a declared node")
        with self._lock:
            return self._insert(local)

    def _insert(self, local: dict[Hashable, list]) -> dict[Hashable, int]:
        done = self._resolve_well_founded(local)
        # Only non-well-founded nodes remain.  They can be bisimilar to
        # non-well-founded store nodes alone, so refinement sees those with
        # their closures, while well-founded store nodes (already canonical
        # and pairwise distinct) enter as labelled leaves.
        graph: dict[Hashable, list] = {}
        initial: dict[Hashable, tuple] = {}
        seeds = []
        for k, cs in local.items():
            if k in done:
                continue
            row = []
            for c in cs:
                if isinstance(c, Hyperset):
                    row.append(("s", c.node))
                    seeds.append(c.node)
                elif c in done:
                    row.append(("s", done[c]))
                    seeds.append(done[c])
                else:
                    row.append(("l", c))
            graph[("l", k)] = row
            initial[("l", k)] = (0, -1)
        for n in self._closure_nodes(seeds, stop_at_wf=True):
            if self._wf[n]:
                graph[("s", n)] = []
                initial[("s", n)] = (1, n)
            else:
                graph[("s", n)] = [("s", c) for c in self._children[n]]
                initial[("s", n)] = (0, -1)

        block = bisim.refine(graph, initial)
        resolved: dict[int, int] = {}
        for key, b in block.items():
            if key[0] == "s":
                resolved[b] = key[1]
        qgraph = {}
        for key, b in block.items():
            if b not in resolved and b not in qgraph:
                qgraph[b] = frozenset(block[c] for c in graph[key])

        # Unresolved blocks that point at resolved ones keep those as leaves.
        scc_graph = {b: [c for c in cs if c not in resolved] for b, cs in qgraph.items()}
        for comp in bisim.strongly_connected_components(scc_graph):
            if not bisim.is_cyclic_component(comp, scc_graph):
                b = comp[0]
                kids = frozenset(resolved[c] for c in qgraph[b])
                node = self._index.get(kids)
                if node is None:
                    node = self._append(kids, all(self._wf[c] for c in kids))
                resolved[b] = node
            else:
                self._intern_cycle(comp, qgraph, resolved)
        out = {key[1]: resolved[b] for key, b in block.items() if key[0] == "l"}
        out.update(done)
        return out

    def _resolve_well_founded(self, local: dict[Hashable, list]) -> dict[Hashable, int]:
        """Hash-cons the local keys that reach no cycle, children first."""
        done: dict[Hashable, int] = {}
        kids = {k: [c for c in cs if not isinstance(c, Hyperset)] for k, cs in local.items()}
        for comp in bisim.strongly_connected_components(kids):
            k = comp[0]
            if bisim.is_cyclic_component(comp, kids):
                continue
            row = []
            for c in local[k]:
                if isinstance(c, Hyperset):
                    if not self._wf[c.node]:
                        break
                    row.append(c.node)
                elif c in done:
                    row.append(done[c])
                else:
                    break
            else:
                row = frozenset(row)
                node = self._index.get(row)
                done[k] = self._append(row, True) if node is None else node
        return done

    def _intern_cycle(self, comp: list[int], qgraph: dict[int, frozenset[int]], resolved: dict[int, int]) -> None:
        members = set(comp)
        external = {b: tuple(sorted(resolved[c] for c in qgraph[b] if c not in members)) for b in comp}
        internal = {b: [c for c in qgraph[b] if c in members] for b in comp}
        color = bisim.refine(internal, external)
        if len(set(color.values())) != len(comp):
            raise AssertionError("cyclic component is not bisimulation-minimal")
        order = sorted(comp, key=color.__getitem__)
        form = tuple((external[b], tuple(sorted(color[c] for c in internal[b]))) for b in order)
        hit = self._cyclic_index.get(form)
        if hit is not None:
            for b, node in zip(order, hit):
                resolved[b] = node
            return
        base = len(self._children)
        ids = {b: base + i for i, b in enumerate(order)}
        for b in order:
            kids = frozenset(external[b]) | frozenset(ids[c] for c in internal[b])
            self._append(kids, False)
        self._cyclic_index[form] = tuple(ids[b] for b in order)
        for b in order:
            resolved[b] = ids[b]

    def _closure_nodes(self, seeds: Iterable[int], stop_at_wf: bool = False) -> set[int]:
        seen: set[int] = set()
        todo = list(seeds)
        while todo:
            n = todo.pop()
            if n in seen:
                continue
            seen.add(n)
            if not (stop_at_wf and self._wf[n]):
                todo.extend(self._children[n])
        return seen

    # -- naturals ----------------------------------------------------------

    def natural(self, n: int) -> Hyperset:
        if n < 0:
            raise ValueError("naturals are non-negative")
        with self._lock:
            while len(self._naturals) <= n:
                self._naturals.append(self.set_of(Hyperset(self, m) for m in self._naturals).node)
        return Hyperset(self, self._naturals[n])

    def check_invariants(self) -> None:
        """Assert extensionality and full collapse of the whole store."""
        seen: dict[frozenset[int], int] = {}
        for i, kids in enumerate(self._children):
            if kids in seen:
                raise AssertionError(f"nodes {seen[kids]} and {i} have equal children")
            seen[kids] = i
        graph = {i: kids for i, kids in enumerate(self._children)}
        block = bisim.refine(graph)
        if len(set(block.values())) != len(graph):
            raise AssertionError("store contains bisimilar nodes")


@dataclass(frozen=True, eq=False)
class Hyperset:
    """Handle to a canonical node.  Equality is node identity within a store."""

    store: Store = field(repr=False)
    node: int

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hyperset):
            return NotImplemented
        return self.store is other.store and self.node == other.node

    def __hash__(self) -> int:
        return hash((id(self.store), self.node))

    def __repr__(self) -> str:
        return f"Hyperset(#{self.node})"

    def elements(self) -> frozenset[Hyperset]:
        return elements(self)

    def __contains__(self, x: Hyperset) -> bool:
        return member(x, self)

    def __iter__(self) -> Iterator[Hyperset]:
        return iter(sorted(self.elements(), key=lambda h: h.node))

    def __len__(self) -> int:
        return len(self.store.children_of(self.node))


_default: Store | None = None
_default_lock = threading.Lock()


def default_store() -> Store:
    global _default
    with _default_lock:
        if _default is None:
            _default = Store()
        return _default


@dataclass(frozen=True)
class Apg:
    """Accessible pointed graph: the raw membership picture of one set."""

    children: Mapping[Hashable, frozenset]
    point: Hashable

    @classmethod
    def from_edges(cls, point: Hashable, edges: Iterable[tuple[Hashable, Hashable]], nodes: Iterable[Hashable] = ()) -> Apg:
        """Build from ``(member, container)`` pairs, i.e. arrows ``x -> y`` meaning ``x in y``."""
        kids: dict[Hashable, set] = {n: set() for n in nodes}
        kids.setdefault(point, set())
        for x, y in edges:
            kids.setdefault(x, set())
            kids.setdefault(y, set()).add(x)
        return cls({k: frozenset(v) for k, v in kids.items()}, point)

    @property
    def nodes(self) -> frozenset:
        return frozenset(self.children)

    def validate(self) -> None:
        if self.point not in self.children:
            raise AccessibilityError(f"point {self.point!r} is not a node")
        for k, cs in self.children.items():
            for c in cs:
                if c not in self.children:
                    raise AccessibilityError(f"child {c!r} of {k!r} is not a declared node")
        seen = {self.point}
        todo = [self.point]
        while todo:
            for c in self.children[todo.pop()]:
                if c not in seen:
                    seen.add(c)
                    todo.append(c)
        missing = set(self.children) - seen
        if missing:
            raise AccessibilityError(f"nodes not reachable from the point: {sorted(map(repr, missing))}")


def canonicalize(g: Apg, store: Store | None = None) -> Hyperset:
    """The canonical hyperset bisimilar to the point of ``g``."""
    g.validate()
    store = store or default_store()
    nodes = store.insert_graph(g.children)
    return Hyperset(store, nodes[g.point])


def elements(h: Hyperset) -> frozenset[Hyperset]:
    return frozenset(Hyperset(h.store, c) for c in h.store.children_of(h.node))


def member(x: Hyperset, y: Hyperset) -> bool:
    if x.store is not y.store:
        raise CrossStoreError("membership test across different stores")
    return x.node in y.store.children_of(y.node)


def is_well_founded(h: Hyperset) -> bool:
    return h.store._wf[h.node]


def rank(h: Hyperset) -> int:
    r = h.store._rank[h.node]
    if r is None:
        raise NotWellFoundedError(f"{h!r} is not well-founded, rank is undefined")
    return r


def hf_encode(n: int, store: Store | None = None) -> Hyperset:
    """The von Neumann natural ``n``."""
    return (store or default_store()).natural(n)


def empty(store: Store | None = None) -> Hyperset:
    return (store or default_store()).set_of(())


def set_of(*elems: Hyperset, store: Store | None = None) -> Hyperset:
    if store is None:
        store = elems[0].store if elems else default_store()
    return store.set_of(elems)


def closure(hs: Iterable[Hyperset]) -> frozenset[Hyperset]:
    """Hereditary closure: the given sets, their elements, elements of those, ..."""
    hs = list(hs)
    if not hs:
        return frozenset()
    store = hs[0].store
    nodes = store._closure_nodes(store._own(h) for h in hs)
    return frozenset(Hyperset(store, n) for n in nodes)


def natural_value(h: Hyperset) -> int | None:
    """``n`` if ``h`` is the von Neumann natural ``n``, else ``None``."""
    if not is_well_founded(h):
        return None
    r = rank(h)
    return r if hf_encode(r, h.store) == h else None
