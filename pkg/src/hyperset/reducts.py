"""S/D reducts of finite slices of the store, regions, D-closure."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .dump import canonical_order
from .errors import CrossStoreError, PreconditionError
from .store import Hyperset, Store, closure, member
from .structures import FiniteStructure


@dataclass(frozen=True)
class Slice:
    """A finite set of hypersets from one store."""

    members: frozenset[Hyperset]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", frozenset(self.members))
        stores = {id(h.store) for h in self.members}
        if len(stores) > 1:
            raise CrossStoreError("slice members come from different stores")

    @classmethod
    def of(cls, hs: Iterable[Hyperset]) -> Slice:
        return cls(frozenset(hs))

    @property
    def store(self) -> Store | None:
        return next(iter(self.members)).store if self.members else None

    def __contains__(self, h: Hyperset) -> bool:
        return h in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.ordered())

    def ordered(self) -> list[Hyperset]:
        return canonical_order(self.members)

    def __or__(self, other: Slice) -> Slice:
        return Slice(self.members | other.members)


def double_member(x: Hyperset, y: Hyperset) -> bool:
    return member(x, y) and member(y, x)


def d_neighbors(h: Hyperset) -> frozenset[Hyperset]:
    """Every ``y`` with ``h in y in h``.  Such a ``y`` is always an element of ``h``."""
    return frozenset(y for y in h.elements() if member(h, y))


def d_graph(s: Slice) -> FiniteStructure:
    order = s.ordered()
    pos = {h: i for i, h in enumerate(order)}
    pairs = frozenset((pos[x], pos[y]) for x in order for y in d_neighbors(x) if y in pos)
    return FiniteStructure("L1", len(order), {"D": pairs}, tuple(order))


def sd_graph(s: Slice) -> FiniteStructure:
    order = s.ordered()
    pos = {h: i for i, h in enumerate(order)}
    s_pairs = set()
    for y in order:
        for x in y.elements():
            if x in pos:
                s_pairs.add((pos[x], pos[y]))
                s_pairs.add((pos[y], pos[x]))
    d_pairs = frozenset((pos[x], pos[y]) for x in order for y in d_neighbors(x) if y in pos)
    return FiniteStructure("L0", len(order), {"S": frozenset(s_pairs), "D": d_pairs}, tuple(order))


def d_closure(s: Slice | Iterable[Hyperset]) -> Slice:
    """Saturate under D-neighbours.  Terminates: D-neighbours are elements,
    so the result sits inside the hereditary closure."""
    members = set(s.members if isinstance(s, Slice) else s)
    todo = list(members)
    while todo:
        for y in d_neighbors(todo.pop()):
            if y not in members:
                members.add(y)
                todo.append(y)
    return Slice(frozenset(members))


def is_d_closed(s: Slice | Iterable[Hyperset]) -> bool:
    members = s.members if isinstance(s, Slice) else frozenset(s)
    return all(d_neighbors(h) <= members for h in members)


def hereditary_slice(hs: Iterable[Hyperset]) -> Slice:
    """The hereditary closure of ``hs``; always D-closed."""
    return Slice(closure(hs))


def region(h: Hyperset, within: Slice) -> Slice:
    """D-connected component of ``h`` inside ``within``.

    At finite scale this is the region of ``h``: the transitive closure of
    ``{h}`` under D.  ``within`` should be D-closed for the answer to be the
    component in the whole store; see :func:`d_closure`.
    """
    if h not in within:
        raise PreconditionError(f"{h!r} is not a member of the slice")
    comp = {h}
    todo = [h]
    while todo:
        for y in d_neighbors(todo.pop()):
            if y in within and y not in comp:
                comp.add(y)
                todo.append(y)
    return Slice(frozenset(comp))
