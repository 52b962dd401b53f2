"""Ehrenfeucht–Fraïssé games on finite structures.

``ef_equiv(a, ta, b, tb, k)`` decides whether Duplicator wins the ``k``-round
game from the position pairing ``ta`` with ``tb``; equivalently whether the
two expanded structures agree on all formulas of quantifier rank ``<= k``.
Positions are memoized as sets of pairs: the order and repetition of moves
do not matter once the partial map is fixed.
"""
from __future__ import annotations

from typing import Sequence

from ..errors import LanguageError, PreconditionError
from ..structures import LANGUAGES, FiniteStructure, disjoint_union
from ..bisim import refine

Position = frozenset[tuple[int, int]]


class Game:
    def __init__(self, a: FiniteStructure, b: FiniteStructure):
        if a.lang != b.lang:
            raise LanguageError(f"cannot play {a.lang} against {b.lang}")
        self.a, self.b = a, b
        rels = LANGUAGES[a.lang]
        self._ra = [[[((u, v) in a.relations[r]) for v in a.domain] for u in a.domain] for r in rels]
        self._rb = [[[((u, v) in b.relations[r]) for v in b.domain] for u in b.domain] for r in rels]
        self._memo: dict[tuple[Position, int], bool] = {}
        self._order = self._response_order()

    def _response_order(self) -> dict[tuple[str, int], list[int]]:
        """Per element of either side, the other side's elements, most similar first."""
        joint = disjoint_union(self.a, self.b)
        kids: dict[int, list[int]] = {v: [] for v in joint.domain}
        for pairs in joint.relations.values():
            for u, w in pairs:
                kids[u].append(w)
        loops = {v: tuple((v, v) in joint.relations[r] for r in joint.relations) for v in joint.domain}
        color = refine(kids, loops)
        na = self.a.size
        order = {}
        for x in self.a.domain:
            order[("a", x)] = sorted(self.b.domain, key=lambda y: color[na + y] != color[x])
        for y in self.b.domain:
            order[("b", y)] = sorted(self.a.domain, key=lambda x: color[x] != color[na + y])
        return order

    def compatible(self, pos: Position, x: int, y: int) -> bool:
        """Does adding ``x -> y`` keep ``pos`` a partial isomorphism?"""
        for ra, rb in zip(self._ra, self._rb):
            if ra[x][x] != rb[y][y]:
                return False
        for u, v in pos:
            if (u == x) != (v == y):
                return False
            for ra, rb in zip(self._ra, self._rb):
                if ra[x][u] != rb[y][v] or ra[u][x] != rb[v][y]:
                    return False
        return True

    def is_partial_iso(self, pairs: Sequence[tuple[int, int]]) -> bool:
        pos: set[tuple[int, int]] = set()
        for x, y in pairs:
            if not self.compatible(frozenset(pos), x, y):
                return False
            pos.add((x, y))
        return True

    def duplicator_wins(self, pos: Position, k: int) -> bool:
        if k == 0:
            return True
        key = (pos, k)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        result = self._spoiler_moves(pos, k)
        self._memo[key] = result
        return result

    def _spoiler_moves(self, pos: Position, k: int) -> bool:
        dom = {u for u, _ in pos}
        ran = {v for _, v in pos}
        for x in self.a.domain:
            if x in dom:
                continue
            if not any(
                self.compatible(pos, x, y) and self.duplicator_wins(pos | {(x, y)}, k - 1)
                for y in self._order[("a", x)]
                if y not in ran
            ):
                return False
        for y in self.b.domain:
            if y in ran:
                continue
            if not any(
                self.compatible(pos, x, y) and self.duplicator_wins(pos | {(x, y)}, k - 1)
                for x in self._order[("b", y)]
                if x not in dom
            ):
                return False
        return True


def ef_equiv(
    a: FiniteStructure,
    atuple: Sequence[int],
    b: FiniteStructure,
    btuple: Sequence[int],
    k: int,
) -> bool:
    """``(a, atuple)`` and ``(b, btuple)`` are ``k``-equivalent."""
    if len(atuple) != len(btuple):
        raise PreconditionError("tuples must have the same length")
    if k < 0:
        raise PreconditionError("the number of rounds is a natural")
    for x in atuple:
        if not 0 <= x < a.size:
            raise PreconditionError(f"{x} is not an element of the first structure")
    for y in btuple:
        if not 0 <= y < b.size:
            raise PreconditionError(f"{y} is not an element of the second structure")
    game = Game(a, b)
    pairs = list(zip(atuple, btuple))
    if not game.is_partial_iso(pairs):
        return False
    return game.duplicator_wins(frozenset(pairs), k)
