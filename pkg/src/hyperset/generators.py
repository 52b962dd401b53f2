"""Seeded random inputs and exhaustive small corpora for tests and experiments.

Every random generator takes a ``random.Random`` so runs are reproducible.
"""
from __future__ import annotations

import itertools
import random
from typing import Sequence

from .constructions import BallSpec, ball, embed_graph
from .flat import FlatSystem
from .reducts import Slice, d_closure, d_neighbors
from .store import Apg, Hyperset, Store, hf_encode
from .structures import FiniteStructure, digraph, graph
from .logic.syntax import (
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

# -- hypersets ------------------------------------------------------------


def random_apg(rng: random.Random, max_nodes: int = 8, density: float | None = None) -> Apg:
    """A random accessible pointed graph on ``1..max_nodes`` nodes, point 0."""
    n = rng.randint(1, max_nodes)
    p = rng.uniform(0.05, 0.5) if density is None else density
    children = {u: {v for v in range(n) if rng.random() < p} for u in range(n)}
    reached = {0}
    todo = [0]
    while True:
        while todo:
            for v in children[todo.pop()]:
                if v not in reached:
                    reached.add(v)
                    todo.append(v)
        rest = [v for v in range(n) if v not in reached]
        if not rest:
            break
        v = rest[0]
        children[rng.choice(sorted(reached))].add(v)
        reached.add(v)
        todo.append(v)
    return Apg({u: frozenset(c) for u, c in children.items()}, 0)


def random_flat_system(
    rng: random.Random,
    store: Store,
    max_indeterminates: int = 6,
    max_atoms: int = 4,
) -> FlatSystem:
    """Random system whose atoms are small naturals and pairs of naturals."""
    k = rng.randint(0, max_indeterminates)
    xs = [f"x{i}" for i in range(k)]
    atoms: dict[str, Hyperset] = {}
    for j in range(rng.randint(0, max_atoms)):
        if rng.random() < 0.6:
            atoms[f"a{j}"] = hf_encode(rng.randint(0, 3), store)
        else:
            atoms[f"a{j}"] = store.set_of([hf_encode(rng.randint(0, 3), store) for _ in range(2)])
    names = xs + sorted(atoms)
    eqs = {x: {m for m in names if rng.random() < 0.35} for x in xs}
    return FlatSystem.of(eqs, atoms)


def permuted_system(rng: random.Random, system: FlatSystem) -> FlatSystem:
    """The same system with equations (and atoms) inserted in a shuffled order."""
    xs = list(system.equations)
    rng.shuffle(xs)
    names = list(system.atoms)
    rng.shuffle(names)
    return FlatSystem({x: system.equations[x] for x in xs}, {a: system.atoms[a] for a in names})


# -- structures -------------------------------------------------------------


def random_graph(rng: random.Random, n: int, p: float = 0.5, loops: bool = True) -> FiniteStructure:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    if loops:
        edges += [(v, v) for v in range(n) if rng.random() < p / 2]
    return graph(n, edges)


def random_digraph(rng: random.Random, n: int, p: float = 0.4) -> FiniteStructure:
    return digraph(n, [(u, v) for u in range(n) for v in range(n) if rng.random() < p])


def random_permutation(rng: random.Random, g: FiniteStructure) -> FiniteStructure:
    perm = list(g.domain)
    rng.shuffle(perm)
    return g.permute(perm)


def all_digraphs(n: int) -> list[FiniteStructure]:
    """Every labelled digraph (loops allowed) on ``n`` vertices."""
    pairs = [(u, v) for u in range(n) for v in range(n)]
    return [
        digraph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        for mask in range(1 << len(pairs))
    ]


def digraphs_up_to_iso(n: int) -> list[FiniteStructure]:
    """One digraph per isomorphism class on ``n`` vertices."""
    perms = list(itertools.permutations(range(n)))
    seen: set[frozenset] = set()
    out = []
    for d in all_digraphs(n):
        edges = d.relations["E"]
        if edges in seen:
            continue
        seen |= {frozenset((p[u], p[v]) for u, v in edges) for p in perms}
        out.append(d)
    return out


# -- formulas -------------------------------------------------------------


def random_formula(
    rng: random.Random,
    lang: str,
    rank: int,
    free: Sequence[str] = (),
    pool: Sequence[str] = ("x", "y", "z"),
    size: int = 6,
) -> Formula:
    """Random formula of quantifier rank at most ``rank`` with free variables
    among ``free``; ``size`` bounds the number of connectives."""
    rels = {"L1": ("D",), "L0": ("S", "D"), "LNBG": ("E",)}[lang]

    def atom(scope: Sequence[str]) -> Formula:
        if not scope:
            return Top() if rng.random() < 0.5 else Bottom()
        u, v = rng.choice(scope), rng.choice(scope)
        if rng.random() < 0.25:
            return Eq(u, v)
        return Atom(rng.choice(rels), u, v)

    def gen(scope: tuple[str, ...], r: int, budget: int) -> Formula:
        roll = rng.random()
        if budget <= 0 or (roll < 0.25 and scope):
            return atom(scope)
        if r > 0 and (roll < 0.6 or not scope):
            v = rng.choice(pool)
            q = Exists if rng.random() < 0.5 else Forall
            return q(v, gen(tuple(sorted(set(scope) | {v})), r - 1, budget - 1))
        if roll < 0.7:
            return Not(gen(scope, r, budget - 1))
        op = rng.choice((And, Or, Implies))
        return op(gen(scope, r, budget // 2), gen(scope, r, budget // 2))

    return gen(tuple(free), rank, size)


def random_sentence(rng: random.Random, lang: str, rank: int, **kw) -> Formula:
    return random_formula(rng, lang, rank, (), **kw)


def sentence_pool(rng: random.Random, lang: str, rank: int, count: int, **kw) -> list[Formula]:
    """``count`` distinct random sentences of quantifier rank at most ``rank``."""
    out: list[Formula] = []
    seen: set[Formula] = set()
    while len(out) < count:
        f = random_sentence(rng, lang, rank, **kw)
        if f not in seen:
            seen.add(f)
            out.append(f)
    return out


# -- grafting instances -------------------------------------------------------


def random_graft_instance(
    rng: random.Random,
    store: Store,
    max_vertices: int = 6,
    max_radius: int = 2,
) -> tuple[BallSpec, dict[Hyperset, frozenset[Hyperset]], Slice]:
    """A single-center D-ball from an embedded random graph, a target slice
    from a second embedding, and random S-target prescriptions."""
    while True:
        n = rng.randint(1, max_vertices)
        src_graph = random_graph(rng, n, rng.uniform(0.2, 0.7))
        emb = embed_graph(src_graph, store)
        center = emb[rng.randrange(n)]
        within = d_closure([center])
        src = ball(center, rng.randint(0, max_radius), within)
        m = rng.randint(1, 4)
        # the target vertices carry different naturals, so no set is shared
        tgt = embed_graph(random_graph(rng, n + m, 0.4), store)
        target = Slice.of(tgt[v] for v in range(n, n + m))
        if set(src.members) & target.members:
            continue
        if any(d_neighbors(d) & target.members for d in src.members):
            continue
        ordered = target.ordered()
        s_targets = {
            d: frozenset(t for t in ordered if rng.random() < 0.3)
            for d in src.members
            if rng.random() < 0.6
        }
        return src, s_targets, target
