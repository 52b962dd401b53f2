"""Explicit hyperset constructions on the double-membership graph.

* :func:`embed_graph` plants a graph as a union of D-components, via
  ``x_i = {i} u {x_j : R(i,j)}``.
* :func:`flower` and :func:`bouquet` build the points picked out by
  ``phi_n`` and by the bouquet types.
* :func:`rieger` changes membership along a permutation swapping
  ``a_i = (n+1) minus {i}`` with ``b_j = {a_i : R(i,j)}``, without touching
  Foundation in the base sets.
* :func:`graft_ball` solves ``x_d = {h_d} u P_d u Q_d``, copying a D-ball next
  to a target slice with prescribed S-edges and no D-edges.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import PreconditionError
from .flat import FlatSystem, solve
from .reducts import Slice, d_closure, d_graph, d_neighbors, is_d_closed, sd_graph
from .store import Hyperset, Store, closure, default_store, hf_encode, is_well_founded, member, rank
from .structures import FiniteStructure, components, graph

# -- graph embeddings ------------------------------------------------------


def _as_graph(g: FiniteStructure) -> FiniteStructure:
    if g.lang == "L1":
        return g
    if g.lang == "L0":
        return g.to_L1()
    raise PreconditionError(f"expected a graph (L1 structure), got {g.lang}")


def embed_graph(g: FiniteStructure, store: Store | None = None) -> dict[int, Hyperset]:
    """Vertex ``i`` goes to the solution of ``x_i = {i} u {x_j : R(i,j)}``."""
    g = _as_graph(g)
    store = store or default_store()
    eqs = {f"x{i}": {f"n{i}"} | {f"x{j}" for j in g.neighbors(i)} for i in g.domain}
    atoms = {f"n{i}": hf_encode(i, store) for i in g.domain}
    sol = solve(FlatSystem.of(eqs, atoms), store)
    return {i: sol[f"x{i}"] for i in g.domain}


def check_embedding(g: FiniteStructure, s: Mapping[int, Hyperset]) -> list[str]:
    """Clauses of the embedding guarantee that fail for ``s``; empty if all hold."""
    g = _as_graph(g)
    failed = []
    image = [s[i] for i in g.domain]
    if len(set(image)) != len(image):
        failed.append("injectivity")
    else:
        dg = d_graph(Slice.of(image))
        pos = {h: k for k, h in enumerate(dg.labels)}
        mapped = {(pos[s[u]], pos[s[v]]) for u, v in g.relations["D"]}
        if mapped != set(dg.relations["D"]):
            failed.append("D-graph isomorphism")
    if not is_d_closed(image):
        failed.append("D-closure")
    return failed


def apex_augment(g: FiniteStructure) -> FiniteStructure:
    """``g`` plus one loop-free vertex adjacent to every vertex of ``g``."""
    g = _as_graph(g)
    n = g.size
    return graph(n + 1, list(g.relations["D"]) + [(v, n) for v in g.domain])


def copies(g: FiniteStructure, k: int) -> FiniteStructure:
    """``k`` disjoint copies of ``g``."""
    g = _as_graph(g)
    n = g.size
    edges = [(u + c * n, v + c * n) for c in range(k) for u, v in g.relations["D"]]
    return graph(n * k, edges)


# -- flowers and bouquets ---------------------------------------------------


def flower(n: int, store: Store | None = None) -> Hyperset:
    """The ``n``-flower ``a = {{a, i} : i < n}``."""
    if n < 1:
        raise PreconditionError("a flower needs at least one petal (n >= 1)")
    store = store or default_store()
    eqs = {"a": {f"p{i}" for i in range(n)}}
    eqs.update({f"p{i}": {"a", f"n{i}"} for i in range(n)})
    atoms = {f"n{i}": hf_encode(i, store) for i in range(n)}
    return solve(FlatSystem.of(eqs, atoms), store)["a"]


def bouquet_graph(a: Iterable[int]) -> FiniteStructure:
    """Vertex 0 joined to one apex per ``n`` in ``a``; the apex for ``n`` has
    ``n - 1`` pendant petals, so its degree is exactly ``n``."""
    edges = []
    size = 1
    for n in sorted(set(a)):
        if n < 1:
            raise PreconditionError("bouquet indices are positive naturals")
        apex = size
        edges.append((0, apex))
        edges += [(apex, apex + 1 + i) for i in range(n - 1)]
        size = apex + n
    return graph(size, edges)


def bouquet(a: Iterable[int], store: Store | None = None) -> Hyperset:
    """A loop-free point whose D-neighbours are one ``n``-flower per ``n`` in ``a``."""
    return embed_graph(bouquet_graph(a), store)[0]


# -- Rieger permutation models ----------------------------------------------


@dataclass(frozen=True)
class PermutedMembership:
    """``x in_N y`` iff ``x in pi(y)``, where ``pi`` swaps each ``a_i`` with ``b_i``."""

    pairs: tuple[tuple[Hyperset, Hyperset], ...]

    def __post_init__(self) -> None:
        flat = [h for p in self.pairs for h in p]
        if len(set(flat)) != len(flat):
            raise PreconditionError("swapped sets must be pairwise distinct")

    @property
    def support(self) -> frozenset[Hyperset]:
        return frozenset(h for p in self.pairs for h in p)

    def pi(self, h: Hyperset) -> Hyperset:
        for a, b in self.pairs:
            if h == a:
                return b
            if h == b:
                return a
        return h

    def member_N(self, x: Hyperset, y: Hyperset) -> bool:
        return member(x, self.pi(y))

    def elements_N(self, y: Hyperset) -> frozenset[Hyperset]:
        return self.pi(y).elements()

    def double_member_N(self, x: Hyperset, y: Hyperset) -> bool:
        return self.member_N(x, y) and self.member_N(y, x)


def rieger(g: FiniteStructure, store: Store | None = None) -> tuple[PermutedMembership, tuple[Hyperset, ...]]:
    """Plant ``g`` on ``a_0..a_{n-1}`` by permuting membership.

    ``a_i`` is ``(n+1)`` minus ``{i}``, so every ``a_i`` has rank ``n+1`` and
    every ``b_j`` rank ``n+2``; with ``n`` minus ``{i}`` the ``a_i`` would not
    all share one rank and, for two vertices, ``b_0`` would equal ``a_0``.
    ``b_j`` also contains the natural ``j``: vertices with equal neighbourhoods
    would otherwise get equal ``b_j`` and the swap would not be a permutation.
    The extra element has rank below ``n+1``, so it cannot double-member any
    ``a_i`` and the case analysis is unchanged.
    """
    g = _as_graph(g)
    n = g.size
    if n < 2:
        raise PreconditionError("need at least two vertices")
    isolated = [v for v in g.domain if not g.neighbors(v)]
    if isolated:
        raise PreconditionError(f"vertices {isolated} are isolated, so their b_j would be empty")
    store = store or default_store()
    nat = [hf_encode(i, store) for i in range(n + 1)]
    a = tuple(store.set_of(nat[k] for k in range(n + 1) if k != i) for i in range(n))
    b = tuple(store.set_of([nat[j], *(a[i] for i in g.neighbors(j))]) for j in range(n))
    return PermutedMembership(tuple(zip(a, b))), a


def rieger_slice(pm: PermutedMembership, probes: int = 0, rng=None) -> Slice:
    """Well-founded test slice: the hereditary closure of the swapped sets and
    every set of rank at most 3, plus ``probes`` random sets built from those.
    """
    store = next(iter(pm.support)).store
    members = set(closure(pm.support))
    layer = [hf_encode(0, store)]
    for _ in range(3):
        layer = [store.set_of(sub) for r in range(len(layer) + 1) for sub in itertools.combinations(layer, r)]
    members |= set(closure(layer))
    if probes:
        if rng is None:
            raise PreconditionError("random probes need a random generator")
        pool = Slice(frozenset(members)).ordered()
        for _ in range(probes):
            picked = rng.sample(pool, rng.randint(1, min(3, len(pool))))
            members.add(store.set_of(picked))
    return Slice(frozenset(members))


@dataclass(frozen=True)
class RiegerReport:
    isomorphic: bool
    # case -> (ordered pairs x in_N y falling under the case, D_N-edges found there that should not exist)
    cases: Mapping[str, tuple[int, int]]
    extraneous: tuple[tuple[Hyperset, Hyperset], ...]

    @property
    def ok(self) -> bool:
        return self.isomorphic and not self.extraneous


def rieger_check(g: FiniteStructure, pm: PermutedMembership, a: Sequence[Hyperset], within: Slice) -> RiegerReport:
    """Check that the only ``D_N``-edges inside ``within`` are the planted ones,
    sorting every candidate pair into the three cases of the argument:
    both ends fixed by ``pi``; one end an ``a_i``; one end a ``b_i``."""
    g = _as_graph(g)
    planted = {(a[u], a[v]) for u, v in g.relations["D"]}
    found_on_a = {(x, y) for x in a for y in a if pm.double_member_N(x, y)}
    a_set = frozenset(a)
    b_set = pm.support - a_set
    support = pm.support
    universe = within.members | support
    members = sorted(universe, key=lambda h: h.node)
    cases = {"fixed": [0, 0], "a": [0, 0], "b": [0, 0]}
    extraneous = []
    for y in members:
        for x in sorted(pm.elements_N(y) & universe, key=lambda h: h.node):
            # x in_N y; classify by the end that pi moves, if any
            if y in support:
                moved, other = y, x
            elif x in support:
                moved, other = x, y
            else:
                moved = other = None
            edge = pm.member_N(y, x)
            if moved is None:
                case = "fixed"
                bad = edge
            elif moved in a_set:
                case = "a"
                bad = edge and other not in a_set
            else:
                case = "b"
                bad = edge and moved in b_set
            cases[case][0] += 1
            if bad:
                cases[case][1] += 1
                extraneous.append((x, y))
    return RiegerReport(
        isomorphic=found_on_a == planted,
        cases={k: (v[0], v[1]) for k, v in cases.items()},
        extraneous=tuple(extraneous),
    )


# -- balls and grafting ------------------------------------------------------


@dataclass(frozen=True)
class BallSpec:
    """Union of the radius-``radius`` D-balls around ``centers`` inside a slice,
    with its induced L0 structure (``structure.labels`` are the members)."""

    structure: FiniteStructure
    centers: tuple[Hyperset, ...]
    radius: int

    @property
    def members(self) -> tuple[Hyperset, ...]:
        return self.structure.labels

    def __post_init__(self) -> None:
        if self.structure.lang != "L0" or self.structure.labels is None:
            raise PreconditionError("a ball is an L0 structure labelled by its hypersets")
        if self.radius < 0:
            raise PreconditionError("the radius is a natural")
        members = set(self.structure.labels)
        if not set(self.centers) <= members:
            raise PreconditionError("centers must lie in the ball")
        # the domain is exactly the union of the balls
        dist = _d_distances(self.structure, [self.structure.labels.index(c) for c in self.centers])
        if any(dist.get(v, self.radius + 1) > self.radius for v in self.structure.domain):
            raise PreconditionError("the domain must be the union of the D-balls around the centers")


def _d_distances(m: FiniteStructure, sources: Sequence[int], limit: int | None = None) -> dict[int, int]:
    dist = {v: 0 for v in sources}
    frontier = list(sources)
    while frontier and (limit is None or dist[frontier[0]] < limit):
        nxt = []
        for u in frontier:
            for w in sorted(m.neighbors(u, "D")):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def ball(centers: Hyperset | Sequence[Hyperset], radius: int, within: Slice) -> BallSpec:
    """Members of ``within`` at D-distance at most ``radius`` from a center."""
    if isinstance(centers, Hyperset):
        centers = (centers,)
    centers = tuple(centers)
    outside = [c for c in centers if c not in within]
    if outside:
        raise PreconditionError(f"centers {outside} are not in the slice")
    dg = d_graph(within)
    pos = {h: i for i, h in enumerate(dg.labels)}
    dist = _d_distances(dg, [pos[c] for c in centers], radius)
    members = [dg.labels[v] for v in sorted(dist) if dist[v] <= radius]
    return BallSpec(sd_graph(Slice.of(members)), centers, radius)


def _max_rank(hs: Iterable[Hyperset]) -> int:
    ranks = [rank(h) for h in closure(hs) if is_well_founded(h)]
    return max(ranks, default=0)


def fresh_tags(src: BallSpec, target: Slice) -> dict[Hyperset, Hyperset]:
    """Tags ``{m}`` with naturals ``m`` above every rank met hereditarily in the
    ball and the target; such tags cannot occur anywhere below either."""
    base = _max_rank(list(src.members) + list(target.members)) + 1
    store = src.members[0].store
    return {d: store.set_of([hf_encode(base + i, store)]) for i, d in enumerate(src.members)}


def tag_violations(tags: Mapping[Hyperset, Hyperset], src: BallSpec, target: Slice) -> list[str]:
    """Conditions H1-H5 on the tags that fail, each with a witness."""
    out = []
    hs = [tags[d] for d in src.members]
    for h in hs:
        if not is_well_founded(h):
            out.append(f"tag {h!r} is not well-founded")
    for h0, h1 in itertools.product(hs, hs):
        if member(h0, h1):
            out.append(f"H1: tag {h0!r} is a member of tag {h1!r}")
    if len(set(hs)) != len(hs):
        out.append("H2: tags are not pairwise distinct")
    level0 = set(target.members)
    level1 = {e for t in level0 for e in t.elements()}
    level2 = {e for t in level1 for e in t.elements()}
    for label, level in (("H3", level0), ("H4", level1), ("H5", level2)):
        hit = sorted((h for h in hs if h in level), key=lambda h: h.node)
        if hit:
            out.append(f"{label}: tag {hit[0]!r} occurs in the target at depth {label[1:]}")
    return out


def graft_ball(
    src: BallSpec,
    tags: Mapping[Hyperset, Hyperset] | None,
    s_targets: Mapping[Hyperset, Iterable[Hyperset]],
    target: Slice,
) -> dict[Hyperset, Hyperset]:
    """Solve ``x_d = {h_d} u {x_e : e in d} u s_targets[d]`` over the ball.

    The image is a fresh copy of the ball (as an L0 structure), with S-edges
    to the target exactly as prescribed and no D-edges to it.  ``tags=None``
    picks tags with :func:`fresh_tags`.
    """
    if len(src.centers) != 1:
        raise PreconditionError("grafting takes a ball around a single center")
    members = src.members
    mset = set(members)
    shared = mset & target.members
    if shared:
        raise PreconditionError(f"ball and target share {len(shared)} sets")
    for d in members:
        if d_neighbors(d) & target.members:
            raise PreconditionError(f"ball member {d!r} has a D-edge into the target")
    unknown = set(s_targets) - mset
    if unknown:
        raise PreconditionError("S-targets are prescribed for sets outside the ball")
    for d, ts in s_targets.items():
        stray = set(ts) - target.members
        if stray:
            raise PreconditionError(f"S-targets of {d!r} lie outside the target slice")
    if tags is None:
        tags = fresh_tags(src, target)
    if set(tags) != mset:
        raise PreconditionError("need exactly one tag per ball member")
    bad = tag_violations(tags, src, target)
    if bad:
        raise PreconditionError("; ".join(bad))

    idx = {d: i for i, d in enumerate(members)}
    tpos = {t: j for j, t in enumerate(target.ordered())}
    eqs: dict[str, set[str]] = {}
    atoms: dict[str, Hyperset] = {}
    for d, i in idx.items():
        rhs = {f"h{i}"} | {f"x{idx[e]}" for e in d.elements() if e in idx}
        rhs |= {f"t{tpos[t]}" for t in s_targets.get(d, ())}
        eqs[f"x{i}"] = rhs
        atoms[f"h{i}"] = tags[d]
    for t, j in tpos.items():
        atoms[f"t{j}"] = t
    sol = solve(FlatSystem.of(eqs, atoms, allow_nonwf_atoms=True), members[0].store)
    return {d: sol[f"x{i}"] for d, i in idx.items()}


def check_graft(
    src: BallSpec,
    image: Mapping[Hyperset, Hyperset],
    s_targets: Mapping[Hyperset, Iterable[Hyperset]],
    target: Slice,
) -> list[str]:
    """Clauses of the grafting guarantee that fail; empty if all hold."""
    failed = []
    members = src.members
    img = [image[d] for d in members]
    if len(set(img)) != len(img):
        failed.append("injectivity")
    if set(img) & target.members:
        failed.append("image meets the target")
    if set(img) & set(members):
        failed.append("image meets the source ball")
    copy = sd_graph(Slice.of(img))
    pos = {h: k for k, h in enumerate(copy.labels)}
    for rel in ("S", "D"):
        mapped = {(pos[image[members[u]]], pos[image[members[v]]]) for u, v in src.structure.relations[rel]}
        if mapped != set(copy.relations[rel]):
            failed.append(f"{rel}-structure of the copy")
    wanted = {(image[d], t) for d, ts in s_targets.items() for t in ts}
    got = {(g, t) for g in img for t in target.members if member(t, g) or member(g, t)}
    if got != wanted:
        failed.append("S-edges to the target")
    if any(d_neighbors(g) & target.members for g in img):
        failed.append("D-edge into the target")
    if d_closure(img).members != frozenset(img):
        failed.append("image is not a union of D-components")
    elif len(components(d_graph(Slice.of(img)))) != len(components(d_graph(Slice.of(members)))):
        failed.append("component count of the copy")
    return failed
