"""Finite relational structures over the three languages.

``L1`` has a symmetric binary ``D``; ``L0`` has symmetric ``S`` and ``D`` with
``D`` contained in ``S``; ``LNBG`` has an arbitrary binary ``E``.  Loops are
allowed everywhere.  The domain is ``range(size)``; ``labels`` optionally
records what each element stands for (e.g. a hyperset).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Sequence

import numpy as np

from .errors import LanguageError, ParseError, PreconditionError

LANGUAGES: dict[str, tuple[str, ...]] = {"L1": ("D",), "L0": ("S", "D"), "LNBG": ("E",)}
SYMMETRIC = frozenset({"S", "D"})


@dataclass(frozen=True, eq=False)
class FiniteStructure:
    lang: str
    size: int
    relations: Mapping[str, frozenset[tuple[int, int]]]
    labels: tuple | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.lang not in LANGUAGES:
            raise LanguageError(f"unknown language {self.lang!r}")
        rels = {r: frozenset(self.relations.get(r, ())) for r in LANGUAGES[self.lang]}
        extra = set(self.relations) - set(rels)
        if extra:
            raise LanguageError(f"relations {sorted(extra)} are not in {self.lang}")
        object.__setattr__(self, "relations", rels)
        for r, pairs in rels.items():
            for u, v in pairs:
                if not (0 <= u < self.size and 0 <= v < self.size):
                    raise PreconditionError(f"{r}({u},{v}) mentions a vertex outside 0..{self.size - 1}")
                if r in SYMMETRIC and (v, u) not in pairs:
                    raise PreconditionError(f"{r} is not symmetric: {r}({u},{v}) without {r}({v},{u})")
        if self.lang == "L0" and not rels["D"] <= rels["S"]:
            raise PreconditionError("D is not contained in S")
        if self.labels is not None and len(self.labels) != self.size:
            raise PreconditionError("labels must have one entry per vertex")

    @property
    def domain(self) -> range:
        return range(self.size)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteStructure):
            return NotImplemented
        return (self.lang, self.size, dict(self.relations)) == (other.lang, other.size, dict(other.relations))

    def __hash__(self) -> int:
        return hash((self.lang, self.size, tuple(sorted(self.relations.items()))))

    def __repr__(self) -> str:
        rels = ", ".join(f"{r}={sorted(p)}" for r, p in self.relations.items())
        return f"FiniteStructure({self.lang}, {self.size}, {rels})"

    def holds(self, rel: str, u: int, v: int) -> bool:
        return (u, v) in self.relations[rel]

    @cached_property
    def matrices(self) -> dict[str, np.ndarray]:
        out = {}
        for r, pairs in self.relations.items():
            m = np.zeros((self.size, self.size), dtype=bool)
            for u, v in pairs:
                m[u, v] = True
            out[r] = m
        return out

    def neighbors(self, v: int, rel: str = "D") -> frozenset[int]:
        return frozenset(w for u, w in self.relations[rel] if u == v)

    def index_of(self, label: Hashable) -> int:
        if self.labels is None:
            raise PreconditionError("structure has no labels")
        return self.labels.index(label)

    def edges(self, rel: str) -> list[tuple[int, int]]:
        """Edge list; symmetric relations list each edge once with ``u <= v``."""
        pairs = self.relations[rel]
        if rel in SYMMETRIC:
            pairs = {(min(u, v), max(u, v)) for u, v in pairs}
        return sorted(pairs)

    def restrict(self, vertices: Iterable[int]) -> FiniteStructure:
        """Induced substructure, renumbered in the given order."""
        vs = list(dict.fromkeys(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        rels = {r: frozenset((pos[u], pos[v]) for u, v in p if u in pos and v in pos) for r, p in self.relations.items()}
        labels = tuple(self.labels[v] for v in vs) if self.labels is not None else None
        return FiniteStructure(self.lang, len(vs), rels, labels)

    def permute(self, perm: Sequence[int]) -> FiniteStructure:
        """Copy with vertex ``v`` renamed ``perm[v]``."""
        rels = {r: frozenset((perm[u], perm[v]) for u, v in p) for r, p in self.relations.items()}
        return FiniteStructure(self.lang, self.size, rels)

    def to_L1(self) -> FiniteStructure:
        if self.lang == "L1":
            return self
        if self.lang != "L0":
            raise LanguageError(f"cannot take the D-reduct of a {self.lang} structure")
        return FiniteStructure("L1", self.size, {"D": self.relations["D"]}, self.labels)


def structure(lang: str, size: int, labels: tuple | None = None, **rels: Iterable[tuple[int, int]]) -> FiniteStructure:
    """Build a structure, closing symmetric relations (and ``D`` into ``S``)."""
    out: dict[str, set[tuple[int, int]]] = {}
    for r, pairs in rels.items():
        s = set(pairs)
        if r in SYMMETRIC:
            s |= {(v, u) for u, v in s}
        out[r] = s
    if lang == "L0":
        out.setdefault("S", set()).update(out.get("D", ()))
    return FiniteStructure(lang, size, {r: frozenset(p) for r, p in out.items()}, labels)


def graph(size: int, edges: Iterable[tuple[int, int]] = ()) -> FiniteStructure:
    """An L1 graph; ``(v, v)`` is a loop."""
    return structure("L1", size, D=edges)


def digraph(size: int, edges: Iterable[tuple[int, int]] = ()) -> FiniteStructure:
    return structure("LNBG", size, E=edges)


def disjoint_union(a: FiniteStructure, b: FiniteStructure) -> FiniteStructure:
    if a.lang != b.lang:
        raise LanguageError(f"cannot join {a.lang} with {b.lang}")
    k = a.size
    rels = {r: a.relations[r] | frozenset((u + k, v + k) for u, v in b.relations[r]) for r in a.relations}
    return FiniteStructure(a.lang, a.size + b.size, rels)


# -- connectivity and isomorphism ---------------------------------------


def components(g: FiniteStructure, rel: str | None = None) -> list[list[int]]:
    """Connected components, each sorted, ordered by least element."""
    if rel is None:
        rel = "E" if g.lang == "LNBG" else "D"
    adj: dict[int, set[int]] = {v: set() for v in g.domain}
    for u, v in g.relations[rel]:
        adj[u].add(v)
        adj[v].add(u)
    seen: set[int] = set()
    out = []
    for v in g.domain:
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        for u in comp:
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
        out.append(sorted(comp))
    return out


def _invariants(g: FiniteStructure) -> list[tuple]:
    inv = []
    for v in g.domain:
        row = []
        for r in LANGUAGES[g.lang]:
            m = g.relations[r]
            out_deg = sum(1 for u, w in m if u == v)
            in_deg = sum(1 for u, w in m if w == v)
            row.append(((v, v) in m, out_deg, in_deg))
        inv.append(tuple(row))
    # one round of neighbour refinement
    refined = []
    for v in g.domain:
        around = []
        for r in LANGUAGES[g.lang]:
            around.append(tuple(sorted(inv[w] for u, w in g.relations[r] if u == v)))
        refined.append((inv[v], tuple(around)))
    return refined


def is_isomorphic(g: FiniteStructure, h: FiniteStructure) -> dict[int, int] | None:
    """An isomorphism ``g -> h`` as a vertex map, or ``None``.

    Backtracking over vertices of ``g`` with candidates restricted to
    vertices of ``h`` carrying the same local invariant.
    """
    if g.lang != h.lang:
        raise LanguageError(f"cannot compare {g.lang} with {h.lang}")
    if g.size != h.size or any(len(g.relations[r]) != len(h.relations[r]) for r in g.relations):
        return None
    ig, ih = _invariants(g), _invariants(h)
    if sorted(ig) != sorted(ih):
        return None
    rels = LANGUAGES[g.lang]
    gm = [g.matrices[r] for r in rels]
    hm = [h.matrices[r] for r in rels]
    cands = {v: [w for w in h.domain if ih[w] == ig[v]] for v in g.domain}
    order = sorted(g.domain, key=lambda v: len(cands[v]))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def fits(v: int, w: int) -> bool:
        for a, b in zip(gm, hm):
            if a[v, v] != b[w, w]:
                return False
            for u, x in mapping.items():
                if a[v, u] != b[w, x] or a[u, v] != b[x, w]:
                    return False
        return True

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in cands[v]:
            if w not in used and fits(v, w):
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return dict(sorted(mapping.items())) if extend(0) else None


def graphs_up_to_iso(n: int) -> list[FiniteStructure]:
    """All L1 graphs (loops allowed) on ``n`` vertices, one per isomorphism class."""
    pairs = list(itertools.combinations(range(n), 2))
    perms = list(itertools.permutations(range(n)))
    out = []
    seen: set[frozenset] = set()
    for mask in range(1 << len(pairs)):
        edges = frozenset(p for i, p in enumerate(pairs) if mask >> i & 1)
        if edges in seen:
            continue
        images = set()
        autos = []
        for p in perms:
            img = frozenset((min(p[u], p[v]), max(p[u], p[v])) for u, v in edges)
            images.add(img)
            if img == edges:
                autos.append(p)
        seen |= images
        loop_seen: set[frozenset] = set()
        for lmask in range(1 << n):
            loops = frozenset(v for v in range(n) if lmask >> v & 1)
            if loops in loop_seen:
                continue
            loop_seen |= {frozenset(p[v] for v in loops) for p in autos}
            out.append(graph(n, list(edges) + [(v, v) for v in sorted(loops)]))
    return out


# -- text formats --------------------------------------------------------


def format_structure(g: FiniteStructure) -> str:
    lines = [f"lang {g.lang}", f"vertices {g.size}"]
    for r in LANGUAGES[g.lang]:
        lines.extend(f"{r} {u} {v}" for u, v in g.edges(r))
    return "\n".join(lines) + "\n"


def parse_structure(text: str) -> FiniteStructure:
    lang = None
    size = None
    rels: dict[str, list[tuple[int, int]]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        parts = line.split()
        head = parts[0]
        if head == "lang" and len(parts) == 2:
            lang = parts[1]
            if lang not in LANGUAGES:
                raise ParseError(f"unknown language {lang!r}", lineno)
        elif head == "vertices" and len(parts) == 2:
            try:
                size = int(parts[1])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[1]!r}", lineno) from None
        elif head in ("D", "S", "E") and len(parts) == 3:
            if lang is None or size is None:
                raise ParseError("edges must follow the lang and vertices headers", lineno)
            if head not in LANGUAGES[lang]:
                raise ParseError(f"relation {head} is not in {lang}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"bad edge {line!r}", lineno) from None
            if not (0 <= u < size and 0 <= v < size):
                raise ParseError(f"edge {u} {v} outside 0..{size - 1}", lineno)
            rels.setdefault(head, []).append((u, v))
        else:
            raise ParseError(f"cannot read {line!r}", lineno)
    if lang is None or size is None:
        raise ParseError("missing lang or vertices header")
    if lang == "L0":
        missing = {(min(u, v), max(u, v)) for u, v in rels.get("D", [])} - {
            (min(u, v), max(u, v)) for u, v in rels.get("S", [])
        }
        if missing:
            raise ParseError(f"D edges without S edges: {sorted(missing)}")
    return structure(lang, size, **rels)


def to_dot(g: FiniteStructure, names: Sequence[str] | None = None) -> str:
    directed = g.lang == "LNBG"
    arrow = "->" if directed else "--"
    lines = [f"{'digraph' if directed else 'graph'} {g.lang} {{"]
    for v in g.domain:
        label = f' [label="{names[v]}"]' if names is not None else ""
        lines.append(f"  {v}{label};")
    if g.lang == "L0":
        d = set(g.edges("D"))
        for u, v in g.edges("S"):
            style = "bold" if (u, v) in d else "dashed"
            lines.append(f"  {u} {arrow} {v} [style={style}];")
    else:
        rel = LANGUAGES[g.lang][0]
        for u, v in g.edges(rel):
            lines.append(f"  {u} {arrow} {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
