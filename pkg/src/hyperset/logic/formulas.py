"""Named formulas: flowers, bouquet fragments, the symmetry axiom, and the
neighbourhood transform ``mu``."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..errors import PreconditionError
from ..structures import digraph
from .semantics import Evaluator
from .syntax import (
    And,
    D,
    Eq,
    Exists,
    Forall,
    Formula,
    Implies,
    Not,
    conj,
    conjuncts,
    disj,
    exists,
    fresh,
    is_sentence,
    neq,
    rename_relations,
    transform,
    variables,
)

SYMMETRY: Formula = Forall("x", Forall("y", Implies(D("x", "y"), D("y", "x"))))


def phi_n(n: int, var: str = "x") -> Formula:
    """``var`` has no D-loop and exactly ``n`` D-neighbours."""
    if n < 1:
        raise PreconditionError("phi_n needs n >= 1")
    prefix = "z" if not var.startswith("z") else "w"
    zs = [f"{prefix}{i}" for i in range(n)]
    z = prefix
    distinct = [neq(zs[i], zs[j]) for i, j in itertools.combinations(range(n), 2)]
    adjacent = [D(zi, var) for zi in zs]
    only = Forall(z, Implies(D(z, var), disj(Eq(z, zi) for zi in zs)))
    return And(Not(D(var, var)), exists(zs, conj(distinct + adjacent + [only])))


def flower_neighbor(n: int, var: str = "y") -> Formula:
    """``var`` is D-adjacent to some ``n``-flower."""
    xn = f"x{n}" if var != f"x{n}" else f"u{n}"
    return Exists(xn, And(phi_n(n, xn), D(var, xn)))


def beta_fragment(a0, a1, var: str = "y") -> list[Formula]:
    """Finite piece of the bouquet type: adjacent to an n-flower for each n in
    ``a0``, to none for n in ``a1``, and no loop."""
    a0, a1 = set(a0), set(a1)
    if a0 & a1:
        raise PreconditionError(f"A0 and A1 overlap in {sorted(a0 & a1)}")
    if any(n < 1 for n in a0 | a1):
        raise PreconditionError("bouquet indices are positive naturals")
    out: list[Formula] = [Not(D(var, var))]
    out += [flower_neighbor(n, var) for n in sorted(a0)]
    out += [Not(flower_neighbor(n, var)) for n in sorted(a1)]
    return out


@dataclass(frozen=True)
class PhiClass:
    """A sentence known to imply symmetry of D, with the evidence for it.

    ``SYNTACTIC``: the symmetry axiom is one of the top-level conjuncts.
    ``CHECKED``: the implication was verified on every binary relation with
    at most ``bound`` points.
    """

    formula: Formula
    evidence: str
    bound: int | None = None

    def __post_init__(self) -> None:
        if not is_sentence(self.formula):
            raise PreconditionError("members of Phi are sentences")
        if self.evidence == "SYNTACTIC":
            if SYMMETRY not in conjuncts(self.formula):
                raise PreconditionError("SYNTACTIC evidence needs the symmetry axiom as a conjunct")
        elif self.evidence != "CHECKED":
            raise PreconditionError(f"unknown evidence {self.evidence!r}")

    @classmethod
    def syntactic(cls, phi: Formula) -> PhiClass:
        if SYMMETRY in conjuncts(phi):
            return cls(phi, "SYNTACTIC")
        return cls(And(phi, SYMMETRY), "SYNTACTIC")

    @classmethod
    def checked(cls, phi: Formula, bound: int = 3) -> PhiClass:
        counter = implies_symmetry_counterexample(phi, bound)
        if counter is not None:
            raise PreconditionError(f"sentence holds on a non-symmetric relation: E = {sorted(counter.relations['E'])}")
        return cls(phi, "CHECKED", bound)


def implies_symmetry_counterexample(phi: Formula, bound: int):
    """A relation of size <= ``bound`` where ``phi`` holds but D is not
    symmetric, or ``None``.  D is read as an arbitrary binary relation."""
    if not is_sentence(phi):
        raise PreconditionError("expected a sentence")
    psi = rename_relations(phi, {"D": "E"})
    for n in range(1, bound + 1):
        pairs = [(u, v) for u in range(n) for v in range(n)]
        for mask in range(1 << len(pairs)):
            edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
            es = set(edges)
            if all((v, u) in es for u, v in es):
                continue
            g = digraph(n, edges)
            if Evaluator(g).holds(psi):
                return g
    return None


def relativize(f: Formula, x: str) -> Formula:
    """Bound every quantifier to the D-neighbours of ``x``."""

    def step(g: Formula):
        if isinstance(g, Exists):
            return Exists(g.var, And(D(x, g.var), g.body))
        if isinstance(g, Forall):
            return Forall(g.var, Implies(D(x, g.var), g.body))
        return None

    return transform(f, step)


def mu(phi: PhiClass | Formula, x: str | None = None) -> Formula:
    """Some loop-free point has a D-neighbourhood satisfying ``phi``."""
    f = phi.formula if isinstance(phi, PhiClass) else phi
    if not is_sentence(f):
        raise PreconditionError("mu is defined on sentences")
    if x is None:
        used = variables(f)
        x = "x" if "x" not in used else next(fresh(used, "x"))
    elif x in variables(f):
        raise PreconditionError(f"variable {x!r} occurs in the sentence")
    return Exists(x, And(Not(D(x, x)), relativize(f, x)))

