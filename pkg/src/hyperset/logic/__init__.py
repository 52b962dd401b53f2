"""First-order logic over the D, S/D and E languages."""
from .ef import ef_equiv
from .formulas import SYMMETRY, PhiClass, beta_fragment, flower_neighbor, mu, phi_n, relativize
from .interpret import interpret_digraph, translate
from .parser import parse, pretty
from .semantics import Evaluator, evaluate
from .syntax import Formula, free_vars, quantifier_rank

__all__ = [
    "SYMMETRY",
    "Evaluator",
    "Formula",
    "PhiClass",
    "beta_fragment",
    "ef_equiv",
    "evaluate",
    "flower_neighbor",
    "free_vars",
    "interpret_digraph",
    "mu",
    "parse",
    "phi_n",
    "pretty",
    "quantifier_rank",
    "relativize",
    "translate",
]
