import random

import pytest
from hypothesis import given, settings, strategies as st

from hyperset.errors import LanguageError, PreconditionError, UnboundVariableError
from hyperset.generators import random_digraph, random_formula, random_graph
from hyperset.logic.formulas import phi_n
from hyperset.logic.parser import parse
from hyperset.logic.semantics import Evaluator, evaluate, satisfies_all
from hyperset.logic.syntax import free_vars
from hyperset.reducts import Slice, d_graph
from hyperset.structures import graph, structure

from oracles import naive_eval


def test_figure1_double_membership(fig1):
    g = d_graph(Slice.of([fig1[k] for k in ("a", "b", "0", "1")]))
    asg = {"x": g.index_of(fig1["a"]), "y": g.index_of(fig1["b"])}
    assert evaluate(g, parse("D(x,y)"), asg)


def test_tautology(rng):
    f = parse("forall x. (D(x,x) -> D(x,x))")
    for n in range(4):
        assert evaluate(random_graph(rng, n), f)


def test_phi_two():
    path = graph(3, [(0, 1), (1, 2)])
    assert evaluate(path, phi_n(2), {"x": 1})
    assert not evaluate(path, phi_n(2), {"x": 0})
    looped = graph(3, [(0, 1), (1, 2), (1, 1)])
    assert not evaluate(looped, phi_n(2), {"x": 1})


def test_errors():
    g = graph(2, [(0, 1)])
    with pytest.raises(UnboundVariableError):
        evaluate(g, parse("D(x,y)"), {"x": 0})
    with pytest.raises(LanguageError):
        evaluate(g, parse("E(x,x)"), {"x": 0})
    with pytest.raises(PreconditionError):
        evaluate(g, parse("D(x,x)"), {"x": 5})


def test_empty_domain():
    g = graph(0)
    assert evaluate(g, parse("forall x. false"))
    assert not evaluate(g, parse("exists x. true"))
    assert not evaluate(g, parse("exists x. forall y. true"))


def test_vacuous_quantifier():
    g = graph(2, [(0, 1)])
    assert evaluate(g, parse("exists z. D(x,y)"), {"x": 0, "y": 1})


def test_satisfying_and_satisfies_all():
    g = graph(3, [(0, 1), (1, 2)])
    ev = Evaluator(g)
    assert ev.satisfying(phi_n(1), "x") == [0, 2]
    assert satisfies_all(g, [parse("D(x,y)"), parse("x!=y")], {"x": 0, "y": 1})


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_agrees_with_naive_recursion(seed):
    rng = random.Random(seed)
    lang = rng.choice(["L1", "L0", "LNBG"])
    n = rng.randint(0, 4)
    if lang == "L1":
        m = random_graph(rng, n)
    elif lang == "LNBG":
        m = random_digraph(rng, n)
    else:
        d = [(u, v) for u in range(n) for v in range(u, n) if rng.random() < 0.3]
        s = d + [(u, v) for u in range(n) for v in range(u, n) if rng.random() < 0.3]
        m = structure("L0", n, S=s, D=d)
    f = random_formula(rng, lang, rng.randint(0, 3), free=("x", "y"), size=8)
    if n == 0 and free_vars(f):
        return
    asg = {"x": rng.randrange(n), "y": rng.randrange(n)} if n else {}
    assert evaluate(m, f, asg) == naive_eval(m, f, asg)
