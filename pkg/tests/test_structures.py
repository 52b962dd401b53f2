import random

import pytest
from hypothesis import given, settings, strategies as st

from hyperset.errors import LanguageError, ParseError, PreconditionError
from hyperset.generators import random_graph, random_permutation
from hyperset.structures import (
    FiniteStructure,
    components,
    digraph,
    disjoint_union,
    format_structure,
    graph,
    graphs_up_to_iso,
    is_isomorphic,
    parse_structure,
    structure,
    to_dot,
)

from oracles import brute_isomorphic, union_find_components


def test_invariants_enforced():
    with pytest.raises(PreconditionError):
        FiniteStructure("L1", 2, {"D": frozenset({(0, 1)})})
    with pytest.raises(PreconditionError):
        FiniteStructure("L0", 2, {"S": frozenset(), "D": frozenset({(0, 0)})})
    with pytest.raises(PreconditionError):
        graph(2, [(0, 5)])
    with pytest.raises(LanguageError):
        FiniteStructure("L2", 1, {})


def test_builder_closes_d_into_s():
    g = structure("L0", 2, D=[(0, 1)])
    assert g.relations["S"] == {(0, 1), (1, 0)}


def test_isomorphism_examples(rng):
    g = random_graph(rng, 6)
    assert is_isomorphic(g, g) is not None
    p3 = graph(3, [(0, 1), (1, 2)])
    k3 = graph(3, [(0, 1), (1, 2), (0, 2)])
    assert is_isomorphic(p3, k3) is None
    h = random_permutation(rng, g)
    m = is_isomorphic(g, h)
    assert m is not None
    assert {(m[u], m[v]) for u, v in g.relations["D"]} == h.relations["D"]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_isomorphism_agrees_with_permutation_search(seed):
    rng = random.Random(seed)
    n = rng.randint(0, 5)
    g, h = random_graph(rng, n), random_graph(rng, n)
    assert (is_isomorphic(g, h) is not None) == brute_isomorphic(g, h)


def test_isomorphism_needs_one_language():
    with pytest.raises(LanguageError):
        is_isomorphic(graph(1), digraph(1))


def test_graph_census():
    # loop-allowed graphs up to isomorphism (OEIS A000666)
    assert [len(graphs_up_to_iso(n)) for n in range(1, 6)] == [2, 6, 20, 90, 544]


def test_census_classes_are_distinct():
    gs = graphs_up_to_iso(4)
    for i, g in enumerate(gs):
        for h in gs[i + 1:]:
            assert is_isomorphic(g, h) is None


def test_components_examples(rng):
    two = graph(4, [(0, 1), (2, 3)])
    assert components(two) == [[0, 1], [2, 3]]
    assert components(graph(3)) == [[0], [1], [2]]
    for _ in range(30):
        g = random_graph(rng, rng.randint(0, 8), 0.25)
        assert {frozenset(c) for c in components(g)} == union_find_components(g)


def test_disjoint_union():
    u = disjoint_union(graph(2, [(0, 1)]), graph(1, [(0, 0)]))
    assert u.relations["D"] == {(0, 1), (1, 0), (2, 2)}


def test_text_round_trip(rng):
    for lang, g in [("L1", random_graph(rng, 5)), ("LNBG", digraph(3, [(0, 1), (2, 2)])),
                    ("L0", structure("L0", 3, S=[(0, 1), (1, 2)], D=[(0, 1)]))]:
        assert parse_structure(format_structure(g)) == g


@pytest.mark.parametrize("text", [
    "vertices 2\n",
    "lang L1\nD 0 1\n",
    "lang L1\nvertices 2\nD 0 2\n",
    "lang L1\nvertices 2\nE 0 1\n",
    "lang L0\nvertices 2\nD 0 1\n",
    "lang Q\nvertices 1\n",
])
def test_structure_parse_errors(text):
    with pytest.raises(ParseError):
        parse_structure(text)


def test_dot_output():
    text = to_dot(structure("L0", 2, S=[(0, 1)]))
    assert text.startswith("graph L0 {") and "0 -- 1 [style=dashed]" in text
    assert "->" in to_dot(digraph(2, [(0, 1)]))
