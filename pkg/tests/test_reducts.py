import pytest
from hypothesis import given, settings, strategies as st

from hyperset.errors import CrossStoreError, PreconditionError
from hyperset.generators import random_apg
from hyperset.reducts import (
    Slice,
    d_closure,
    d_graph,
    d_neighbors,
    hereditary_slice,
    is_d_closed,
    region,
    sd_graph,
)
from hyperset.store import Apg, Store, canonicalize, empty
from hyperset.structures import components

import random


def edge_names(g, rel):
    return {frozenset((g.labels[u], g.labels[v])) for u, v in g.relations[rel]}


def test_figure1_left_d_graph(fig1):
    s = Slice.of([fig1[k] for k in ("a", "b", "0", "1")])
    g = d_graph(s)
    assert edge_names(g, "D") == {frozenset({fig1["a"], fig1["b"]})}


def test_figure1_right_d_graph_has_one_loop(fig1):
    g = d_graph(Slice.of([fig1["c"], fig1["0"], fig1["1"]]))
    assert edge_names(g, "D") == {frozenset({fig1["c"]})}


def test_well_founded_slice_has_no_d_edges(fig1):
    assert not d_graph(Slice.of([fig1["0"], fig1["1"]])).relations["D"]


def test_figure1_left_sd_graph(fig1):
    a, b, z, o = (fig1[k] for k in ("a", "b", "0", "1"))
    g = sd_graph(Slice.of([a, b, z, o]))
    assert edge_names(g, "S") == {frozenset(p) for p in ((a, b), (z, a), (z, o), (o, b))}
    assert edge_names(g, "D") == {frozenset((a, b))}


def test_empty_slice():
    g = sd_graph(Slice.of([]))
    assert g.size == 0


def test_quine_atom_slice(store):
    omega = canonicalize(Apg({0: frozenset({0})}, 0), store)
    g = sd_graph(Slice.of([omega]))
    assert g.relations["S"] == g.relations["D"] == {(0, 0)}


def test_regions(fig1):
    s = Slice.of([fig1[k] for k in ("a", "b", "0", "1")])
    assert region(fig1["a"], s).members == {fig1["a"], fig1["b"]}
    assert region(fig1["0"], s).members == {fig1["0"]}
    assert region(fig1["c"], Slice.of([fig1["c"]])).members == {fig1["c"]}
    with pytest.raises(PreconditionError):
        region(fig1["c"], s)


def test_components_of_figure1(fig1):
    s = Slice.of([fig1[k] for k in ("a", "b", "0", "1")])
    g = d_graph(s)
    classes = {frozenset(g.labels[v] for v in c) for c in components(g)}
    assert classes == {frozenset({fig1["a"], fig1["b"]}), frozenset({fig1["0"]}), frozenset({fig1["1"]})}


def test_cross_store_slice_rejected():
    with pytest.raises(CrossStoreError):
        Slice.of([empty(Store()), empty(Store())])


def test_d_neighbours_are_elements(fig1):
    for h in fig1.values():
        assert d_neighbors(h) <= h.elements()


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_reduct_properties(seed):
    rng = random.Random(seed)
    store = Store()
    hs = [canonicalize(random_apg(rng, 6, 0.4), store) for _ in range(3)]
    s = hereditary_slice(hs)
    assert is_d_closed(s)
    sd = sd_graph(s)
    dg = d_graph(s)
    assert sd.relations["D"] <= sd.relations["S"]
    assert dg.relations["D"] == sd.relations["D"]
    assert dg.labels == sd.labels
    comps = components(dg)
    flat = sorted(v for c in comps for v in c)
    assert flat == list(dg.domain)
    for c in comps:
        h = dg.labels[c[0]]
        assert region(h, s).members == {dg.labels[v] for v in c}


def test_d_closure_saturates(fig1):
    closed = d_closure([fig1["a"]])
    assert closed.members == {fig1["a"], fig1["b"]}
    assert is_d_closed(closed)
