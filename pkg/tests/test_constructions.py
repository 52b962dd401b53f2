import random

import pytest
from hypothesis import given, settings, strategies as st

from hyperset.constructions import (
    BallSpec,
    PermutedMembership,
    apex_augment,
    ball,
    bouquet,
    bouquet_graph,
    check_embedding,
    check_graft,
    copies,
    embed_graph,
    flower,
    fresh_tags,
    graft_ball,
    rieger,
    rieger_check,
    rieger_slice,
)
from hyperset.errors import PreconditionError
from hyperset.flat import parse_flat_system, solve
from hyperset.generators import random_graft_instance, random_graph
from hyperset.reducts import Slice, d_closure, d_graph, d_neighbors, sd_graph
from hyperset.store import Store, elements, hf_encode, member, rank, set_of
from hyperset.structures import components, graph, graphs_up_to_iso, is_isomorphic
from hyperset.logic.formulas import beta_fragment, flower_neighbor, phi_n
from hyperset.logic.semantics import Evaluator


def holds_at(h, f, var):
    g = d_graph(d_closure([h]))
    return Evaluator(g).holds(f, {var: g.index_of(h)})


# -- embeddings --------------------------------------------------------------


def test_single_looped_vertex(store):
    s = embed_graph(graph(1, [(0, 0)]), store)
    x = s[0]
    assert elements(x) == {hf_encode(0, store), x}
    assert d_graph(Slice.of([x])).relations["D"] == {(0, 0)}


def test_k2_and_injectivity_witness(store):
    s = embed_graph(graph(2, [(0, 1)]), store)
    assert member(s[0], s[1]) and member(s[1], s[0])
    assert not member(s[0], s[0])
    for i in (0, 1):
        j = 1 - i
        assert hf_encode(i, store) in elements(s[i])
        assert hf_encode(i, store) not in elements(s[j])
    assert check_embedding(graph(2, [(0, 1)]), s) == []


def test_p3_is_one_component(store):
    p3 = graph(3, [(0, 1), (1, 2)])
    s = embed_graph(p3, store)
    dg = d_graph(Slice.of(s.values()))
    assert len(components(dg)) == 1
    assert is_isomorphic(dg, p3) is not None


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_embedding_exhaustive(n):
    store = Store()
    for g in graphs_up_to_iso(n):
        assert check_embedding(g, embed_graph(g, store)) == []


def test_copies_give_isomorphic_components(store):
    c = graph(3, [(0, 1), (1, 2), (2, 2)])
    for k in range(1, 5):
        s = embed_graph(copies(c, k), store)
        dg = d_graph(Slice.of(s.values()))
        comps = components(dg)
        assert len(comps) == k
        assert all(is_isomorphic(dg.restrict(cp), c) is not None for cp in comps)


def test_apex_augment():
    g = apex_augment(graph(2, [(0, 1)]))
    assert g.size == 3 and g.neighbors(2) == {0, 1} and (2, 2) not in g.relations["D"]


# -- flowers and bouquets ------------------------------------------------------


def test_flower_five(store):
    a = flower(5, store)
    assert len(elements(a)) == 5
    assert all(elements(p) >= {a} for p in elements(a))
    assert holds_at(a, phi_n(5), "x")
    assert not holds_at(a, phi_n(3), "x")


def test_flower_one(store):
    a = flower(1, store)
    (p,) = elements(a)
    assert elements(p) == {a, hf_encode(0, store)}
    assert d_neighbors(a) == {p}


def test_flower_zero_rejected(store):
    with pytest.raises(PreconditionError):
        flower(0, store)


def test_empty_bouquet_is_isolated(store):
    b = bouquet([], store)
    assert not d_neighbors(b)


def test_bouquet_one_two(store):
    b = bouquet({1, 2}, store)
    nbrs = d_neighbors(b)
    assert len(nbrs) == 2 and b not in nbrs
    sizes = sorted(len(d_neighbors(f)) for f in nbrs)
    assert sizes == [1, 2]
    assert all(holds_at(b, f, "y") for f in beta_fragment({1, 2}, {3}))


def test_bouquet_three(store):
    b = bouquet({3}, store)
    assert holds_at(b, flower_neighbor(3), "y")
    assert not holds_at(b, flower_neighbor(2), "y")


def test_bouquet_graph_degrees():
    g = bouquet_graph({2, 4})
    assert g.neighbors(0) == {1, 3}
    assert len(g.neighbors(3)) == 4


# -- Rieger -------------------------------------------------------------------


def test_rieger_k2(store):
    g = graph(2, [(0, 1)])
    pm, a = rieger(g, store)
    assert pm.double_member_N(a[0], a[1])
    assert not pm.double_member_N(a[0], a[0])
    report = rieger_check(g, pm, a, rieger_slice(pm))
    assert report.ok
    assert all(seen > 0 for seen, _ in report.cases.values())


def test_rieger_ranks(store):
    g = graph(3, [(0, 1), (1, 2)])
    pm, a = rieger(g, store)
    assert {rank(x) for x in a} == {4}
    assert {rank(pm.pi(x)) for x in a} == {5}


def test_rieger_loop(store):
    g = graph(2, [(0, 1), (1, 1)])
    pm, a = rieger(g, store)
    assert pm.double_member_N(a[1], a[1])
    assert not pm.double_member_N(a[0], a[0])


def test_rieger_preconditions(store):
    with pytest.raises(PreconditionError):
        rieger(graph(3, [(0, 1)]), store)
    with pytest.raises(PreconditionError):
        rieger(graph(1, [(0, 0)]), store)


def test_permutation_fixes_untouched_sets(store):
    pm, _ = rieger(graph(2, [(0, 1)]), store)
    h = set_of(hf_encode(0, store), hf_encode(1, store), store=store)
    assert pm.pi(h) == h
    assert pm.elements_N(h) == elements(h)
    for x in pm.support:
        assert pm.pi(pm.pi(x)) == x


def test_permuted_membership_needs_distinct_sets(store):
    z = hf_encode(0, store)
    with pytest.raises(PreconditionError):
        PermutedMembership(((z, z),))


def test_rieger_with_random_probes(store):
    g = graph(3, [(0, 1), (1, 2), (2, 2)])
    pm, a = rieger(g, store)
    report = rieger_check(g, pm, a, rieger_slice(pm, 40, random.Random(3)))
    assert report.ok


# -- balls and grafting --------------------------------------------------------


def _pair_and_target(store):
    sol = solve(parse_flat_system("x = { y, #0 }\ny = { x, #1 }\nl = { #9 }", store), store)
    return sol


def test_single_vertex_graft(store):
    sol = _pair_and_target(store)
    d = set_of(hf_encode(4, store), store=store)  # isolated, well-founded
    src = ball(d, 0, Slice.of([d]))
    target = Slice.of([sol["l"]])
    image = graft_ball(src, None, {d: [sol["l"]]}, target)
    b = image[d]
    tags = fresh_tags(src, target)
    assert elements(b) == {tags[d], sol["l"]}
    assert member(sol["l"], b) and not member(b, sol["l"])
    assert check_graft(src, image, {d: [sol["l"]]}, target) == []


def test_pair_graft(store):
    sol = _pair_and_target(store)
    src = ball(sol["x"], 1, d_closure([sol["x"]]))
    assert set(src.members) == {sol["x"], sol["y"]}
    target = Slice.of([sol["l"]])
    image = graft_ball(src, None, {}, target)
    x2, y2 = image[sol["x"]], image[sol["y"]]
    assert x2 != sol["x"] and member(x2, y2) and member(y2, x2)
    dg = d_graph(d_closure([x2]))
    assert components(dg) == [[0, 1]]


def test_tag_recovery(store):
    sol = _pair_and_target(store)
    src = ball(sol["x"], 1, d_closure([sol["x"]]))
    target = Slice.of([sol["l"]])
    tags = fresh_tags(src, target)
    image = graft_ball(src, tags, {}, target)
    for d in src.members:
        for e in src.members:
            assert (tags[d] in elements(image[e])) == (d == e)


def test_bad_tags_rejected(store):
    sol = _pair_and_target(store)
    src = ball(sol["x"], 1, d_closure([sol["x"]]))
    target = Slice.of([sol["l"]])
    nine = hf_encode(9, store)
    same = {d: set_of(hf_encode(20, store), store=store) for d in src.members}
    with pytest.raises(PreconditionError, match="H2"):
        graft_ball(src, same, {}, target)
    nested = dict(zip(src.members, [hf_encode(20, store), hf_encode(21, store)]))
    with pytest.raises(PreconditionError, match="H1"):
        graft_ball(src, nested, {}, target)
    inside = dict(zip(src.members, [nine, set_of(hf_encode(30, store), store=store)]))
    with pytest.raises(PreconditionError, match="H4"):
        graft_ball(src, inside, {}, target)
    deeper = dict(zip(src.members, [hf_encode(8, store), set_of(hf_encode(30, store), store=store)]))
    with pytest.raises(PreconditionError, match="H5"):
        graft_ball(src, deeper, {}, target)
    top = dict(zip(src.members, [sol["l"], set_of(hf_encode(30, store), store=store)]))
    with pytest.raises(PreconditionError, match="H3"):
        graft_ball(src, top, {}, target)


def test_graft_rejects_overlap(store):
    sol = _pair_and_target(store)
    src = ball(sol["x"], 1, d_closure([sol["x"]]))
    with pytest.raises(PreconditionError):
        graft_ball(src, None, {}, Slice.of([sol["y"]]))


def test_ball_radius(store):
    s = embed_graph(graph(4, [(0, 1), (1, 2), (2, 3)]), store)
    within = Slice.of(s.values())
    assert set(ball(s[0], 0, within).members) == {s[0]}
    assert set(ball(s[0], 2, within).members) == {s[0], s[1], s[2]}
    with pytest.raises(PreconditionError):
        BallSpec(sd_graph(within), (s[0],), 1)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_random_grafts(seed):
    rng = random.Random(seed)
    store = Store()
    src, s_targets, target = random_graft_instance(rng, store)
    image = graft_ball(src, None, s_targets, target)
    assert check_graft(src, image, s_targets, target) == []
    assert not set(image.values()) & target.members
