import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divgraph.divisor import build_B, build_delta, build_gamma, make_integer_set, number_label, prime_label
from divgraph.graph import complete_graph, cycle_graph, isomorphic, path_graph
from divgraph.realize import BipartitionedGraph, IsolatedVertex, dualize, realize
from divgraph.verify import random_bipartitioned


def bp(part1, part2, edges):
    return BipartitionedGraph.from_edges(part1, part2, edges)


def assert_edge_identical(g, res):
    vmap = res.vertex_map()
    B = build_B(res.x).graph
    assert {frozenset((vmap[a], vmap[b])) for a, b in g.edges} == B.edge_set()
    assert set(vmap.values()) == set(B.vertices)


def test_path_example():
    g = bp(["v1", "v2"], ["u1"], [("v1", "u1"), ("v2", "u1")])
    res = realize(g)
    assert res.x.elements == (6,)
    assert res.prime_of == {"v1": 2, "v2": 3}
    assert_edge_identical(g, res)


def test_k22_example():
    g = bp(["v1", "v2"], ["u1", "u2"], [(v, u) for v in ("v1", "v2") for u in ("u1", "u2")])
    res = realize(g)
    assert res.x.elements == (6, 36)
    assert res.number_of == {"u1": 6, "u2": 36}
    assert isomorphic(build_B(res.x).graph, cycle_graph(4))


def test_star_example():
    g = bp(["v1", "v2", "v3"], ["u1"], [(v, "u1") for v in ("v1", "v2", "v3")])
    assert realize(g).x.elements == (30,)


def test_identical_neighbourhoods_still_distinct():
    g = bp(["a"], ["b", "c", "d"], [("a", "b"), ("a", "c"), ("a", "d")])
    assert realize(g).x.elements == (2, 4, 8)


def test_isolated_vertex_raises():
    g = bp(["v1"], ["u1", "u2"], [("v1", "u1")])
    with pytest.raises(IsolatedVertex) as exc:
        realize(g)
    assert exc.value.vertex == "u2"
    assert "u2" in str(exc.value)


def test_bipartition_validation():
    with pytest.raises(ValueError):
        BipartitionedGraph((), ("u",), frozenset())
    with pytest.raises(ValueError):
        BipartitionedGraph(("a",), ("a",), frozenset())
    with pytest.raises(ValueError):
        BipartitionedGraph(("a", "b"), ("u",), frozenset({("a", "b")}))


def test_dualize_example_path():
    x = make_integer_set([2, 3, 6])
    res = dualize(x)
    assert res.x.elements == (10, 225)
    assert res.prime_of == {number_label(2): 2, number_label(3): 3, number_label(6): 5}
    assert res.number_of == {prime_label(2): 10, prime_label(3): 225}
    y = res.x
    assert isomorphic(build_gamma(y), build_delta(x))
    assert isomorphic(build_delta(y), build_gamma(x))


def test_dualize_c4_is_self_dual():
    res = dualize(make_integer_set([143, 1573]))
    assert res.x.elements == (6, 36)
    assert isomorphic(build_B(res.x).graph, cycle_graph(4))
    assert build_delta(res.x).number_of_edges() == build_gamma(res.x).number_of_edges() == 1


def test_dualize_star():
    x = make_integer_set([105])
    y = dualize(x).x
    assert y.elements == (2, 4, 8)
    assert isomorphic(build_gamma(y), complete_graph(3))
    assert isomorphic(build_gamma(y), build_delta(x))


def test_dualize_maps_are_isomorphisms():
    x = make_integer_set([6, 10, 14, 105, 11])
    res = dualize(x)
    vmap = res.vertex_map()
    By = build_B(res.x).graph
    Bx = build_B(x).graph
    assert Bx.relabel(vmap) == By
    assert build_delta(x).relabel(vmap) == build_gamma(res.x)
    assert build_gamma(x).relabel(vmap) == build_delta(res.x)


@given(st.integers(0, 2**32))
@settings(max_examples=200, deadline=None)
def test_roundtrip_is_edge_identical(seed):
    g = random_bipartitioned(random.Random(seed), max_part=8, allow_isolated=False)
    res = realize(g)
    assert_edge_identical(g, res)
    assert len(res.x.xstar) == len(g.part2)
    assert set(res.x.rho) == set(res.prime_of.values())


@given(st.lists(st.integers(2, 500), min_size=1, max_size=6))
@settings(max_examples=100, deadline=None)
def test_dualize_twice_restores_B(raw):
    x = make_integer_set(raw)
    twice = dualize(dualize(x).x).x
    assert isomorphic(build_B(twice).graph, build_B(x).graph)
