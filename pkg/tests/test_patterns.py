from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divgraph.divisor import build_B, make_integer_set, number_label, prime_label
from divgraph.graph import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    find_subgraph,
    is_embedding,
    isomorphic,
    path_graph,
)
from divgraph.patterns import (
    K4_PATTERNS,
    PATTERN_NAMES,
    catalog,
    check_inc_condition,
    diagnose_k4,
    diagnose_triangles,
    incidence_graph,
    inc_pattern,
    line_graph,
    max_matching,
)

smooth = st.lists(
    st.builds(lambda e: 2 ** e[0] * 3 ** e[1] * 5 ** e[2] * 7 ** e[3] * 11 ** e[4] * 13 ** e[5],
              st.tuples(*[st.integers(0, 1)] * 6)),
    min_size=1, max_size=7,
).filter(lambda xs: set(xs) != {1})


def part_degrees(g):
    out = {}
    for v in g.vertices:
        out.setdefault(v[0], []).append(g.degree(v))
    return sorted(tuple(sorted(d, reverse=True)) for d in out.values())


def test_incidence_graph_examples():
    assert isomorphic(incidence_graph(complete_graph(2)), path_graph(3))
    assert isomorphic(incidence_graph(complete_graph(3)), cycle_graph(6))
    inc4 = incidence_graph(complete_graph(4))
    assert len(inc4) == 10 and inc4.number_of_edges() == 12
    assert Counter(inc4.degrees()) == {3: 4, 2: 6}


def test_line_graph_examples():
    assert isomorphic(line_graph(path_graph(3)), complete_graph(2))
    assert isomorphic(line_graph(complete_bipartite([0], [1, 2, 3])), complete_graph(3))
    lk4 = line_graph(complete_graph(4))
    assert len(lk4) == 6 and set(lk4.degrees()) == {4}


def test_catalog_shapes():
    k = catalog("ScriptK")
    assert len(k) == 7 and k.number_of_edges() == 8
    assert part_degrees(k) == [(2, 2, 2, 2), (3, 3, 2)]
    g = catalog("ScriptG")
    assert len(g) == 8 and g.number_of_edges() == 9
    assert part_degrees(g) == [(3, 2, 2, 2), (3, 2, 2, 2)]
    for name in PATTERN_NAMES:
        assert len(catalog(name)) > 0
    with pytest.raises(KeyError):
        catalog("K5")


@pytest.mark.parametrize("xs,name", [
    ([6, 12, 10, 15], "ScriptK"),
    ([6, 10, 14, 105], "ScriptG"),
    ([30, 14, 105], "ScriptK"),
])
def test_catalog_matches_table_sets(xs, name):
    assert isomorphic(build_B(make_integer_set(xs)).graph, catalog(name))


def test_triangle_examples():
    d = diagnose_triangles(make_integer_set([2, 4, 8]))
    assert d.has_triangle_gamma and not d.has_triangle_delta
    assert d.witness_kind == "InducedK13" and d.witness.mapping["center"] == prime_label(2)

    d = diagnose_triangles(make_integer_set([6, 10, 15]))
    assert d.has_triangle_delta and d.has_triangle_gamma and d.witness_kind == "InducedC6"

    d = diagnose_triangles(make_integer_set([2, 10]))
    assert not d.has_triangle_delta and not d.has_triangle_gamma
    assert d.witness is None and d.witness_kind is None


def test_max_matching():
    assert len(max_matching([[2], [2], [2]])) == 1
    assert len(max_matching([[1, 2], [1], [2, 3]])) == 3
    m = max_matching([["a", "b"], ["a"]])
    assert m == {0: "b", 1: "a"}


def test_inc_condition_examples():
    c = check_inc_condition(make_integer_set([6, 10, 14, 15, 21, 35]), 4)
    assert c.via == "delta" and c.clique == (2, 3, 5, 7)
    assert sorted(c.representatives.values()) == [6, 10, 14, 15, 21, 35]

    c = check_inc_condition(make_integer_set([2, 4, 8]), 3)
    assert not c.holds

    c = check_inc_condition(make_integer_set([30, 154, 273, 715]), 4)
    assert c.via == "gamma" and sorted(c.representatives.values()) == [2, 3, 5, 7, 11, 13]


def test_k4_examples():
    d = diagnose_k4(make_integer_set([2, 4, 8, 16]))
    assert d.gamma_k4 == {number_label(v) for v in (2, 4, 8, 16)} and "K14right" in d.patterns
    d = diagnose_k4(make_integer_set([210]))
    assert d.delta_k4 == {prime_label(p) for p in (2, 3, 5, 7)} and "K41right" in d.patterns
    d = diagnose_k4(make_integer_set([6, 10, 14, 105]))
    assert d.delta_k4 and d.gamma_k4 and "ScriptG" in d.patterns
    d = diagnose_k4(make_integer_set([2, 10]))
    assert d.delta_k4 is None and d.gamma_k4 is None and d.patterns == {}


def test_oriented_stars_respect_sides():
    # {210}: one number, four primes, so K41right fits and K14right does not.
    d = diagnose_k4(make_integer_set([210]))
    assert "K14right" not in d.patterns
    emb = d.patterns["K41right"]
    assert all(host[0] == pat[0] for pat, host in emb.mapping.items())


def test_generator_sanity():
    assert isomorphic(incidence_graph(complete_graph(3)), cycle_graph(6))
    assert isomorphic(line_graph(complete_bipartite([0], [1, 2, 3])), complete_graph(3))


@given(smooth)
@settings(max_examples=150, deadline=None)
def test_theorem_properties_on_smooth_sets(raw):
    x = make_integer_set(raw)
    b = build_B(x).graph
    t = diagnose_triangles(x)
    assert t.consistent
    if t.witness_kind == "InducedK13":
        assert b.degree(t.witness.mapping["center"]) >= 3
    elif t.witness_kind is None:
        assert max(b.degrees()) <= 2
    for ell in (3, 4):
        assert check_inc_condition(x, ell).holds == (find_subgraph(b, inc_pattern(ell)) is not None)
    k4 = diagnose_k4(x)
    assert k4.violations() == []
    for name, emb in k4.patterns.items():
        assert is_embedding(b, catalog(name), emb)
