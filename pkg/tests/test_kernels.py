import random
from array import array

import pytest

from divgraph import kernels
from divgraph.graph import _search_order

from conftest import random_graph

BACKENDS = kernels.backends()


def test_fallback_always_available():
    assert "python" in BACKENDS
    assert kernels.BACKEND in BACKENDS


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled kernels not built")
@pytest.mark.parametrize("seed", range(5))
def test_backends_agree(seed):
    rng = random.Random(seed)
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    for _ in range(50):
        g = random_graph(rng, max_n=10, p=rng.random())
        n = len(g)
        indptr, indices = g.csr()
        dist = py.distance_matrix(n, indptr, indices)
        assert list(dist) == list(cy.distance_matrix(n, indptr, indices))
        assert list(py.component_labels(n, indptr, indices)) == list(cy.component_labels(n, indptr, indices))
        assert py.shortest_cycle(n, indptr, indices) == cy.shortest_cycle(n, indptr, indices)
        for start, step in ((5, 1), (6, 2), (3, 1)):
            assert py.shortest_cycle_at_least(n, indptr, indices, dist, start, step) == \
                cy.shortest_cycle_at_least(n, indptr, indices, dist, start, step)
        pattern = random_graph(rng, max_n=5, p=0.5)
        pn = len(pattern)
        if pn > n:
            continue
        order = array("i", _search_order(pattern))
        dom = bytes([1]) * (pn * n)
        for induced in (False, True):
            args = (pn, pattern.adjacency_bytes(), order, n, g.adjacency_bytes(), dom, induced)
            assert py.find_embedding(*args) == cy.find_embedding(*args)


def test_empty_inputs():
    for impl in BACKENDS.values():
        e = array("i", [0])
        assert list(impl.distance_matrix(0, e, array("i"))) == []
        assert impl.shortest_cycle(0, e, array("i")) == 0
        assert impl.find_embedding(0, b"", array("i"), 0, b"", b"", False) == []
