import numpy as np
import pytest
from hypothesis import given

from tokenspectra.errors import ValidationError
from tokenspectra.graphs import (
    Graph, cartesian_product, complement, complete, complete_multipartite, cycle,
    disjoint_cliques, erdos_renyi, family, laplacian, path,
)

from conftest import graphs


def test_laplacian_examples():
    assert laplacian(path(3)).tolist() == [[1, -1, 0], [-1, 2, -1], [0, -1, 1]]
    assert np.array_equal(laplacian(complete(4)), 4 * np.eye(4, dtype=int) - np.ones((4, 4), dtype=int))
    assert not laplacian(Graph(5)).any()


def test_graph_validation():
    with pytest.raises(ValidationError):
        Graph(3, frozenset({(1, 1)}))
    with pytest.raises(ValidationError):
        Graph(3, frozenset({(1, 4)}))
    with pytest.raises(ValidationError):
        Graph.from_edges(3, [(1, 2), (2, 1)])
    assert Graph(3, frozenset({(2, 1)})).edges == {(1, 2)}


@given(graphs(max_n=10))
def test_laplacian_properties(g):
    lap = laplacian(g)
    assert np.array_equal(lap, lap.T)
    assert not lap.sum(axis=1).any()
    assert np.array_equal(np.diag(lap), g.degrees())
    assert g.degrees().sum() == 2 * g.m
    w = np.linalg.eigvalsh(lap.astype(float))
    assert w.min() >= -1e-9
    assert int((np.abs(w) < 1e-8).sum()) == g.components()


@given(graphs(max_n=10))
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert g.m + complement(g).m == g.n * (g.n - 1) // 2


def test_complement_examples():
    assert complement(complete(5)) == Graph(5)
    k33 = complement(disjoint_cliques(2, 3))
    assert k33 == complete_multipartite(2, 3)
    assert k33.m == 9 and set(k33.degrees()) == {3}


def test_cartesian_square_is_c4():
    c4 = cartesian_product(complete(2), complete(2))
    assert c4.m == 4 and set(c4.degrees()) == {2} and c4.is_connected()


def test_cartesian_grid_edges():
    g, h = path(2), path(3)
    prod = cartesian_product(g, h)
    # enumerate the product edge rule over all vertex pairs
    verts = [(u, up) for u in range(1, 3) for up in range(1, 4)]
    expected = set()
    for a in verts:
        for b in verts:
            if a < b and ((a[0] == b[0] and h.has_edge(a[1], b[1]))
                          or (a[1] == b[1] and g.has_edge(a[0], b[0]))):
                expected.add(((a[0] - 1) * 3 + a[1], (b[0] - 1) * 3 + b[1]))
    assert prod.edges == expected
    assert prod.m == 7


@given(graphs(max_n=5), graphs(max_n=5))
def test_cartesian_degrees(g, h):
    prod = cartesian_product(g, h)
    dg, dh, dp = g.degrees(), h.degrees(), prod.degrees()
    for u in range(g.n):
        for up in range(h.n):
            assert dp[u * h.n + up] == dg[u] + dh[up]


def test_family_shapes():
    g = disjoint_cliques(2, 3)
    assert (g.n, g.m, g.components()) == (6, 6, 2)
    assert cycle(5).m == 5 and path(5).m == 4 and complete(6).m == 15
    assert family("complete_multipartite", m=2, s=3) == complement(family("disjoint_cliques", m=2, s=3))


@pytest.mark.parametrize("m,s", [(2, 3), (3, 2), (3, 3), (4, 2), (2, 5)])
def test_family_extreme_eigenvalues(m, s):
    top = np.linalg.eigvalsh(laplacian(disjoint_cliques(m, s)).astype(float))[-1]
    second = np.linalg.eigvalsh(laplacian(complete_multipartite(m, s)).astype(float))[1]
    assert top == pytest.approx(s, abs=1e-9)
    assert second == pytest.approx((m - 1) * s, abs=1e-9)
    assert second == pytest.approx(m * s - top, abs=1e-9)


def test_family_validation():
    with pytest.raises(ValidationError):
        disjoint_cliques(0, 3)
    with pytest.raises(ValidationError):
        family("petersen", n=10)
    with pytest.raises(ValidationError):
        family("erdos_renyi", n=5, p=0.5)
    with pytest.raises(ValidationError):
        erdos_renyi(5, 1.5, seed=1)


def test_erdos_renyi_reproducible():
    a = erdos_renyi(9, 0.4, seed=7)
    assert a == erdos_renyi(9, 0.4, seed=7)
    assert erdos_renyi(9, 0.0, seed=1).m == 0
    assert erdos_renyi(9, 1.0, seed=1) == complete(9)
    # frozen draw; PCG64 streams are platform independent
    assert erdos_renyi(6, 0.4, seed=7).sorted_edges() == [(1, 5), (1, 6), (2, 4), (3, 5), (3, 6), (4, 5)]
