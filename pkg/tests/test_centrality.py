import math

import numpy as np
import pytest

from adjgraph import DirectedGraph, ParameterError, UndirectedGraph
from adjgraph.centrality import (
    betweenness,
    closeness_centrality,
    degree_centrality,
    edge_betweenness,
    eigenvector_centrality,
    farness,
    hits,
    pagerank,
    personalized_pagerank_power,
    ppr_bidirectional,
)
from adjgraph.generators import circle, complete, gen_gnm, star
from oracles import (
    betweenness as bc_oracle,
    edge_betweenness as ebc_oracle,
    hits_dense,
    pagerank_dense,
    ppr_dense,
    random_graph,
)


def linf(a, b):
    return max((abs(a[k] - b[k]) for k in b), default=0.0)


@pytest.mark.parametrize("directed", [False, True])
def test_pagerank_against_dense_solve(directed):
    for seed in range(30):
        g, nodes, edges = random_graph(seed, 32, directed=directed, loops=True)
        got = pagerank(g, iterations=10_000, tol=1e-14)
        assert linf(got, pagerank_dense(nodes, edges, directed=directed)) <= 1e-8
        assert abs(sum(got.values()) - 1) < 1e-12


def test_pagerank_fixed_iterations():
    g = DirectedGraph.from_edges([0, 1, 2], [1, 2, 0])
    assert all(abs(v - 1 / 3) < 1e-15 for v in pagerank(g).values())
    with pytest.raises(ParameterError):
        pagerank(g, damping=1.5)


@pytest.mark.parametrize("directed", [False, True])
def test_ppr_against_dense_solve(directed):
    for seed in range(30):
        g, nodes, edges = random_graph(seed, 32, directed=directed, loops=True)
        src = {nodes[0]: 0.5, nodes[-1]: 0.5} if len(nodes) > 1 else {nodes[0]: 1.0}
        got = personalized_pagerank_power(g, src, alpha=0.2)
        assert linf(got, ppr_dense(nodes, edges, src, 0.2, directed=directed)) <= 1e-8


def test_ppr_uniform_source_equals_pagerank():
    g = gen_gnm(30, 80, directed=True, seed=2)
    ppr = personalized_pagerank_power(g, range(30), alpha=0.15)
    assert linf(ppr, pagerank(g, iterations=10_000, tol=1e-15)) < 1e-10


def test_ppr_source_validation():
    g = DirectedGraph.from_edges([0], [1])
    with pytest.raises(ParameterError):
        personalized_pagerank_power(g, {0: 0.3})
    with pytest.raises(ParameterError):
        personalized_pagerank_power(g, 0, alpha=0)


def test_ppr_bidirectional_examples():
    g = DirectedGraph.from_edges([0], [1])
    exact = personalized_pagerank_power(g, 0, alpha=0.2)[1]
    est = ppr_bidirectional(g, 0, 1, alpha=0.2, eps=0.05, seed=1)
    assert abs(est - exact) / exact < 0.05
    loop = DirectedGraph.from_edges([0], [0])
    assert ppr_bidirectional(loop, 0, 0, seed=1) == pytest.approx(1.0)


def test_hits_against_eigenvectors():
    checked = 0
    for seed in range(40):
        g, nodes, edges = random_graph(seed, 24, directed=True, min_n=3)
        h_ref, a_ref, gap = hits_dense(nodes, edges)
        if not edges or gap < 0.05:
            continue
        res = hits(g, iterations=100_000, tol=1e-15)
        assert linf(res.hubs, h_ref) <= 1e-8 and linf(res.authorities, a_ref) <= 1e-8
        checked += 1
    assert checked >= 20


def test_hits_degenerate():
    g = UndirectedGraph.from_edges([], [], nodes=[0, 1])
    assert hits(g).degenerate


@pytest.mark.parametrize("directed", [False, True])
def test_betweenness_against_path_counting(directed):
    for seed in range(25):
        g, nodes, edges = random_graph(seed, 20, directed=directed, loops=True)
        assert linf(betweenness(g), bc_oracle(nodes, edges, directed)) <= 1e-8
        eb = edge_betweenness(g)
        ref = ebc_oracle(nodes, edges, directed)
        assert set(eb) == set(ref) and linf(eb, ref) <= 1e-8


def test_betweenness_star_and_sampling():
    assert betweenness(star(5))[0] == 6
    g = gen_gnm(60, 150, seed=5)
    exact = betweenness(g)
    approx = betweenness(g, sample_fraction=0.5, seed=3)
    assert approx == betweenness(g, sample_fraction=0.5, seed=3)
    assert abs(sum(approx.values()) - sum(exact.values())) / sum(exact.values()) < 0.25


def test_degree_closeness_farness():
    p3 = UndirectedGraph.from_edges([0, 1], [1, 2])
    assert closeness_centrality(p3, 0) == pytest.approx(2 / 3)
    assert closeness_centrality(p3, 1) == 1.0
    assert farness(p3, 0) == 3.0
    iso = UndirectedGraph.from_edges([0], [1], nodes=[2])
    assert closeness_centrality(iso, 2) == 0 and farness(iso, 2) == math.inf
    # partially reachable: R = 1 of n - 1 = 2, sum of distances 1
    assert closeness_centrality(iso, 0) == pytest.approx(0.5)
    dc = degree_centrality(star(5))
    assert dc[0] == 1.0 and dc[1] == 0.25


def test_eigenvector_centrality():
    res = eigenvector_centrality(circle(8))
    assert res.converged
    assert all(abs(v - 1 / 8) < 1e-9 for v in res.scores.values())
    s = eigenvector_centrality(star(6)).scores
    assert s[0] > s[1] and abs(sum(s.values()) - 1) < 1e-12
    assert np.isclose(eigenvector_centrality(complete(4)).scores[2], 0.25)
