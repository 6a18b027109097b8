import random
from collections import Counter

import numpy as np
import pytest

from adjgraph import ConvergenceError, DirectedGraph, ParameterError, UndirectedGraph
from adjgraph.analytics import clustering_coefficient
from adjgraph.generators import (
    GENERATORS,
    circle,
    complete,
    gen_barabasi_albert,
    gen_bipartite_random,
    gen_configuration_model,
    gen_constant_degree,
    gen_copying,
    gen_degree_sequence,
    gen_forest_fire,
    gen_gnm,
    gen_kronecker,
    gen_power_law,
    gen_regular,
    gen_rmat,
    gen_watts_strogatz,
    grid,
    is_graphical,
    power_law_sequence,
    rewire,
    star,
    tree,
    ws_lattice_clustering,
)


def degrees(g):
    return [g.degree(int(v)) for v in g.nodes()]


def no_loops(g):
    return all(u != v for u, v in g.edges())


def test_regular_shapes():
    assert (complete(5).get_edges(), circle(6).get_edges()) == (10, 6)
    g = grid(3, 4)
    assert (g.get_nodes(), g.get_edges()) == (12, 17)
    assert g.is_edge(0, 1) and g.is_edge(0, 4) and not g.is_edge(3, 4)
    s = star(6)
    assert s.degree(0) == 5 and s.get_edges() == 5
    t = tree(2, 3)
    assert (t.get_nodes(), t.get_edges()) == (15, 14) and t.is_edge(2, 6)
    assert gen_regular("circle", 5) == circle(5)
    with pytest.raises(ParameterError):
        circle(2)


def test_gnm_exact_and_seeded():
    for n, m in ((10, 0), (10, 45), (50, 300)):
        g = gen_gnm(n, m, seed=n + m)
        assert (g.get_nodes(), g.get_edges()) == (n, m) and no_loops(g)
    d = gen_gnm(20, 380, directed=True, seed=1)
    assert isinstance(d, DirectedGraph) and d.get_edges() == 380
    assert gen_gnm(30, 60, seed=4) == gen_gnm(30, 60, seed=4)
    assert gen_gnm(30, 60, seed=4) != gen_gnm(30, 60, seed=5)
    with pytest.raises(ParameterError):
        gen_gnm(4, 7)


def test_bipartite():
    g = gen_bipartite_random(5, 7, 20, seed=2)
    assert g.get_edges() == 20
    assert all((u < 5) != (v < 5) for u, v in g.edges())


def test_constant_degree():
    g = gen_constant_degree(30, 4, seed=3)
    assert set(degrees(g)) == {4} and no_loops(g)
    with pytest.raises(ParameterError):
        gen_constant_degree(5, 3)


def test_is_graphical_matches_small_enumeration():
    import itertools
    for n in range(1, 6):
        for seq in itertools.product(range(n), repeat=n):
            if sum(seq) % 2:
                assert not is_graphical(seq)
                continue
            # brute force: does some simple graph realize it?
            pairs = list(itertools.combinations(range(n), 2))
            ok = False
            for mask in range(1 << len(pairs)):
                deg = [0] * n
                for i, (u, v) in enumerate(pairs):
                    if mask >> i & 1:
                        deg[u] += 1
                        deg[v] += 1
                if tuple(deg) == seq:
                    ok = True
                    break
            assert is_graphical(seq) == ok, seq


def test_degree_sequence_exact():
    rng = random.Random(0)
    for t in range(30):
        seq = [rng.randrange(0, 8) for _ in range(25)]
        if not is_graphical(seq):
            continue
        g = gen_degree_sequence(seq, seed=t)
        assert degrees(g) == seq and no_loops(g)
    with pytest.raises(ParameterError):
        gen_degree_sequence([3, 1])


def test_configuration_model_bounds():
    seq = [3, 3, 2, 2, 2, 1, 1]
    g = gen_configuration_model(seq, seed=5)
    assert all(d <= s for d, s in zip(degrees(g), seq)) and no_loops(g)


def test_barabasi_albert():
    g = gen_barabasi_albert(200, 3, seed=1)
    assert g.get_nodes() == 200 and g.get_edges() == 3 + 197 * 3
    assert min(degrees(g)) >= 3 and no_loops(g)
    # the oldest nodes should accumulate the highest degrees
    top = sorted(g.nodes(), key=lambda v: -g.degree(int(v)))[:5]
    assert np.mean(top) < 50


def test_watts_strogatz():
    lattice = gen_watts_strogatz(40, 3, 0.0)
    assert set(degrees(lattice)) == {6}
    assert abs(clustering_coefficient(lattice).average - ws_lattice_clustering(3)) < 1e-12
    g = gen_watts_strogatz(40, 3, 0.3, seed=2)
    assert g.get_edges() == 120 and no_loops(g)
    assert clustering_coefficient(g).average < clustering_coefficient(lattice).average


def test_rmat():
    g = gen_rmat(8, 1000, 0.57, 0.19, 0.19, seed=3)
    assert (g.get_nodes(), g.get_edges()) == (256, 1000) and no_loops(g)
    outs = sorted((g.out_degree(int(v)) for v in g.nodes()), reverse=True)
    assert outs[0] > 4 * 1000 / 256  # skewed
    with pytest.raises(ParameterError):
        gen_rmat(4, 10, 0.5, 0.5, 0.5)


def test_kronecker_small_and_large():
    theta = [[0.9, 0.5], [0.5, 0.1]]
    g = gen_kronecker(theta, 4, seed=1)
    assert g.get_nodes() == 16
    big = gen_kronecker(theta, 14, seed=1)
    assert big.get_nodes() == 2**14
    assert big.get_edges() == round(2.0**14)
    full = gen_kronecker([[1, 1], [1, 1]], 3, seed=0)
    assert full.get_edges() == 64
    with pytest.raises(ParameterError):
        gen_kronecker([[1.5, 0], [0, 1]], 2)


def test_forest_fire_and_copying():
    g = gen_forest_fire(300, 0.35, 0.3, seed=4)
    assert g.get_nodes() == 300 and no_loops(g)
    assert all(g.out_degree(v) >= 1 for v in range(1, 300))
    assert all(u > v for u, v in g.edges())
    c = gen_copying(300, 0.3, seed=4)
    assert c.get_edges() == 299 and all(u > v for u, v in c.edges())
    indeg = sorted((c.in_degree(v) for v in range(300)), reverse=True)
    assert indeg[0] >= 10


def test_forest_fire_densifies():
    def ratio(n):
        return np.mean([gen_forest_fire(n, 0.37, 0.32, seed=s).get_edges() / n for s in range(4)])
    assert ratio(2000) > ratio(250)


@pytest.mark.parametrize("directed", [False, True])
def test_rewire_preserves_degrees(directed):
    g = gen_gnm(60, 200, directed=directed, seed=8)
    h = rewire(g, 1.0, seed=2)
    assert h != g and h.get_edges() == g.get_edges() and no_loops(h)
    if directed:
        for v in range(60):
            assert (h.out_degree(v), h.in_degree(v)) == (g.out_degree(v), g.in_degree(v))
    else:
        assert degrees(h) == degrees(g)
    assert rewire(g, 0.0) == g


def test_power_law():
    seq = power_law_sequence(2000, 2.5, seed=1)
    assert is_graphical(seq)
    counts = Counter(seq)
    assert counts[1] > counts[2] > counts[4]
    g = gen_power_law(500, 2.3, seed=2)
    assert g.get_nodes() == 500 and no_loops(g)


def test_registry_covers_models():
    assert {"gnm", "ba", "ws", "rmat", "kronecker", "forestfire", "copying"} <= set(GENERATORS)
