"""Worked examples and statistical properties, one small scenario per test."""
import csv
import io
import math
import random
import statistics

import numpy as np
import pytest

from adjgraph import DirectedGraph, UndirectedGraph
from adjgraph.analytics import (
    clustering_coefficient,
    core_decomposition,
    count_triangles,
    degree_summary,
    k_core,
    triad_census,
)
from adjgraph.centrality import (
    betweenness,
    closeness_centrality,
    eigenvector_centrality,
    pagerank,
    personalized_pagerank_power,
)
from adjgraph.cli import graph_stats, main
from adjgraph.generators import (
    complete,
    gen_barabasi_albert,
    gen_bipartite_random,
    gen_constant_degree,
    gen_copying,
    gen_degree_sequence,
    gen_forest_fire,
    gen_gnm,
    gen_power_law,
    gen_rmat,
    gen_watts_strogatz,
    grid,
    power_law_sequence,
    rewire,
    star,
    tree,
)
from adjgraph.io import dumps_binary, load_edge_list
from adjgraph.manipulate import subgraph, weakly_connected_components
from adjgraph.traverse import bfs, dfs, diameter_exact, shortest_path
from oracles import random_graph


def path(n):
    return UndirectedGraph.from_edges(range(n - 1), range(1, n))


# containers -------------------------------------------------------------------

def test_default_id_is_max_plus_one():
    g = UndirectedGraph.from_edges([], [], nodes=[0, 5])
    assert g.add_node() == 6


def test_delete_nodes_then_recount():
    g = gen_gnm(1000, 5000, seed=3)
    edges = set(g.edges())
    for v in random.Random(3).sample(range(1000), 100):
        g.del_node(v)
        edges = {e for e in edges if v not in e}
    assert g.get_edges() == len(edges) == sum(1 for _ in g.edge_iter())
    g.check_invariants()


def test_delete_every_edge():
    g = gen_gnm(100, 500, seed=1)
    for u, v in list(g.edges()):
        g.del_edge(u, v)
    assert g.get_edges() == 0 and g.get_nodes() == 100
    g.check_invariants()


def test_is_edge_matches_edge_set_at_scale():
    g = gen_gnm(100_000, 1_000_000, seed=2)
    edge_set = set(g.edges())
    rng = random.Random(2)
    edges = list(edge_set)
    for i in range(1_000_000):
        if i % 2:
            u, v = rng.randrange(100_000), rng.randrange(100_000)
        else:
            u, v = edges[rng.randrange(len(edges))]
            if rng.random() < 0.5:
                u, v = v, u
        assert g.is_edge(u, v) == ((min(u, v), max(u, v)) in edge_set)


@pytest.mark.slow
def test_million_node_graph_edge_count():
    g = gen_gnm(1_000_000, 10_000_000, seed=1)
    assert g.get_nodes() == 1_000_000 and g.get_edges() == 10_000_000


def test_handshake_directed():
    g = gen_gnm(10_000, 100_000, directed=True, seed=4)
    assert sum(v.out_deg for v in g.node_iter()) == g.get_edges()
    assert sum(v.in_deg for v in g.node_iter()) == g.get_edges()
    h = degree_summary(gen_gnm(500, 2000, seed=4))
    assert sum(d * c for d, c in h.histogram.items()) == 2 * 2000


def test_empty_save_is_header_only():
    assert len(dumps_binary(UndirectedGraph())) == 25


# generators -----------------------------------------------------------------

def test_small_shapes():
    assert (grid(3, 3).get_nodes(), grid(3, 3).get_edges()) == (9, 12)
    assert gen_degree_sequence([1, 1], seed=0).get_edges() == 1
    assert gen_degree_sequence([3, 3, 3, 3], seed=0) == complete(4)
    assert gen_constant_degree(4, 3, seed=0) == complete(4)
    assert set(g for g in (gen_constant_degree(6, 2, seed=1).degree(v) for v in range(6))) == {2}
    assert degree_summary(gen_constant_degree(1000, 10, seed=1)).histogram == {10: 1000}
    assert gen_barabasi_albert(4, 3, seed=0) == complete(4)
    assert gen_copying(2, 0.5, seed=0).get_edges() == 1


def test_gnm_mean_degree():
    means = [2 * gen_gnm(100, 400, seed=s).get_edges() / 100 for s in range(100)]
    assert abs(statistics.mean(means) - 8.0) <= 0.3


def test_bipartite_two_colorable():
    for s in range(100):
        n1, n2 = 1 + s % 7, 2 + s % 5
        g = gen_bipartite_random(n1, n2, (n1 * n2) // 2, seed=s)
        for comp in weakly_connected_components(g):
            root = comp[0]
            side = bfs(g, root)
            assert all((side[u] - side[v]) % 2 for u, v in g.edges() if u in side)
    full = gen_bipartite_random(3, 4, 12, seed=0)
    assert full.get_edges() == 12 and all(full.is_edge(a, b) for a in range(3) for b in range(3, 7))


def test_barabasi_albert_edge_count_and_hubs():
    for n, k in ((50, 2), (300, 4)):
        assert gen_barabasi_albert(n, k, seed=1).get_edges() == k * (k - 1) // 2 + (n - k) * k
    wins = 0
    for s in range(20):
        ba = gen_barabasi_albert(10_000, 2, seed=s)
        er = gen_gnm(10_000, ba.get_edges(), seed=s)
        wins += ba.degree_summary().deg_max > er.degree_summary().deg_max
    assert wins >= 18


def test_watts_strogatz_clustering_falls_with_beta():
    for s in range(10):
        low = clustering_coefficient(gen_watts_strogatz(1000, 5, 0.01, seed=s)).average
        high = clustering_coefficient(gen_watts_strogatz(1000, 5, 1.0, seed=s)).average
        assert low > high
    lattice = gen_watts_strogatz(1000, 5, 0.0)
    assert abs(clustering_coefficient(lattice).average - 2 / 3) < 1e-12
    per = clustering_coefficient(gen_watts_strogatz(30, 2, 0.0)).per_node
    assert all(abs(c - 0.5) < 1e-12 for c in per.values())


def test_rmat_uniform_matches_gnm_degree_variance():
    def out_var(g):
        return statistics.pvariance([g.out_degree(v) for v in range(g.get_nodes())])

    rm = [out_var(gen_rmat(8, 2000, 0.25, 0.25, 0.25, seed=s)) for s in range(50)]
    er = [out_var(gen_gnm(256, 2000, directed=True, seed=1000 + s)) for s in range(50)]
    se = math.sqrt(statistics.variance(rm) / 50 + statistics.variance(er) / 50)
    assert abs(statistics.mean(rm) - statistics.mean(er)) <= 3 * se
    g = gen_rmat(10, 3000, 0.45, 0.15, 0.15, seed=1)
    assert g.get_edges() == 3000 and max(g.nodes()) < 2**10


def test_forest_fire_properties():
    assert gen_forest_fire(50, 0.0, 0.0, seed=1).get_edges() == 49
    for s in range(10):
        assert len(weakly_connected_components(gen_forest_fire(200, 0.35, 0.3, seed=s))) == 1
    small = statistics.mean(gen_forest_fire(250, 0.35, 0.32, seed=s).get_edges() for s in range(5))
    large = statistics.mean(gen_forest_fire(2000, 0.35, 0.32, seed=s).get_edges() for s in range(5))
    assert large / 2000 > small / 250  # edges grow faster than nodes


def test_copying_model():
    g = gen_copying(500, 0.4, seed=3)
    assert all(g.out_degree(v) == 1 for v in range(1, 500))

    def in_var(graphs):
        return statistics.mean(statistics.pvariance([g.in_degree(v) for v in range(300)])
                               for g in graphs)

    uniform = [DirectedGraph.from_edges(range(1, 300), [random.Random(s * 1000 + v).randrange(v)
                                                         for v in range(1, 300)], nodes=range(300))
               for s in range(30)]
    copied = [gen_copying(300, 1.0, seed=s) for s in range(30)]
    assert abs(in_var(copied) - in_var(uniform)) < 0.25 * in_var(uniform)


def test_rewire_many_graphs_and_triangles():
    for s in range(100):
        g = random_graph(s, 40)[0]
        h = rewire(g, 1.0, seed=s)
        assert all(g.degree(int(v)) == h.degree(int(v)) for v in g.nodes())
    lattice = gen_watts_strogatz(300, 3, 0.0)
    assert count_triangles(rewire(lattice, 1.0, seed=1)).total < count_triangles(lattice).total


def test_power_law_tail_slope():
    seq = power_law_sequence(100_000, 2.5, seed=1)
    degrees = np.array(seq)
    xs = np.unique(np.logspace(0, np.log10(degrees.max()), 20).astype(int))
    ccdf = np.array([(degrees >= x).mean() for x in xs])
    keep = ccdf > 10 / len(degrees)
    slope = np.polyfit(np.log(xs[keep]), np.log(ccdf[keep]), 1)[0]
    assert abs(slope - (1 - 2.5)) <= 0.3
    steep = power_law_sequence(10_000, 10.0, seed=1)
    assert sum(d == 1 for d in steep) > 0.99 * len(steep)
    g = gen_power_law(2000, 2.5, seed=2)
    assert g.get_nodes() == 2000


# manipulation and analytics --------------------------------------------------

def test_subgraph_vs_edge_filter():
    for s in range(500):
        g, nodes, edges = random_graph(s, 30, directed=bool(s % 2), loops=True)
        keep = set(random.Random(s).sample(nodes, len(nodes) // 2))
        h = subgraph(g, keep)
        assert sorted(h.edges()) == sorted({e for e in edges if e[0] in keep and e[1] in keep}
                                           if g.directed else
                                           {(min(e), max(e)) for e in edges if e[0] in keep and e[1] in keep})


def test_small_analytics_cases():
    assert degree_summary(complete(4)).histogram == {3: 4}
    assert count_triangles(grid(4, 4)).total == 0
    assert clustering_coefficient(complete(3)).average == 1.0
    assert clustering_coefficient(star(5)).average == 0.0
    assert set(core_decomposition(complete(4)).values()) == {3}
    t = tree(3, 3)
    assert k_core(t, 1) == t and k_core(t, 2).is_empty()
    empty3 = DirectedGraph.from_edges([], [], nodes=[0, 1, 2])
    assert triad_census(empty3)["003"] == 1


# centrality -----------------------------------------------------------------

def test_centrality_small_cases():
    ring = DirectedGraph.from_edges(range(8), [(v + 1) % 8 for v in range(8)])
    ring2 = DirectedGraph.from_edges(list(range(8)) * 2, [(v + 1) % 8 for v in range(8)] + [(v + 3) % 8 for v in range(8)])
    for g in (ring, ring2):
        assert all(abs(x - 1 / 8) < 1e-12 for x in pagerank(g).values())
    single = DirectedGraph.from_edges([], [], nodes=[4])
    assert personalized_pagerank_power(single, 4)[4] == pytest.approx(1.0)
    iso = DirectedGraph.from_edges([1], [2], nodes=[0])
    ppr = personalized_pagerank_power(iso, 0)
    assert ppr[0] == pytest.approx(1.0) and ppr[1] == ppr[2] == 0
    assert closeness_centrality(star(5), 0) == 1.0
    assert closeness_centrality(UndirectedGraph.from_edges([0], [1], nodes=[2]), 2) == 0.0
    assert betweenness(path(3))[1] == 1.0
    assert betweenness(star(7))[0] == 6 * 5 / 2


def test_eigenvector_relabeling_invariance():
    g = gen_gnm(40, 120, seed=6)
    perm = list(range(40))
    random.Random(1).shuffle(perm)
    src, dst = zip(*g.edges())
    h = UndirectedGraph.from_edges([perm[u] for u in src], [perm[v] for v in dst], nodes=perm)
    a, b = eigenvector_centrality(g).scores, eigenvector_centrality(h).scores
    assert max(abs(a[v] - b[perm[v]]) for v in range(40)) < 1e-8
    s = eigenvector_centrality(star(10)).scores
    assert s[0] / s[1] == pytest.approx(3.0, rel=1e-6)  # sqrt of the leaf count
    k = eigenvector_centrality(complete(6)).scores
    assert max(k.values()) - min(k.values()) < 1e-9


# traversal ------------------------------------------------------------------

def test_traversal_small_cases():
    assert bfs(path(4), 0) == {0: 0, 1: 1, 2: 2, 3: 3}
    assert bfs(DirectedGraph.from_edges([0], [1]), 1) == {1: 0}
    assert dfs(star(5), 0) == [0, 1, 2, 3, 4]
    assert dfs(path(5), 0) == [0, 1, 2, 3, 4]
    assert shortest_path(path(3), 0, 1).distance == 1
    assert shortest_path(UndirectedGraph.from_edges([0], [1], nodes=[2]), 0, 2).distance is None
    assert diameter_exact(UndirectedGraph.from_edges(range(6), [(v + 1) % 6 for v in range(6)])) == 3
    assert diameter_exact(path(5)) == 4


def test_dfs_visits_bfs_reachable_set():
    for s in range(50):
        g, nodes, _ = random_graph(s, 30, directed=True)
        root = nodes[0]
        assert set(dfs(g, root)) == set(bfs(g, root))


# command line -----------------------------------------------------------------

def _stats(capsys, path_):
    assert main(["stats", str(path_)]) == 0
    return dict(csv.reader(io.StringIO(capsys.readouterr().out)))


def test_stats_examples(tmp_path, capsys):
    k4 = tmp_path / "k4.bin"
    from adjgraph.io import save_binary

    save_binary(complete(4), k4)
    s = _stats(capsys, k4)
    assert (s["nodes"], s["edges"], float(s["clustering"])) == ("4", "6", 1.0)
    two = tmp_path / "two.txt"
    two.write_text("0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n")
    assert _stats(capsys, two)["wcc_count"] == "2"
    g = gen_gnm(60, 150, seed=9)
    rnd = tmp_path / "r.bin"
    save_binary(g, rnd)
    s = _stats(capsys, rnd)
    expected = dict(graph_stats(g))
    assert s["triangles"] == str(count_triangles(g).total) == str(expected["triangles"])
    assert s["wcc_count"] == str(len(weakly_connected_components(g)))


def test_text_binary_text_round_trip(tmp_path, capsys):
    src = tmp_path / "a.txt"
    src.write_text("# Undirected graph\n# Nodes: 4 Edges: 3\n1\t2\n2\t3\n3\t4\n")
    assert main(["convert", str(src), str(tmp_path / "a.bin"), "--to", "binary"]) == 0
    assert main(["convert", str(tmp_path / "a.bin"), str(tmp_path / "b.txt"), "--to", "text"]) == 0
    capsys.readouterr()

    def data_lines(p):
        return [l for l in p.read_text().splitlines() if not l.startswith("#")]

    assert data_lines(src) == data_lines(tmp_path / "b.txt")
    assert load_edge_list(src) == load_edge_list(tmp_path / "b.txt")
