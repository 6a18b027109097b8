"""Benchmark suites behind ``adjgraph bench``.

Each suite yields :class:`BenchReport` rows; :func:`write_csv` emits them
with the fixed :data:`FIELDS` header. Times are arithmetic means over the
repeat count. Memory is measured with :mod:`tracemalloc` (bytes held by
live allocations once a graph is built), so per-node and per-edge costs
come from differencing two graphs that share one dimension.
"""
from __future__ import annotations

import csv
import gc
import io
import os
import random
import sys
import tempfile
import time
import tracemalloc
from dataclasses import asdict, dataclass, fields

import numpy as np

from . import io as gio
from .analytics import clustering_coefficient, k_core
from .centrality import pagerank_arrays
from .generators import PRNG_NAME, gen_gnm
from .manipulate import weakly_connected_components

SUITES = ("memory", "basicops", "edgetest", "delete", "algorithms")
PAGERANK_ITERATIONS = 10


@dataclass
class BenchReport:
    suite: str
    operation: str
    graph: str
    n: int
    m: int
    repeats: int
    seconds: float | None = None
    peak_bytes: int | None = None
    live_bytes: int | None = None
    bytes_per_node: float | None = None
    bytes_per_edge: float | None = None
    iterations: int | None = None
    seed: int | None = None
    prng: str = PRNG_NAME
    status: str = "ok"


FIELDS = tuple(f.name for f in fields(BenchReport))


def write_csv(reports, out=None, precision=6):
    out = out or sys.stdout
    w = csv.writer(out, lineterminator="\n")
    w.writerow(FIELDS)
    for r in reports:
        row = []
        for name, v in asdict(r).items():
            if v is None:
                row.append("")
            elif isinstance(v, float):
                row.append(f"{v:.{precision}g}")
            else:
                row.append(v)
        w.writerow(row)
        out.flush()


def _timed(fn, repeats, setup=None):
    """Mean wall time of ``fn(setup())`` over ``repeats`` runs, plus the last result."""
    total = 0.0
    result = None
    for _ in range(repeats):
        arg = setup() if setup else None
        gc.collect()
        t0 = time.perf_counter()
        result = fn(arg) if setup else fn()
        total += time.perf_counter() - t0
    return total / repeats, result


def measure_graph_memory(n, m, seed):
    """``(live_bytes, peak_bytes, seconds)`` for building undirected G(n, m)."""
    gc.collect()
    tracemalloc.start()
    try:
        base = tracemalloc.get_traced_memory()[0]
        tracemalloc.reset_peak()
        t0 = time.perf_counter()
        g = gen_gnm(n, m, seed=seed)
        secs = time.perf_counter() - t0
        gc.collect()
        live, peak = tracemalloc.get_traced_memory()
    finally:
        tracemalloc.stop()
    del g
    return live - base, peak - base, secs


def memory_suite(n, m, seed, repeats=1):
    """Base G(n, m), an edge partner G(n, m/2) and a node partner G(2n, m)."""
    label = lambda a, b: f"G({a},{b})"
    sizes = [(n, m), (n, m // 2), (2 * n, m)]
    live = {}
    for nn, mm in sizes:
        try:
            b, p, s = measure_graph_memory(nn, mm, seed)
        except MemoryError:
            yield BenchReport("memory", "build", label(nn, mm), nn, mm, 1, seed=seed, status="oom")
            return
        live[(nn, mm)] = b
        yield BenchReport("memory", "build", label(nn, mm), nn, mm, 1, seconds=s,
                          peak_bytes=p, live_bytes=b, seed=seed)
    per_edge = (live[(n, m)] - live[(n, m // 2)]) / (m - m // 2)
    per_node = (live[(2 * n, m)] - live[(n, m)]) / n
    yield BenchReport("memory", "bytes_per_edge", label(n, m), n, m, 1,
                      bytes_per_edge=per_edge, seed=seed)
    yield BenchReport("memory", "bytes_per_node", label(n, m), n, m, 1,
                      bytes_per_node=per_node, seed=seed)


def basicops_suite(n, m, seed, repeats=5):
    graph = f"G({n},{m})"
    secs, g = _timed(lambda: gen_gnm(n, m, seed=seed), repeats)
    yield BenchReport("basicops", "generate", graph, n, m, repeats, seconds=secs, seed=seed)
    with tempfile.TemporaryDirectory() as tmp:
        bpath = os.path.join(tmp, "g.bin")
        tpath = os.path.join(tmp, "g.txt")
        for op, fn in (("save_binary", lambda: gio.save_binary(g, bpath)),
                       ("load_binary", lambda: gio.load_binary(bpath)),
                       ("save_text", lambda: gio.save_edge_list(g, tpath)),
                       ("load_text", lambda: gio.load_edge_list(tpath))):
            secs, _ = _timed(fn, repeats)
            yield BenchReport("basicops", op, graph, n, m, repeats, seconds=secs, seed=seed)


def _edge_queries(g, count, seed):
    """Half existing edges, half uniformly random node pairs."""
    rng = random.Random(seed)
    ids = g.nodes()
    edges = list(g.edges())
    q = []
    for i in range(count):
        if i % 2 == 0 and edges:
            q.append(edges[rng.randrange(len(edges))])
        else:
            q.append((ids[rng.randrange(len(ids))], ids[rng.randrange(len(ids))]))
    return q


def _run_edge_queries(g, queries):
    is_edge = g.is_edge
    hits = 0
    for u, v in queries:
        hits += is_edge(u, v)
    return hits


def edgetest_suite(n, m, seed, repeats=5, g=None):
    g = g if g is not None else gen_gnm(n, m, seed=seed)
    queries = _edge_queries(g, g.get_edges(), seed)
    secs, _ = _timed(lambda: _run_edge_queries(g, queries), repeats)
    yield BenchReport("edgetest", "is_edge", f"G({n},{m})", n, m, repeats, seconds=secs,
                      iterations=len(queries), seed=seed)


def delete_nodes(g, victims):
    for v in victims:
        g.del_node(v)
    return g


def delete_suite(n, m, seed, repeats=5):
    """Delete a random 10% of the nodes one by one (fresh copy per repeat)."""
    graph = f"G({n},{m})"
    gen_secs, g = _timed(lambda: gen_gnm(n, m, seed=seed), 1)
    yield BenchReport("delete", "generate", graph, n, m, 1, seconds=gen_secs, seed=seed)
    victims = random.Random(seed).sample(g.nodes().tolist(), n // 10)
    secs, _ = _timed(lambda h: delete_nodes(h, victims), repeats, setup=g.copy)
    yield BenchReport("delete", "delete_10pct", graph, n, m, repeats, seconds=secs,
                      iterations=len(victims), seed=seed)


def _pagerank10(g):
    csr = g.to_csr("out")
    rows = np.repeat(np.arange(csr.n), np.diff(csr.indptr))
    return pagerank_arrays(csr, rows, 0.85, PAGERANK_ITERATIONS)


def algorithms_suite(n, m, seed, repeats=5):
    graph = f"G({n},{m})"
    g = gen_gnm(n, m, seed=seed)
    secs, (_, sweeps) = _timed(lambda: _pagerank10(g), repeats)
    yield BenchReport("algorithms", "pagerank", graph, n, m, repeats, seconds=secs,
                      iterations=sweeps, seed=seed)
    for op, fn in (("clustering", lambda: clustering_coefficient(g)),
                   ("wcc", lambda: weakly_connected_components(g)),
                   ("3core", lambda: k_core(g, 3))):
        secs, _ = _timed(fn, repeats)
        yield BenchReport("algorithms", op, graph, n, m, repeats, seconds=secs, seed=seed)
    for r in edgetest_suite(n, m, seed, repeats, g=g):
        r.suite = "algorithms"
        yield r


RUNNERS = {
    "memory": memory_suite,
    "basicops": basicops_suite,
    "edgetest": edgetest_suite,
    "delete": delete_suite,
    "algorithms": algorithms_suite,
}


def run_suite(suite, n, m, seed=1, repeats=5):
    runner = RUNNERS[suite]
    try:
        yield from runner(n, m, seed, repeats)
    except MemoryError:
        yield BenchReport(suite, "aborted", f"G({n},{m})", n, m, repeats, seed=seed, status="oom")


def report_table(reports):
    buf = io.StringIO()
    write_csv(reports, buf)
    return buf.getvalue()
