"""Degree statistics, triangles and clustering, k-cores, triad census and
the leading adjacency eigenpair.

Algorithms run on a positional CSR snapshot of the graph and report
results keyed by node id. Triangle, clustering and core computations use
the simple undirected view: edge direction and multiplicity are dropped
and self-loops ignored.
"""
from __future__ import annotations

from math import comb
from typing import NamedTuple

import numpy as np

from .core import _csr_from_pairs
from .manipulate import subgraph

TRIAD_NAMES = ("003", "012", "102", "021D", "021U", "021C", "111D", "111U",
               "030T", "030C", "201", "120D", "120U", "120C", "210", "300")


class TriangleCounts(NamedTuple):
    total: int
    closed: dict
    open: dict


class Clustering(NamedTuple):
    average: float
    per_node: dict


class EigenResult(NamedTuple):
    value: float
    vector: dict
    converged: bool
    iterations: int


def degree_summary(g, mode="all"):
    return g.degree_summary(mode)


def undirected_csr(g):
    """Simple undirected CSR view without self-loops."""
    csr = g.to_csr("both")
    rows = np.repeat(np.arange(csr.n), np.diff(csr.indptr))
    keep = rows != csr.indices
    return _csr_from_pairs(csr.ids, rows[keep], csr.indices[keep], dedupe=True)


def adjacency_lists(csr):
    ptr = csr.indptr.tolist()
    idx = csr.indices.tolist()
    return [idx[ptr[i] : ptr[i + 1]] for i in range(csr.n)]


def _triangle_arrays(csr):
    """Per-position triangle counts via degree-ordered orientation."""
    n = csr.n
    adj = adjacency_lists(csr)
    deg = [len(a) for a in adj]
    rank = sorted(range(n), key=lambda v: (deg[v], v))
    pos = [0] * n
    for r, v in enumerate(rank):
        pos[v] = r
    fwd = [set(w for w in adj[v] if pos[w] > pos[v]) for v in range(n)]
    tri = [0] * n
    for u in range(n):
        fu = fwd[u]
        for v in fu:
            common = fu & fwd[v]
            if common:
                c = len(common)
                tri[u] += c
                tri[v] += c
                for w in common:
                    tri[w] += 1
    return tri, deg


def count_triangles(g):
    """Total triangle count plus per-node closed and open triads.

    ``closed[v]`` is the number of triangles through ``v``; ``open[v]`` the
    number of neighbor pairs of ``v`` that are not adjacent.
    """
    csr = undirected_csr(g)
    tri, deg = _triangle_arrays(csr)
    ids = csr.ids.tolist()
    closed = dict(zip(ids, tri))
    opened = {nid: d * (d - 1) // 2 - t for nid, d, t in zip(ids, deg, tri)}
    return TriangleCounts(sum(tri) // 3, closed, opened)


def clustering_coefficient(g):
    """Average and per-node local clustering; nodes of degree < 2 count as 0
    in the average."""
    csr = undirected_csr(g)
    tri, deg = _triangle_arrays(csr)
    per = {}
    for nid, d, t in zip(csr.ids.tolist(), deg, tri):
        per[nid] = t / (d * (d - 1) / 2) if d >= 2 else 0.0
    avg = sum(per.values()) / len(per) if per else 0.0
    return Clustering(avg, per)


def _core_numbers(csr):
    """Bucket-based minimum-degree peeling (linear time)."""
    n = csr.n
    adj = adjacency_lists(csr)
    deg = [len(a) for a in adj]
    md = max(deg, default=0)
    bin_start = [0] * (md + 1)
    for d in deg:
        bin_start[d] += 1
    start = 0
    for d in range(md + 1):
        bin_start[d], start = start, start + bin_start[d]
    pos = [0] * n
    vert = [0] * n
    for v in range(n):
        pos[v] = bin_start[deg[v]]
        vert[pos[v]] = v
        bin_start[deg[v]] += 1
    for d in range(md, 0, -1):
        bin_start[d] = bin_start[d - 1]
    bin_start[0] = 0
    for i in range(n):
        v = vert[i]
        dv = deg[v]
        for u in adj[v]:
            du = deg[u]
            if du > dv:
                pu = pos[u]
                pw = bin_start[du]
                w = vert[pw]
                if u != w:
                    vert[pu], vert[pw] = w, u
                    pos[u], pos[w] = pw, pu
                bin_start[du] += 1
                deg[u] = du - 1
    return deg


def core_decomposition(g):
    """Map node id to core number."""
    csr = undirected_csr(g)
    return dict(zip(csr.ids.tolist(), _core_numbers(csr)))


def k_core(g, k):
    """Maximal induced subgraph whose undirected degrees are all >= ``k``
    (same container type, ids preserved)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    cores = core_decomposition(g)
    return subgraph(g, [v for v, c in cores.items() if c >= k])


# triad census --------------------------------------------------------------

def _classify(code):
    """Triad class of a 6-bit code: bits are a->b, b->a, a->c, c->a, b->c, c->b."""
    arcs = [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]
    e = {arcs[i] for i in range(6) if code >> i & 1}
    mutual = [p for p in ((0, 1), (0, 2), (1, 2)) if p in e and p[::-1] in e]
    asym = [(x, y) for (x, y) in e if (y, x) not in e]
    m, a = len(mutual), len(asym)
    outdeg = [sum(1 for x, _ in asym if x == v) for v in range(3)]
    indeg = [sum(1 for _, y in asym if y == v) for v in range(3)]
    if (m, a) == (0, 0):
        return "003"
    if (m, a) == (0, 1):
        return "012"
    if (m, a) == (1, 0):
        return "102"
    if (m, a) == (0, 2):
        if 2 in outdeg:
            return "021D"
        if 2 in indeg:
            return "021U"
        return "021C"
    if (m, a) == (1, 1):
        # D: the lone arc points into the mutual pair
        return "111D" if asym[0][1] in mutual[0] else "111U"
    if (m, a) == (0, 3):
        return "030T" if 2 in outdeg else "030C"
    if (m, a) == (2, 0):
        return "201"
    if (m, a) == (1, 2):
        if 2 in outdeg:
            return "120D"
        if 2 in indeg:
            return "120U"
        return "120C"
    if (m, a) == (2, 1):
        return "210"
    return "300"


_TRICODE = tuple(_classify(c) for c in range(64))


def triad_census(g):
    """Counts of the 16 directed triad classes (node-ordered enumeration).

    Undirected graphs are read as symmetric digraphs, multigraphs are
    collapsed and self-loops ignored.
    """
    out = g.to_csr("out")
    n = out.n
    rows = np.repeat(np.arange(n), np.diff(out.indptr))
    keep = rows != out.indices
    o = _csr_from_pairs(out.ids, rows[keep], out.indices[keep], dedupe=True)
    succ = [set(a) for a in adjacency_lists(o)]
    nbr = [set(a) for a in adjacency_lists(undirected_csr(g))]
    census = dict.fromkeys(TRIAD_NAMES, 0)

    def code(a, b, c):
        sa, sb, sc = succ[a], succ[b], succ[c]
        return ((b in sa) | (a in sb) << 1 | (c in sa) << 2 | (a in sc) << 3
                | (c in sb) << 4 | (b in sc) << 5)

    for v in range(n):
        for u in nbr[v]:
            if u <= v:
                continue
            s = nbr[u] | nbr[v]
            s.discard(u)
            s.discard(v)
            dyad = "102" if (u in succ[v] and v in succ[u]) else "012"
            census[dyad] += n - len(s) - 2
            for w in s:
                if u < w or (v < w < u and v not in nbr[w]):
                    census[_TRICODE[code(v, u, w)]] += 1
    census["003"] = comb(n, 3) - sum(census.values())
    return census


# spectral ------------------------------------------------------------------

def leading_eigenvalue(g, tol=1e-9, max_iter=1000):
    """Leading eigenpair of the undirected adjacency matrix.

    Power iteration on ``A + I`` (the shift keeps bipartite graphs from
    oscillating) with a Rayleigh-quotient estimate. Stops when both the
    relative eigenvalue change and the largest vector-entry change fall
    below ``tol``; otherwise ``converged`` is False after ``max_iter``
    sweeps. The vector has unit 2-norm and a positive first nonzero entry.
    Self-loops contribute a diagonal 1.
    """
    csr = g.to_csr("both")
    rows = np.repeat(np.arange(csr.n), np.diff(csr.indptr))
    if g.multigraph:
        csr = _csr_from_pairs(csr.ids, rows, csr.indices, dedupe=True)
        rows = np.repeat(np.arange(csr.n), np.diff(csr.indptr))
    n = csr.n
    if n == 0:
        return EigenResult(0.0, {}, True, 0)
    cols = csr.indices

    def av(x):
        return np.bincount(rows, weights=x[cols], minlength=n)

    x = np.full(n, 1.0 / np.sqrt(n))
    lam = float(x @ av(x))
    converged = False
    it = 0
    for it in range(1, max_iter + 1):
        y = av(x) + x
        y /= np.linalg.norm(y)
        new_lam = float(y @ av(y))
        dl = abs(new_lam - lam) / max(abs(new_lam), 1e-300)
        dx = float(np.max(np.abs(y - x)))
        x, lam = y, new_lam
        if dl < tol and dx < tol:
            converged = True
            break
    nz = np.flatnonzero(x)
    if len(nz) and x[nz[0]] < 0:
        x = -x
    return EigenResult(lam, dict(zip(csr.ids.tolist(), x.tolist())), converged, it)
