"""Node importance scores.

Score vectors are plain ``{node_id: float}`` dicts covering every node.
PageRank-style methods walk out-edges (parallel multigraph edges count
with multiplicity); path-based centralities use the simple view.
"""
from __future__ import annotations

import math
import random
from collections import deque
from typing import NamedTuple

import numpy as np

from .analytics import adjacency_lists, leading_eigenvalue, undirected_csr
from .core import _csr_from_pairs
from .errors import NodeNotFoundError, ParameterError
from .traverse import bfs

PPR_WALK_CONSTANT = 350


class HitsResult(NamedTuple):
    hubs: dict
    authorities: dict
    degenerate: bool
    iterations: int


class EigenCentrality(NamedTuple):
    scores: dict
    converged: bool


def _out_arrays(g):
    csr = g.to_csr("out")
    rows = np.repeat(np.arange(csr.n), np.diff(csr.indptr))
    return csr, rows


def _pack(ids, values):
    return dict(zip(ids.tolist(), np.asarray(values, dtype=float).tolist()))


# PageRank -------------------------------------------------------------------

def pagerank_arrays(csr, rows, damping=0.85, iterations=10, tol=None):
    """Core PageRank sweep on a positional CSR; returns (scores, sweeps)."""
    n = csr.n
    outdeg = np.diff(csr.indptr).astype(float)
    dangling = outdeg == 0
    inv = np.divide(1.0, outdeg, out=np.zeros(n), where=~dangling)
    s = np.full(n, 1.0 / n)
    it = 0
    while it < iterations:
        it += 1
        flow = np.bincount(csr.indices, weights=(s * inv)[rows], minlength=n)
        new = (1.0 - damping) / n + damping * (flow + s[dangling].sum() / n)
        delta = np.abs(new - s).sum()
        s = new
        if tol is not None and delta < tol:
            break
    return s, it


def pagerank(g, damping=0.85, iterations=10, tol=None):
    """Power-iteration PageRank with uniform redistribution of dangling mass.

    Runs ``iterations`` sweeps, or stops early once the L1 change drops
    below ``tol`` (``iterations`` then acts as a cap).
    """
    if not 0 <= damping <= 1:
        raise ParameterError("damping must lie in [0, 1]")
    csr, rows = _out_arrays(g)
    if csr.n == 0:
        return {}
    s, _ = pagerank_arrays(csr, rows, damping, iterations, tol)
    return _pack(csr.ids, s)


def _source_vector(g, ids, source):
    if isinstance(source, dict):
        items = list(source.items())
    elif isinstance(source, (int, np.integer)):
        items = [(int(source), 1.0)]
    else:
        nodes = list(source)
        items = [(v, 1.0 / len(nodes)) for v in nodes]
    if not items:
        raise ParameterError("source distribution is empty")
    vec = np.zeros(len(ids))
    for nid, p in items:
        if not g.is_node(nid):
            raise NodeNotFoundError(nid)
        if p < 0:
            raise ParameterError("source probabilities must be non-negative")
        vec[np.searchsorted(ids, nid)] += p
    if abs(vec.sum() - 1.0) > 1e-12:
        raise ParameterError(f"source probabilities sum to {vec.sum()!r}, not 1")
    return vec


def personalized_pagerank_power(g, source, alpha=0.15, tol=1e-12, max_iter=100_000):
    """Fixed point of ``s = alpha*src + (1-alpha)*W^T s``; walks stuck at
    dangling nodes restart from the source distribution.

    ``source`` is a node id, an iterable of ids (uniform) or an id to
    probability map. With a uniform source and ``alpha = 1 - damping`` this
    equals :func:`pagerank`.
    """
    if not 0 < alpha < 1:
        raise ParameterError("alpha must lie in (0, 1)")
    csr, rows = _out_arrays(g)
    src = _source_vector(g, csr.ids, source)
    n = csr.n
    outdeg = np.diff(csr.indptr).astype(float)
    dangling = outdeg == 0
    inv = np.divide(1.0, outdeg, out=np.zeros(n), where=~dangling)
    s = src.copy()
    for _ in range(max_iter):
        flow = np.bincount(csr.indices, weights=(s * inv)[rows], minlength=n)
        new = alpha * src + (1 - alpha) * (flow + s[dangling].sum() * src)
        delta = np.abs(new - s).sum()
        s = new
        if delta < tol:
            break
    return _pack(csr.ids, s)


def ppr_bidirectional(g, source, target, alpha=0.15, eps=0.1, seed=None,
                      walk_constant=PPR_WALK_CONSTANT, r_max=None):
    """Estimate the personalized PageRank of ``target`` for ``source``.

    Reverse local push from the target runs until every residual is below
    ``r_max`` (default ``sqrt(eps / mean_degree)``), then
    ``ceil(walk_constant * r_max / eps**2)`` forward walks from the source
    distribution, each stopping with probability ``alpha`` per step, add
    the mean residual at their endpoints to the pushed estimate.
    """
    if not 0 < alpha < 1:
        raise ParameterError("alpha must lie in (0, 1)")
    if eps <= 0:
        raise ParameterError("eps must be positive")
    if not g.is_node(target):
        raise NodeNotFoundError(target)
    out = g.to_csr("out")
    inn = g.to_csr("in")
    ids = out.ids
    n = out.n
    src = _source_vector(g, ids, source)
    outdeg = np.diff(out.indptr).tolist()
    in_adj = adjacency_lists(inn)
    out_adj = adjacency_lists(out)
    dangling = [u for u in range(n) if outdeg[u] == 0]
    src_list = src.tolist()
    if r_max is None:
        r_max = math.sqrt(eps / max(g.get_edges() / n, 1.0))

    # reverse push
    t = int(np.searchsorted(ids, target))
    p = [0.0] * n
    r = [0.0] * n
    r[t] = 1.0
    queue = deque([t])
    queued = [False] * n
    queued[t] = True
    while queue:
        v = queue.popleft()
        queued[v] = False
        rv = r[v]
        if rv < r_max:
            continue
        r[v] = 0.0
        p[v] += alpha * rv
        spread = (1 - alpha) * rv
        touched = [(u, spread / outdeg[u]) for u in in_adj[v]]
        if src_list[v] > 0:
            touched += [(u, spread * src_list[v]) for u in dangling]
        for u, amount in touched:
            r[u] += amount
            if r[u] >= r_max and not queued[u]:
                queued[u] = True
                queue.append(u)

    # forward walks
    estimate = sum(sp * pv for sp, pv in zip(src_list, p))
    if max(r) == 0:
        return estimate
    walks = math.ceil(walk_constant * r_max / eps**2)
    rng = random.Random(seed)
    starts = [u for u in range(n) if src_list[u] > 0]
    weights = [src_list[u] for u in starts]
    picks = rng.choices(starts, weights=weights, k=walks)
    rand = rng.random
    total = 0.0
    for cur in picks:
        while rand() >= alpha:
            nb = out_adj[cur]
            cur = nb[int(rand() * len(nb))] if nb else rng.choices(starts, weights=weights)[0]
        total += r[cur]
    return estimate + total / walks


# HITS -------------------------------------------------------------------------

def hits(g, iterations=100, tol=None):
    """Hub and authority vectors, each with unit 2-norm.

    Alternates ``a = A^T h`` and ``h = A a`` from ``h = 1``; an edgeless
    graph returns uniform vectors with ``degenerate`` set.
    """
    csr, rows = _out_arrays(g)
    n = csr.n
    if n == 0:
        return HitsResult({}, {}, True, 0)
    cols = csr.indices
    h = np.ones(n) / math.sqrt(n)
    a = h.copy()
    if len(cols) == 0:
        return HitsResult(_pack(csr.ids, h), _pack(csr.ids, a), True, 0)
    it = 0
    for it in range(1, iterations + 1):
        a_new = np.bincount(cols, weights=h[rows], minlength=n)
        a_new /= np.linalg.norm(a_new)
        h_new = np.bincount(rows, weights=a_new[cols], minlength=n)
        h_new /= np.linalg.norm(h_new)
        delta = max(np.abs(a_new - a).max(), np.abs(h_new - h).max())
        a, h = a_new, h_new
        if tol is not None and delta < tol:
            break
    return HitsResult(_pack(csr.ids, h), _pack(csr.ids, a), False, it)


# path-based centralities -----------------------------------------------------

def degree_centrality(g):
    """Distinct-neighbor count (self excluded) over ``n - 1``."""
    csr = undirected_csr(g)
    n = csr.n
    scale = 1.0 / (n - 1) if n > 1 else 0.0
    return _pack(csr.ids, np.diff(csr.indptr) * scale)


def _reach_sum(g, node, direction):
    dist = bfs(g, node, direction)
    return len(dist) - 1, sum(dist.values())


def closeness_centrality(g, node, direction="out"):
    """``(R / sum_d) * (R / (n - 1))`` where ``R`` counts the nodes reachable
    from ``node`` (itself excluded); 0 when nothing is reachable."""
    reach, total = _reach_sum(g, node, direction)
    if reach == 0:
        return 0.0
    return (reach / total) * (reach / (g.get_nodes() - 1))


def farness(g, node, direction="out"):
    """Sum of distances to reachable nodes scaled by ``(n - 1) / R``;
    ``inf`` when nothing is reachable."""
    reach, total = _reach_sum(g, node, direction)
    if reach == 0:
        return math.inf
    return total * (g.get_nodes() - 1) / reach


def _simple_out(g):
    csr = g.to_csr("out")
    if g.multigraph:
        rows = np.repeat(np.arange(csr.n), np.diff(csr.indptr))
        csr = _csr_from_pairs(csr.ids, rows, csr.indices, dedupe=True)
    return csr


def _brandes(g, sample_fraction, seed, edges):
    if not 0 < sample_fraction <= 1:
        raise ParameterError("sample_fraction must lie in (0, 1]")
    csr = _simple_out(g)
    n = csr.n
    adj = adjacency_lists(csr)
    k = max(1, round(sample_fraction * n)) if n else 0
    if k >= n:
        sources = range(n)
        scale = 1.0
    else:
        rng = seed if isinstance(seed, random.Random) else random.Random(seed)
        sources = sorted(rng.sample(range(n), k))
        scale = n / k
    node_bc = [0.0] * n
    edge_bc = {}
    for s in sources:
        order = []
        preds = [[] for _ in range(n)]
        sigma = [0] * n
        dist = [-1] * n
        sigma[s] = 1
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = [0.0] * n
        for w in reversed(order):
            for v in preds[w]:
                c = sigma[v] / sigma[w] * (1.0 + delta[w])
                if edges:
                    key = (v, w) if g.directed or v < w else (w, v)
                    edge_bc[key] = edge_bc.get(key, 0.0) + c
                delta[v] += c
            if w != s:
                node_bc[w] += delta[w]
    factor = scale * (1.0 if g.directed else 0.5)
    ids = csr.ids.tolist()
    if edges:
        out = {}
        for u in range(n):
            for w in adj[u]:
                if u == w or (not g.directed and w < u):
                    continue
                out[(ids[u], ids[w])] = edge_bc.get((u, w), 0.0) * factor
        return out
    return {ids[v]: node_bc[v] * factor for v in range(n)}


def betweenness(g, sample_fraction=1.0, seed=None):
    """Brandes node betweenness (unnormalized; undirected pairs counted once).

    With ``sample_fraction < 1`` only ``round(fraction * n)`` random sources
    are expanded and scores are scaled by ``n / sources``.
    """
    return _brandes(g, sample_fraction, seed, edges=False)


def edge_betweenness(g, sample_fraction=1.0, seed=None):
    """Brandes edge betweenness keyed by ``(src, dst)`` (``src <= dst`` on
    undirected graphs)."""
    return _brandes(g, sample_fraction, seed, edges=True)


def eigenvector_centrality(g):
    """Leading adjacency eigenvector, L1-normalized.

    The shifted power iteration keeps every entry non-negative, so the
    normalization is a plain sum.
    """
    res = leading_eigenvalue(g)
    total = sum(res.vector.values())
    if total == 0:
        return EigenCentrality(dict(res.vector), res.converged)
    return EigenCentrality({k: v / total for k, v in res.vector.items()}, res.converged)
