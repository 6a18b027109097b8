"""Breadth- and depth-first traversal, shortest paths, diameters and hop plots.

``direction`` selects the orientation on directed graphs: ``out`` follows
edges forward, ``in`` backward, ``both`` ignores direction. Undirected
graphs ignore it. Neighbors are always scanned in ascending id order.
"""
from __future__ import annotations

import random
from collections import deque
from typing import NamedTuple

import numpy as np

from .errors import GraphError, NodeNotFoundError, ParameterError


class PathResult(NamedTuple):
    distance: int | None
    path: list


def _nbr_fn(g, direction):
    if direction not in ("out", "in", "both"):
        raise ParameterError(f"direction must be out, in or both, got {direction!r}")
    if not g.directed or direction == "both":
        return g.neighbors
    return g.out_neighbors if direction == "out" else g.in_neighbors


def _require(g, nid):
    if not g.is_node(nid):
        raise NodeNotFoundError(nid)


def bfs(g, root, direction="out"):
    """Hop distance from ``root`` to every reachable node."""
    _require(g, root)
    nbrs = _nbr_fn(g, direction)
    dist = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in nbrs(u):
            if w not in dist:
                dist[w] = du
                queue.append(w)
    return dist


def dfs(g, root, direction="out"):
    """Iterative depth-first preorder from ``root``."""
    _require(g, root)
    nbrs = _nbr_fn(g, direction)
    seen = {root}
    order = [root]
    stack = [(nbrs(root), 0)]
    while stack:
        lst, i = stack[-1]
        while i < len(lst) and lst[i] in seen:
            i += 1
        if i == len(lst):
            stack.pop()
            continue
        w = lst[i]
        stack[-1] = (lst, i + 1)
        seen.add(w)
        order.append(w)
        stack.append((nbrs(w), 0))
    return order


def shortest_path(g, src, dst, direction="out"):
    """BFS distance and one witness path; each step back from ``dst`` takes
    the smallest-id predecessor on a shortest path."""
    _require(g, src)
    _require(g, dst)
    nbrs = _nbr_fn(g, direction)
    back = _nbr_fn(g, {"out": "in", "in": "out", "both": "both"}[direction])
    dist = {src: 0}
    queue = deque([src])
    while queue and dst not in dist:
        u = queue.popleft()
        du = dist[u] + 1
        for w in nbrs(u):
            if w not in dist:
                dist[w] = du
                queue.append(w)
    if dst not in dist:
        return PathResult(None, [])
    path = [dst]
    x = dst
    while x != src:
        want = dist[x] - 1
        x = min(y for y in back(x) if dist.get(y) == want)
        path.append(x)
    path.reverse()
    return PathResult(dist[dst], path)


# multi-source sweeps ---------------------------------------------------------

def _lists(g, direction):
    if not g.directed:
        direction = "out"
    csr = g.to_csr(direction)
    ptr = csr.indptr.tolist()
    idx = csr.indices.tolist()
    return csr.ids, [idx[ptr[i] : ptr[i + 1]] for i in range(csr.n)]


def _bfs_positions(adj, s, n):
    dist = [-1] * n
    dist[s] = 0
    frontier = [s]
    d = 0
    counts = [1]
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = d
                    nxt.append(w)
        if nxt:
            counts.append(len(nxt))
        frontier = nxt
    return counts


def diameter_exact(g, direction="out"):
    """Largest finite eccentricity over an all-source BFS (O(n*m))."""
    if g.get_nodes() == 0:
        raise GraphError("diameter of an empty graph is undefined")
    ids, adj = _lists(g, direction)
    n = len(ids)
    return max(len(_bfs_positions(adj, s, n)) - 1 for s in range(n))


def _sources(n, sample_sources, seed):
    if sample_sources is None or sample_sources >= n:
        return range(n)
    if sample_sources < 1:
        raise ParameterError("sample_sources must be >= 1")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return sorted(rng.sample(range(n), sample_sources))


def hop_plot(g, sample_sources=None, seed=None, direction="out"):
    """``[(h, p(h))]`` for ``h >= 1``: the fraction of reachable ordered
    pairs (self pairs excluded) within ``h`` hops, from BFS over all or
    ``sample_sources`` random sources."""
    if g.get_nodes() == 0:
        raise GraphError("hop plot of an empty graph is undefined")
    ids, adj = _lists(g, direction)
    n = len(ids)
    hist = np.zeros(1, dtype=np.int64)
    for s in _sources(n, sample_sources, seed):
        counts = _bfs_positions(adj, s, n)
        if len(counts) > len(hist):
            hist = np.concatenate([hist, np.zeros(len(counts) - len(hist), dtype=np.int64)])
        hist[: len(counts)] += counts
    pairs = hist[1:]
    total = int(pairs.sum())
    if total == 0:
        return []
    cdf = np.cumsum(pairs) / total
    return [(h, float(p)) for h, p in enumerate(cdf, start=1)]


def effective_diameter(g, sample_sources=None, seed=None, percentile=0.9, direction="out"):
    """Hop count below which ``percentile`` of reachable pairs fall,
    linearly interpolated between integer hops (with ``p(0) = 0``)."""
    plot = hop_plot(g, sample_sources, seed, direction)
    prev_h, prev_p = 0, 0.0
    for h, p in plot:
        if p >= percentile:
            return prev_h + (percentile - prev_p) / (p - prev_p)
        prev_h, prev_p = h, p
    return 0.0
