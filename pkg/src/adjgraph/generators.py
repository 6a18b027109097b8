"""Regular and seeded random graph generators.

Every random generator is a pure function of its parameters and ``seed``.
Scalar sampling uses :class:`random.Random` (MT19937); the vectorized
Kronecker sampler uses numpy's PCG64 seeded with the same value.
"""
from __future__ import annotations

import math
import random
from collections import Counter, deque

import numpy as np

from .core import DirectedGraph, UndirectedGraph
from .errors import ConvergenceError, ParameterError

PRNG_NAME = "MT19937"

_COIN_FLIP_MAX_NODES = 2**13


def _rng(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _with_nodes(cls, n):
    g = cls(n)
    for i in range(n):
        g.add_node(i)
    return g


# regular graphs -----------------------------------------------------------

def complete(n):
    if n < 1:
        raise ParameterError("complete graph needs n >= 1")
    g = _with_nodes(UndirectedGraph, n)
    for u in range(n):
        for v in range(u + 1, n):
            g.add_edge(u, v)
    return g


def circle(n):
    if n < 3:
        raise ParameterError("circle needs n >= 3")
    g = _with_nodes(UndirectedGraph, n)
    for u in range(n):
        g.add_edge(u, (u + 1) % n)
    return g


def grid(rows, cols):
    if rows < 1 or cols < 1:
        raise ParameterError("grid needs positive dimensions")
    g = _with_nodes(UndirectedGraph, rows * cols)
    for r in range(rows):
        for c in range(cols):
            u = r * cols + c
            if c + 1 < cols:
                g.add_edge(u, u + 1)
            if r + 1 < rows:
                g.add_edge(u, u + cols)
    return g


def star(n):
    """Center 0 joined to leaves ``1..n-1``."""
    if n < 1:
        raise ParameterError("star needs n >= 1")
    g = _with_nodes(UndirectedGraph, n)
    for v in range(1, n):
        g.add_edge(0, v)
    return g


def tree(fanout, depth):
    """Complete ``fanout``-ary tree; children of ``i`` are ``fanout*i+1 ..``."""
    if fanout < 1 or depth < 0:
        raise ParameterError("tree needs fanout >= 1 and depth >= 0")
    n = depth + 1 if fanout == 1 else (fanout ** (depth + 1) - 1) // (fanout - 1)
    g = _with_nodes(UndirectedGraph, n)
    for v in range(1, n):
        g.add_edge((v - 1) // fanout, v)
    return g


_REGULAR = {"complete": complete, "circle": circle, "grid": grid, "star": star, "tree": tree}


def gen_regular(shape, *args, **params):
    try:
        fn = _REGULAR[shape]
    except KeyError:
        raise ParameterError(f"unknown shape {shape!r}; choose from {sorted(_REGULAR)}") from None
    return fn(*args, **params)


# basic random graphs -------------------------------------------------------

def gen_gnm(n, m, directed=False, seed=None):
    """Erdős–Rényi G(n, m): exactly ``m`` distinct edges, no self-loops."""
    if n < 0 or m < 0:
        raise ParameterError("n and m must be non-negative")
    max_m = n * (n - 1) if directed else n * (n - 1) // 2
    if m > max_m:
        raise ParameterError(f"m={m} exceeds the {max_m} possible edges on {n} nodes")
    rng = _rng(seed)
    cls = DirectedGraph if directed else UndirectedGraph
    # rejection-sample m distinct pairs, then build all vectors in one pass
    randrange = rng.randrange
    keys = set()
    add = keys.add
    while len(keys) < m:
        u = randrange(n)
        v = randrange(n)
        if u != v:
            add(u * n + v if directed or u < v else v * n + u)
    k = np.fromiter(keys, dtype=np.int64, count=m)
    return cls.from_edges(k // max(n, 1), k % max(n, 1), nodes=np.arange(n))


def gen_bipartite_random(n1, n2, m, seed=None):
    """Random bipartite graph: left ids ``0..n1-1``, right ``n1..n1+n2-1``."""
    if n1 < 0 or n2 < 0 or m < 0:
        raise ParameterError("sizes must be non-negative")
    if m > n1 * n2:
        raise ParameterError(f"m={m} exceeds n1*n2={n1 * n2}")
    rng = _rng(seed)
    g = _with_nodes(UndirectedGraph, n1 + n2)
    for cell in rng.sample(range(n1 * n2), m):
        g.add_edge(cell // n2, n1 + cell % n2)
    return g


def _has_valid_pair(stubs, adj):
    nodes = sorted(set(stubs))
    for i, u in enumerate(nodes):
        for v in nodes[i + 1 :]:
            if v not in adj[u]:
                return True
    return False


def gen_constant_degree(n, k, seed=None, max_restarts=100):
    """Random k-regular simple graph by stub pairing with redraws.

    Invalid pairs (self-loop, duplicate) are redrawn; when no valid pair is
    left among the open stubs the whole pairing restarts.
    """
    if k < 0 or n < 1 or k >= n or (n * k) % 2:
        raise ParameterError("need 0 <= k < n and n*k even")
    rng = _rng(seed)
    for _ in range(max_restarts):
        stubs = [v for v in range(n) for _ in range(k)]
        adj = [set() for _ in range(n)]
        stuck = False
        while stubs:
            for _ in range(50):
                i = rng.randrange(len(stubs))
                j = rng.randrange(len(stubs))
                u, v = stubs[i], stubs[j]
                if u != v and v not in adj[u]:
                    break
            else:
                if not _has_valid_pair(stubs, adj):
                    stuck = True
                    break
                continue
            adj[u].add(v)
            adj[v].add(u)
            for idx in sorted((i, j), reverse=True):
                stubs[idx] = stubs[-1]
                stubs.pop()
        if not stuck:
            g = _with_nodes(UndirectedGraph, n)
            for u in range(n):
                for v in adj[u]:
                    if u < v:
                        g.add_edge(u, v)
            return g
    raise ConvergenceError(f"no {k}-regular pairing found after {max_restarts} restarts")


def is_graphical(seq):
    """Erdős–Gallai test for a simple undirected degree sequence."""
    d = np.sort(np.asarray(seq, dtype=np.int64))[::-1]
    n = len(d)
    if n == 0:
        return True
    if d[-1] < 0 or d.sum() % 2:
        return False
    k = np.arange(1, n + 1)
    prefix = np.concatenate([[0], np.cumsum(d)])
    # c = #{i : d_i >= k}; positions [k, max(k, c)) contribute k, the rest d_i
    c = n - np.searchsorted(d[::-1], k, side="left")
    j = np.maximum(k, c)
    rhs = k * (k - 1) + k * (j - k) + (prefix[-1] - prefix[j])
    return bool(np.all(prefix[1:] <= rhs))


def _havel_hakimi(seq):
    edges = []
    rem = {i: d for i, d in enumerate(seq)}
    while True:
        order = sorted((v for v in rem if rem[v] > 0), key=lambda v: (-rem[v], v))
        if not order:
            return edges
        u = order[0]
        need = rem[u]
        targets = order[1 : need + 1]
        if len(targets) < need:
            raise ParameterError("degree sequence is not graphical")
        rem[u] = 0
        for v in targets:
            rem[v] -= 1
            edges.append((u, v))


def _key(u, v):
    return (u, v) if u < v else (v, u)


def _repair(edges, rng, max_passes):
    """Double-edge swaps until no self-loops or parallel edges remain."""
    count = Counter(_key(u, v) for u, v in edges)
    m = len(edges)
    for _ in range(max_passes):
        bad = [i for i, (u, v) in enumerate(edges) if u == v or count[_key(u, v)] > 1]
        if not bad:
            return True
        for i in bad:
            a, b = edges[i]
            if a != b and count[_key(a, b)] == 1:
                continue
            for _ in range(20):
                j = rng.randrange(m)
                if j == i:
                    continue
                c, d = edges[j]
                if rng.random() < 0.5:
                    c, d = d, c
                if a == d or c == b:
                    continue
                k1, k2 = _key(a, d), _key(c, b)
                if k1 == k2 or count[k1] or count[k2]:
                    continue
                count[_key(a, b)] -= 1
                count[_key(c, d)] -= 1
                count[k1] += 1
                count[k2] += 1
                edges[i] = (a, d)
                edges[j] = (c, b)
                break
    return False


def gen_degree_sequence(seq, seed=None):
    """Simple graph where node ``i`` has degree ``seq[i]`` exactly.

    Stubs are matched at random and collisions repaired by double-edge
    swaps. Sequences whose repair stalls (very dense ones) are realized by
    Havel–Hakimi followed by a full round of degree-preserving swaps.
    """
    seq = [int(d) for d in seq]
    if not is_graphical(seq):
        raise ParameterError("degree sequence is not graphical")
    rng = _rng(seed)
    n = len(seq)
    stubs = [v for v, d in enumerate(seq) for _ in range(d)]
    rng.shuffle(stubs)
    edges = list(zip(stubs[0::2], stubs[1::2]))
    g = _with_nodes(UndirectedGraph, n)
    if _repair(edges, rng, max_passes=200):
        for u, v in edges:
            g.add_edge(u, v)
        return g
    for u, v in _havel_hakimi(seq):
        g.add_edge(u, v)
    return rewire(g, 1.0, seed=rng, inplace=True)


def gen_configuration_model(seq, seed=None):
    """Erased configuration model: random stub matching with self-loops and
    parallel edges dropped (degrees are therefore at most ``seq[i]``)."""
    if any(d < 0 for d in seq) or sum(seq) % 2:
        raise ParameterError("degrees must be non-negative with an even sum")
    rng = _rng(seed)
    stubs = [v for v, d in enumerate(seq) for _ in range(d)]
    rng.shuffle(stubs)
    g = _with_nodes(UndirectedGraph, len(seq))
    for u, v in zip(stubs[0::2], stubs[1::2]):
        if u != v:
            g.add_edge(u, v)
    return g


# growth and small-world models -------------------------------------------

def gen_barabasi_albert(n, k_out, seed=None):
    """Preferential attachment from a ``k_out``-node clique."""
    if not (n > k_out >= 1):
        raise ParameterError("need n > k_out >= 1")
    rng = _rng(seed)
    g = _with_nodes(UndirectedGraph, k_out)
    ends = []
    for u in range(k_out):
        for v in range(u + 1, k_out):
            g.add_edge(u, v)
            ends += (u, v)
    for v in range(k_out, n):
        g.add_node(v)
        chosen = set()
        while len(chosen) < k_out:
            chosen.add(ends[rng.randrange(len(ends))] if ends else rng.randrange(v))
        for t in sorted(chosen):
            g.add_edge(v, t)
            ends += (v, t)
    return g


def gen_watts_strogatz(n, k_half, beta, seed=None):
    """Ring lattice (``k_half`` neighbors per side) with each lattice edge's
    far endpoint rewired with probability ``beta``."""
    if not 0 <= beta <= 1 or k_half < 1 or n <= 2 * k_half:
        raise ParameterError("need 0 <= beta <= 1, k_half >= 1, n > 2*k_half")
    rng = _rng(seed)
    g = _with_nodes(UndirectedGraph, n)
    for u in range(n):
        for j in range(1, k_half + 1):
            g.add_edge(u, (u + j) % n)
    if beta == 0:
        return g
    for j in range(1, k_half + 1):
        for u in range(n):
            if rng.random() >= beta or g.degree(u) >= n - 1:
                continue
            while True:
                w = rng.randrange(n)
                if w != u and not g.is_edge(u, w):
                    break
            g.del_edge(u, (u + j) % n)
            g.add_edge(u, w)
    return g


def gen_rmat(scale, m, a, b, c, seed=None):
    """R-MAT: ``m`` distinct directed edges by recursive quadrant descent.

    Self-loops and duplicates are redrawn, so ``a=b=c=0.25`` reproduces the
    directed G(n, m) distribution.
    """
    d = 1.0 - a - b - c
    if min(a, b, c) < 0 or d < -1e-12:
        raise ParameterError("need a, b, c >= 0 and a + b + c <= 1")
    if not 0 <= scale <= 30:
        raise ParameterError("scale must be in [0, 30]")
    n = 1 << scale
    if m > n * (n - 1):
        raise ParameterError(f"m={m} exceeds {n * (n - 1)} possible edges")
    rng = _rng(seed)
    g = _with_nodes(DirectedGraph, n)
    ab, abc = a + b, a + b + c
    rand = rng.random
    done = 0
    while done < m:
        u = v = 0
        for _ in range(scale):
            r = rand()
            u <<= 1
            v <<= 1
            if r < a:
                pass
            elif r < ab:
                v |= 1
            elif r < abc:
                u |= 1
            else:
                u |= 1
                v |= 1
        if u != v and g.add_edge(u, v):
            done += 1
    return g


def gen_kronecker(initiator, iterations, seed=None):
    """Stochastic Kronecker graph (directed, self-loops allowed).

    Edge ``(u, v)`` appears with probability ``prod_t theta[u_t, v_t]`` over
    the base-k digits of ``u`` and ``v``. Up to 2**13 nodes every cell is
    flipped independently; larger graphs draw ``round((sum theta)**iters)``
    distinct edges by weighted digit descent.
    """
    theta = np.asarray(initiator, dtype=float)
    if theta.ndim != 2 or theta.shape[0] != theta.shape[1] or theta.shape[0] < 2:
        raise ParameterError("initiator must be a k x k matrix with k >= 2")
    if np.any(theta < 0) or np.any(theta > 1):
        raise ParameterError("initiator entries must lie in [0, 1]")
    k = theta.shape[0]
    if iterations < 1 or k**iterations > 2**30:
        raise ParameterError("need iterations >= 1 and k**iterations <= 2**30")
    n = k**iterations
    rng = np.random.default_rng(seed if not isinstance(seed, random.Random) else seed.getrandbits(63))
    src_parts, dst_parts = [], []
    if n <= _COIN_FLIP_MAX_NODES:
        lo_iters = min(iterations, 6)
        lo = np.ones((1, 1))
        for _ in range(lo_iters):
            lo = np.kron(lo, theta)
        hi_iters = iterations - lo_iters
        lo_n = k**lo_iters
        for hi in range(k**hi_iters):
            digits = [(hi // k ** (hi_iters - 1 - t)) % k for t in range(hi_iters)]
            hi_p = np.ones((1, 1))
            for dgt in digits:
                hi_p = np.kron(hi_p, theta[dgt][None, :])
            block = np.kron(hi_p, lo)  # rows hi*lo_n.., all n columns
            r, cidx = np.nonzero(rng.random(block.shape) < block)
            src_parts.append(r + hi * lo_n)
            dst_parts.append(cidx)
        src = np.concatenate(src_parts)
        dst = np.concatenate(dst_parts)
    else:
        total = theta.sum()
        target = min(int(round(total**iterations)), n * n)
        p = (theta / total).ravel()
        keys = np.zeros(0, dtype=np.int64)
        for _ in range(1000):
            need = target - len(keys)
            if need <= 0:
                break
            cells = rng.choice(k * k, size=(need, iterations), p=p)
            weights = k ** np.arange(iterations - 1, -1, -1, dtype=np.int64)
            u = (cells // k) @ weights
            v = (cells % k) @ weights
            keys = np.unique(np.concatenate([keys, u * n + v]))
        src, dst = keys[:target] // n, keys[:target] % n
    return DirectedGraph.from_edges(src, dst, nodes=np.arange(n))


def _geometric(rng, p):
    """Failures before the first success with success probability ``1 - p``."""
    x = 0
    while rng.random() < p:
        x += 1
    return x


def gen_forest_fire(n, p_fwd, p_bwd, seed=None):
    """Forest Fire model with geometric burning (directed)."""
    if not (0 <= p_fwd < 1 and 0 <= p_bwd < 1) or n < 0:
        raise ParameterError("need 0 <= p_fwd, p_bwd < 1 and n >= 0")
    rng = _rng(seed)
    g = DirectedGraph(n)
    if n:
        g.add_node(0)
    for v in range(1, n):
        g.add_node(v)
        amb = rng.randrange(v)
        burned = {amb}
        queue = deque([amb])
        while queue:
            x = queue.popleft()
            for nbrs, p in ((g.out_neighbors(x), p_fwd), (g.in_neighbors(x), p_bwd)):
                want = _geometric(rng, p)
                if not want:
                    continue
                fresh = [w for w in nbrs if w not in burned and w != v]
                for w in rng.sample(fresh, min(want, len(fresh))):
                    burned.add(w)
                    queue.append(w)
        for w in sorted(burned):
            g.add_edge(v, w)
    return g


def gen_copying(n, alpha, seed=None):
    """Single-slot copying model: node ``v`` links to a uniform node with
    probability ``alpha``, otherwise copies a uniform prototype's out-link."""
    if not 0 <= alpha <= 1 or n < 0:
        raise ParameterError("need 0 <= alpha <= 1 and n >= 0")
    rng = _rng(seed)
    g = _with_nodes(DirectedGraph, n)
    for v in range(1, n):
        proto = rng.randrange(v)
        outs = g.out_neighbors(proto)
        if rng.random() < alpha or not outs:
            t = rng.randrange(v)
        else:
            t = outs[rng.randrange(len(outs))]
        g.add_edge(v, t)
    return g


def rewire(g, q, seed=None, inplace=False, max_attempts_factor=100):
    """Degree-preserving randomization by ``round(q * m)`` double-edge swaps.

    Swaps ``(a, b), (c, d) -> (a, d), (c, b)``; swaps creating self-loops or
    duplicate edges are rejected, and self-loop edges are never chosen. On
    directed graphs in- and out-degrees are both preserved.
    """
    if not 0 <= q <= 1:
        raise ParameterError("q must lie in [0, 1]")
    if g.multigraph:
        raise ParameterError("rewire expects a simple graph")
    rng = _rng(seed)
    h = g if inplace else g.copy()
    edges = [(u, v) for u, v in h.edges() if u != v]
    target = round(q * h.get_edges())
    if len(edges) < 2 or target == 0:
        return h
    done = attempts = 0
    limit = max_attempts_factor * target + 100
    while done < target and attempts < limit:
        attempts += 1
        i = rng.randrange(len(edges))
        j = rng.randrange(len(edges))
        if i == j:
            continue
        a, b = edges[i]
        c, d = edges[j]
        if not h.directed and rng.random() < 0.5:
            c, d = d, c
        if a == d or c == b or h.is_edge(a, d) or h.is_edge(c, b):
            continue
        if not h.directed and _key(a, d) == _key(c, b):
            continue
        h.del_edge(a, b)
        h.del_edge(c, d)
        h.add_edge(a, d)
        h.add_edge(c, b)
        edges[i] = (a, d)
        edges[j] = (c, b)
        done += 1
    return h


def power_law_sequence(n, gamma, seed=None, max_retries=100):
    """Graphical degree sequence drawn from ``P(d) ~ d**-gamma`` on
    ``[1, n**(1/(gamma-1))]``; odd sums are fixed by incrementing one node."""
    if gamma <= 1 or n < 2:
        raise ParameterError("need gamma > 1 and n >= 2")
    rng = _rng(seed)
    d_max = max(1, min(n - 1, int(n ** (1.0 / (gamma - 1)))))
    support = range(1, d_max + 1)
    cum = list(np.cumsum([d ** -gamma for d in support]))
    for _ in range(max_retries):
        seq = rng.choices(support, cum_weights=cum, k=n)
        if sum(seq) % 2:
            low = [i for i, d in enumerate(seq) if d < d_max]
            if not low:
                continue
            seq[rng.choice(low)] += 1
        if is_graphical(seq):
            return seq
    raise ConvergenceError("could not draw a graphical power-law sequence")


def gen_power_law(n, gamma, seed=None):
    rng = _rng(seed)
    return gen_degree_sequence(power_law_sequence(n, gamma, rng), rng)


def ws_lattice_clustering(k_half):
    """Closed-form clustering coefficient of the ``beta = 0`` ring lattice."""
    return 3 * (k_half - 1) / (2 * (2 * k_half - 1))


GENERATORS = {
    "complete": complete,
    "circle": circle,
    "grid": grid,
    "star": star,
    "tree": tree,
    "gnm": gen_gnm,
    "bipartite": gen_bipartite_random,
    "regular": gen_constant_degree,
    "degseq": gen_degree_sequence,
    "config": gen_configuration_model,
    "ba": gen_barabasi_albert,
    "ws": gen_watts_strogatz,
    "rmat": gen_rmat,
    "kronecker": gen_kronecker,
    "forestfire": gen_forest_fire,
    "copying": gen_copying,
    "powerlaw": gen_power_law,
}
