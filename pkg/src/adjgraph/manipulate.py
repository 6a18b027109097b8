"""Subgraphs, container conversions and connected components."""
from __future__ import annotations

from collections import deque

import numpy as np

from .attributes import AttrNetwork
from .core import DirectedGraph, DirectedMultigraph, UndirectedGraph, edge_arrays
from .errors import ParameterError

_KINDS = {
    "undirected": UndirectedGraph,
    "directed": DirectedGraph,
    "multigraph": DirectedMultigraph,
    "attr": AttrNetwork,
}


def _copy_attrs(src, dst):
    for kind in ("node", "edge"):
        for name, col in src._cols[kind].items():
            dst.declare_attr(kind, name, col.tag, col.default)
        targets = dst.nodes() if kind == "node" else sorted(dst._edges)
        for t in targets:
            for name in src._cols[kind]:
                if not src.is_default(kind, t, name):
                    dst.set_attr(kind, t, name, src.get_attr(kind, t, name))


def subgraph(g, node_ids):
    """Induced subgraph on the ids present in ``g``; ids, edge ids and
    attribute values of surviving elements are preserved."""
    ids = np.asarray(g.nodes(), dtype=np.int64)
    wanted = np.fromiter((int(x) for x in node_ids), dtype=np.int64)
    keep = ids[np.isin(ids, wanted)]
    cls = type(g)
    if g.multigraph:
        eids, src, dst = g._edge_arrays()
        mask = np.isin(src, keep) & np.isin(dst, keep)
        h = cls.from_edges(src[mask], dst[mask], nodes=keep, eids=eids[mask])
        if isinstance(g, AttrNetwork):
            _copy_attrs(g, h)
        return h
    src, dst = edge_arrays(g)
    mask = np.isin(src, keep) & np.isin(dst, keep)
    return cls.from_edges(src[mask], dst[mask], nodes=keep)


def convert(g, target):
    """Convert ``g`` to the container kind ``target``.

    ``target`` is ``"undirected"``, ``"directed"``, ``"multigraph"``,
    ``"attr"`` or a container class. Directed to undirected collapses
    reciprocal edges; undirected to directed emits both orientations;
    multigraph to simple collapses parallel edges.
    """
    if isinstance(target, str):
        if target not in _KINDS:
            raise ParameterError(f"unknown container kind {target!r}; expected one of {', '.join(_KINDS)}")
        cls = _KINDS[target]
    else:
        cls = target
    if type(g) is cls:
        return g.copy()
    ids = np.asarray(g.nodes(), dtype=np.int64)
    src, dst = edge_arrays(g)
    if not g.directed and cls.directed:
        loop = src == dst
        src, dst = np.concatenate([src, dst[~loop]]), np.concatenate([dst, src[~loop]])
    if cls.multigraph:
        if g.multigraph:
            eids, src, dst = g._edge_arrays()
            h = cls.from_edges(src, dst, nodes=ids, eids=eids)
            if isinstance(g, AttrNetwork):
                _copy_attrs(g, h)
            return h
        return cls.from_edges(src, dst, nodes=ids)
    return cls.from_edges(src, dst, nodes=ids)


def _components_from_labels(ids, labels):
    order = np.lexsort((ids, labels))
    bounds = np.flatnonzero(np.diff(labels[order])) + 1
    comps = [part.tolist() for part in np.split(ids[order], bounds)] if len(ids) else []
    comps.sort(key=lambda c: c[0])
    return comps


def weakly_connected_components(g):
    """Partition of node ids by BFS over direction-ignored edges.

    Each class is an ascending id list; classes are ordered by their
    smallest id.
    """
    csr = g.to_csr("both")
    n = csr.n
    indptr = csr.indptr.tolist()
    indices = csr.indices.tolist()
    label = [-1] * n
    for root in range(n):
        if label[root] >= 0:
            continue
        label[root] = root
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in indices[indptr[u] : indptr[u + 1]]:
                if label[w] < 0:
                    label[w] = root
                    queue.append(w)
    return _components_from_labels(csr.ids, np.asarray(label, dtype=np.int64))


def strongly_connected_components(g):
    """Iterative Tarjan over out-edges; same ordering as the weak variant.

    Undirected graphs are treated as symmetric digraphs.
    """
    csr = g.to_csr("out")
    n = csr.n
    indptr = csr.indptr.tolist()
    indices = csr.indices.tolist()
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    label = [-1] * n
    stack = []
    counter = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, indptr[root])]
        while work:
            v, i = work[-1]
            end = indptr[v + 1]
            while i < end:
                w = indices[i]
                i += 1
                if index[w] < 0:
                    work[-1] = (v, i)
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, indptr[w]))
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            else:
                work.pop()
                if low[v] == index[v]:
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        label[w] = v
                        if w == v:
                            break
                if work:
                    parent = work[-1][0]
                    if low[v] < low[parent]:
                        low[parent] = low[v]
    return _components_from_labels(csr.ids, np.asarray(label, dtype=np.int64))


def _largest(comps):
    if not comps:
        return []
    # comps are ordered by smallest id, so max() keeps the first of equal size
    return max(comps, key=len)


def largest_wcc(g):
    return subgraph(g, _largest(weakly_connected_components(g)))


def largest_scc(g):
    return subgraph(g, _largest(strongly_connected_components(g)))
