"""Graph containers sharing one access interface.

Every container keeps a hash table from node id to an internal slot and,
per slot, one (undirected) or two (directed: out, in) sorted adjacency
vectors. All vectors of a graph live in a single ``array('i')`` pool; a
vector is an ``(offset, length, capacity)`` triple into that pool.
Growing a vector relocates it to a recycled hole of the right capacity or
to the end of the pool, and the pool is compacted once holes exceed a
quarter of it.

Costs: node add/delete/lookup are expected O(1); edge add/delete are
O(deg_max) (binary search plus shift); ``is_edge`` on simple graphs is
O(log deg_max) over the shorter of the two candidate vectors.
"""
from __future__ import annotations

from array import array
from bisect import bisect_left
from typing import Iterator, NamedTuple

import numpy as np

from ._hashtable import NodeTable
from .errors import (
    DuplicateNodeError,
    EdgeNotFoundError,
    InvalidNodeIdError,
    NodeNotFoundError,
)

MAX_NODE_ID = 2**31 - 1

_OUT = 0
_IN = 1
_COMPACT_MIN_POOL = 4096


def _next_cap(cap):
    return cap + (cap >> 1) if cap >= 2 else 2


def _check_id(nid):
    if not isinstance(nid, (int, np.integer)) or isinstance(nid, bool):
        raise InvalidNodeIdError(f"node id must be an integer, got {nid!r}")
    if nid < 0 or nid > MAX_NODE_ID:
        raise InvalidNodeIdError(f"node id {nid} outside [0, {MAX_NODE_ID}]")
    return int(nid)


class Edge(NamedTuple):
    src: int
    dst: int
    eid: int | None = None


class CSR(NamedTuple):
    """Compressed adjacency snapshot: neighbors of ``ids[i]`` are
    ``ids[indices[indptr[i]:indptr[i + 1]]]``."""

    ids: np.ndarray
    indptr: np.ndarray
    indices: np.ndarray

    @property
    def n(self):
        return len(self.ids)

    def degrees(self):
        return np.diff(self.indptr)


class DegreeSummary(NamedTuple):
    deg_max: int
    histogram: dict

    @property
    def total(self):
        return sum(self.histogram.values())


class NodeView:
    """Cursor on one node; invalidated by any mutation of the graph."""

    __slots__ = ("_g", "_s", "id")

    def __init__(self, g, slot, nid):
        self._g = g
        self._s = slot
        self.id = nid

    def __repr__(self):
        return f"<node {self.id} deg={self.deg}>"

    @property
    def deg(self):
        return self._g._deg_slot(self._s)

    @property
    def out_deg(self):
        return self._g._len[_OUT][self._s]

    @property
    def in_deg(self):
        g = self._g
        return g._len[_IN if g.directed else _OUT][self._s]

    def out_nbr(self, k):
        """Id of the k-th out-neighbor."""
        return self._g._nbr_at(_OUT, self._s, k)

    def in_nbr(self, k):
        g = self._g
        return g._nbr_at(_IN if g.directed else _OUT, self._s, k)

    nbr = out_nbr

    def out_nbrs(self):
        return self._g.out_neighbors(self.id)

    def in_nbrs(self):
        return self._g.in_neighbors(self.id)

    def nbrs(self):
        return self._g.neighbors(self.id)

    def is_out_nbr(self, nid):
        return self._g.is_edge(self.id, nid)

    def is_in_nbr(self, nid):
        return self._g.is_edge(nid, self.id)


class _Graph:
    directed = False
    multigraph = False
    tag = 0
    _nvec = 1

    def __init__(self, capacity_hint=0):
        self._reset(capacity_hint)

    def _reset(self, capacity_hint=0):
        self._table = NodeTable(capacity_hint)
        self._ids = array("i")
        self._off = [array("q") for _ in range(self._nvec)]
        self._len = [array("i") for _ in range(self._nvec)]
        self._cap = [array("i") for _ in range(self._nvec)]
        self._pool = array("i")
        self._holes: dict[int, list] = {}
        self._garbage = 0
        self._free: list[int] = []
        self._order: array | None = array("i")
        self._nedges = 0

    # slots and vectors -------------------------------------------------

    def _slot(self, nid):
        s = self._table.get(nid)
        if s < 0:
            raise NodeNotFoundError(nid)
        return s

    def _new_slot(self, nid):
        end = len(self._pool)
        if self._free:
            s = self._free.pop()
            self._ids[s] = nid
            for k in range(self._nvec):
                self._off[k][s] = end
                self._len[k][s] = 0
                self._cap[k][s] = 0
        else:
            s = len(self._ids)
            self._ids.append(nid)
            for k in range(self._nvec):
                self._off[k].append(end)
                self._len[k].append(0)
                self._cap[k].append(0)
        return s

    def _release_slot(self, s):
        for k in range(self._nvec):
            cap = self._cap[k][s]
            if cap:
                self._holes.setdefault(cap, []).append(self._off[k][s])
                self._garbage += cap
            self._len[k][s] = 0
            self._cap[k][s] = 0
        self._ids[s] = -1
        self._free.append(s)

    def _vec(self, k, s):
        off = self._off[k][s]
        return self._pool[off : off + self._len[k][s]]

    def _grow(self, k, s):
        offa, capa = self._off[k], self._cap[k]
        cap = capa[s]
        new_cap = _next_cap(cap)
        if self._garbage > (len(self._pool) >> 2) and len(self._pool) > _COMPACT_MIN_POOL:
            self.compact()
        pool = self._pool
        off = offa[s]
        ln = self._len[k][s]
        if off + cap == len(pool):
            pool.frombytes(bytes(4 * (new_cap - cap)))
        else:
            holes = self._holes.get(new_cap)
            if holes:
                new_off = holes.pop()
                self._garbage -= new_cap
                pool[new_off : new_off + ln] = pool[off : off + ln]
            else:
                new_off = len(pool)
                pool.extend(pool[off : off + ln])
                pool.frombytes(bytes(4 * (new_cap - ln)))
            if cap:
                self._holes.setdefault(cap, []).append(off)
                self._garbage += cap
            offa[s] = new_off
        capa[s] = new_cap

    def _vinsert(self, k, s, x):
        """Insert ``x`` into a sorted vector; False if already present."""
        pool = self._pool
        off = self._off[k][s]
        ln = self._len[k][s]
        end = off + ln
        i = bisect_left(pool, x, off, end)
        if i < end and pool[i] == x:
            return False
        if ln == self._cap[k][s]:
            rel = i - off
            self._grow(k, s)
            pool = self._pool
            off = self._off[k][s]
            end = off + ln
            i = off + rel
        if i < end:
            pool[i + 1 : end + 1] = pool[i:end]
        pool[i] = x
        self._len[k][s] = ln + 1
        return True

    def _vremove(self, k, s, x):
        pool = self._pool
        off = self._off[k][s]
        end = off + self._len[k][s]
        i = bisect_left(pool, x, off, end)
        if i == end or pool[i] != x:
            return False
        if i < end - 1:
            pool[i : end - 1] = pool[i + 1 : end]
        self._len[k][s] -= 1
        return True

    def _vhas(self, k, s, x):
        pool = self._pool
        off = self._off[k][s]
        end = off + self._len[k][s]
        i = bisect_left(pool, x, off, end)
        return i < end and pool[i] == x

    def compact(self):
        """Rewrite the pool without holes (capacities are kept)."""
        old = self._pool
        new = array("i")
        for k in range(self._nvec):
            offa, lena, capa = self._off[k], self._len[k], self._cap[k]
            for s, nid in enumerate(self._ids):
                if nid < 0:
                    offa[s] = 0
                    continue
                off, ln, cap = offa[s], lena[s], capa[s]
                offa[s] = len(new)
                new.extend(old[off : off + ln])
                if cap > ln:
                    new.frombytes(bytes(4 * (cap - ln)))
        self._pool = new
        self._holes = {}
        self._garbage = 0

    def _nbr_at(self, k, s, i):
        if not 0 <= i < self._len[k][s]:
            raise IndexError(i)
        return self._pool[self._off[k][s] + i]

    def _deg_slot(self, s):
        return self._len[_OUT][s]

    # nodes -------------------------------------------------------------

    def add_node(self, nid=None):
        """Add a node and return its id (``max id + 1`` when omitted)."""
        if nid is None:
            nid = self.max_node_id() + 1
        nid = _check_id(nid)
        if self._table.get(nid) >= 0:
            raise DuplicateNodeError(nid)
        s = self._new_slot(nid)
        self._table.put(nid, s)
        order = self._order
        if order is not None:
            if not order or nid > order[-1]:
                order.append(nid)
            else:
                self._order = None
        return nid

    def _forget_node(self, nid, s):
        self._release_slot(s)
        self._table.pop(nid)
        order = self._order
        if order is not None:
            del order[bisect_left(order, nid)]

    def is_node(self, nid):
        return self._table.get(nid) >= 0

    def __contains__(self, nid):
        return self._table.get(nid) >= 0

    def max_node_id(self):
        order = self._sorted_ids()
        return order[-1] if order else -1

    def get_nodes(self):
        return len(self._table)

    def get_edges(self):
        return self._nedges

    def __len__(self):
        return len(self._table)

    def is_empty(self):
        return len(self._table) == 0

    def clear(self):
        self._reset()

    def _sorted_ids(self):
        if self._order is None:
            self._order = array("i", sorted(i for i in self._ids if i >= 0))
        return self._order

    def nodes(self):
        """Node ids in ascending order (a copy)."""
        return array("i", self._sorted_ids())

    def __iter__(self):
        return iter(self.nodes())

    def node_iter(self) -> Iterator[NodeView]:
        get = self._table.get
        for nid in self.nodes():
            yield NodeView(self, get(nid), nid)

    def get_node(self, nid):
        return NodeView(self, self._slot(nid), nid)

    # degree and neighbor access ---------------------------------------

    def degree(self, nid):
        return self._deg_slot(self._slot(nid))

    def out_degree(self, nid):
        return self._len[_OUT][self._slot(nid)]

    def in_degree(self, nid):
        return self._len[_IN if self.directed else _OUT][self._slot(nid)]

    def out_neighbors(self, nid):
        return self._vec(_OUT, self._slot(nid))

    def in_neighbors(self, nid):
        return self._vec(_IN if self.directed else _OUT, self._slot(nid))

    def neighbors(self, nid):
        return self._vec(_OUT, self._slot(nid))

    def degree_summary(self, mode="all"):
        """Exact degree histogram (``mode`` in ``all``, ``in``, ``out``)."""
        deg = {"all": self.degree, "in": self.in_degree, "out": self.out_degree}[mode]
        hist: dict[int, int] = {}
        for nid in self._sorted_ids():
            d = deg(nid)
            hist[d] = hist.get(d, 0) + 1
        return DegreeSummary(max(hist, default=0), dict(sorted(hist.items())))

    # whole-graph helpers -----------------------------------------------

    def edges(self):
        """``(src, dst)`` pairs in edge-iterator order."""
        for e in self.edge_iter():
            yield e.src, e.dst

    def nbytes(self):
        """Bytes held by the container's buffers (excluding object headers)."""
        total = self._table.nbytes() + self._ids.itemsize * len(self._ids)
        total += self._pool.itemsize * len(self._pool)
        for k in range(self._nvec):
            total += 16 * len(self._ids)
        return total

    def copy(self):
        g = self.__class__.__new__(self.__class__)
        g.__dict__.update(self.__dict__)
        g._table = NodeTable()
        g._table._keys = array("i", self._table._keys)
        g._table._vals = array("i", self._table._vals)
        for attr in ("_bits", "_mask", "_shift", "_size"):
            setattr(g._table, attr, getattr(self._table, attr))
        g._ids = array("i", self._ids)
        g._off = [array("q", a) for a in self._off]
        g._len = [array("i", a) for a in self._len]
        g._cap = [array("i", a) for a in self._cap]
        g._pool = array("i", self._pool)
        g._holes = {c: list(v) for c, v in self._holes.items()}
        g._free = list(self._free)
        g._order = None if self._order is None else array("i", self._order)
        return g

    def _csr_from_vectors(self, k):
        ids_np = np.frombuffer(self._ids, dtype=np.int32).copy()
        live = np.flatnonzero(ids_np >= 0)
        slots = live[np.argsort(ids_np[live], kind="stable")]
        ids = ids_np[slots].astype(np.int64)
        lens = np.frombuffer(self._len[k], dtype=np.int32)[slots].astype(np.int64)
        offs = np.frombuffer(self._off[k], dtype=np.int64)[slots]
        indptr = np.zeros(len(slots) + 1, dtype=np.int64)
        np.cumsum(lens, out=indptr[1:])
        total = int(indptr[-1])
        gather = np.repeat(offs - indptr[:-1], lens) + np.arange(total, dtype=np.int64)
        view = np.frombuffer(self._pool, dtype=np.int32)
        vals = view[gather].astype(np.int64)
        del view
        return ids, indptr, vals

    def to_csr(self, direction="out"):
        """Snapshot the adjacency as a :class:`CSR` with positional indices.

        ``direction`` is ``out``, ``in`` or ``both`` (union, no duplicates
        for simple graphs). Undirected graphs ignore it.
        """
        if not self.directed:
            direction = "out"
        if direction == "both":
            o = self.to_csr("out")
            i = self.to_csr("in")
            rows = np.concatenate([np.repeat(np.arange(o.n), np.diff(o.indptr)),
                                   np.repeat(np.arange(i.n), np.diff(i.indptr))])
            cols = np.concatenate([o.indices, i.indices])
            return _csr_from_pairs(o.ids, rows, cols, dedupe=not self.multigraph)
        ids, indptr, vals = self._csr_from_vectors(_OUT if direction == "out" else _IN)
        return CSR(ids, indptr, np.searchsorted(ids, vals))

    def dump(self):
        """Human-readable listing, one line per node in ascending id order."""
        kind = type(self).__name__
        lines = [f"{kind}: nodes {self.get_nodes()}, edges {self.get_edges()}"]
        for nid in self._sorted_ids():
            s = self._table.get(nid)
            if self.directed:
                out = " ".join(map(str, self._vec(_OUT, s)))
                inn = " ".join(map(str, self._vec(_IN, s)))
                lines.append(f"  {nid}: out [{out}] in [{inn}]")
            else:
                lines.append(f"  {nid}: [{' '.join(map(str, self._vec(_OUT, s)))}]")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"<{type(self).__name__} nodes={self.get_nodes()} edges={self.get_edges()}>"

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        if self._nedges != other._nedges or self.nodes() != other.nodes():
            return False
        for nid in self._sorted_ids():
            s, t = self._table.get(nid), other._table.get(nid)
            for k in range(self._nvec):
                if self._vec(k, s) != other._vec(k, t):
                    return False
        return True

    __hash__ = None

    def check_invariants(self):
        """Full recount of every structural invariant; raises AssertionError."""
        seen = 0
        for nid, s in self._table.items():
            assert self._ids[s] == nid, "slot/id mismatch"
            seen += 1
            for k in range(self._nvec):
                v = self._vec(k, s)
                assert self._len[k][s] <= self._cap[k][s]
                assert all(v[i] < v[i + 1] for i in range(len(v) - 1)), f"unsorted vector at {nid}"
        assert seen == len(self._table) == sum(1 for i in self._ids if i >= 0)
        if self._order is not None:
            assert list(self._order) == sorted(i for i in self._ids if i >= 0)
        self._check_edges()

    def _check_edges(self):
        raise NotImplementedError


def _csr_from_pairs(ids, rows, cols, dedupe=True):
    n = len(ids)
    if dedupe:
        key = np.unique(rows.astype(np.int64) * max(n, 1) + cols)
        rows, cols = key // max(n, 1), key % max(n, 1)
    else:
        order = np.lexsort((cols, rows))
        rows, cols = rows[order], cols[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(rows, minlength=n), out=indptr[1:])
    return CSR(ids, indptr, cols.astype(np.int64))


def _as_id_array(values):
    arr = np.asarray(values, dtype=np.int64).ravel()
    if arr.size and (arr.min() < 0 or arr.max() > MAX_NODE_ID):
        bad = arr[(arr < 0) | (arr > MAX_NODE_ID)][0]
        raise InvalidNodeIdError(f"node id {bad} outside [0, {MAX_NODE_ID}]")
    return arr


class UndirectedGraph(_Graph):
    """Undirected simple graph; a self-loop is stored once in its node's vector."""

    tag = 1

    def add_edge(self, src, dst):
        """Add ``{src, dst}``; returns False if the edge already existed."""
        su, sv = self._slot(src), self._slot(dst)
        if not self._vinsert(_OUT, su, dst):
            return False
        if su != sv:
            self._vinsert(_OUT, sv, src)
        self._nedges += 1
        return True

    def del_edge(self, src, dst):
        su, sv = self._table.get(src), self._table.get(dst)
        if su < 0 or sv < 0 or not self._vremove(_OUT, su, dst):
            raise EdgeNotFoundError(src, dst)
        if su != sv:
            self._vremove(_OUT, sv, src)
        self._nedges -= 1

    def is_edge(self, src, dst):
        su = self._table.get(src)
        sv = self._table.get(dst)
        if su < 0 or sv < 0:
            return False
        lens = self._len[_OUT]
        if lens[su] <= lens[sv]:
            return self._vhas(_OUT, su, dst)
        return self._vhas(_OUT, sv, src)

    def del_node(self, nid):
        s = self._slot(nid)
        nbrs = self._vec(_OUT, s)
        get = self._table.get
        for w in nbrs:
            if w != nid:
                self._vremove(_OUT, get(w), nid)
        self._nedges -= len(nbrs)
        self._forget_node(nid, s)

    def edge_iter(self) -> Iterator[Edge]:
        get = self._table.get
        pool = self._pool
        for u in self.nodes():
            s = get(u)
            off = self._off[_OUT][s]
            end = off + self._len[_OUT][s]
            for i in range(bisect_left(pool, u, off, end), end):
                yield Edge(u, pool[i])

    def _check_edges(self):
        total = loops = 0
        for nid, s in self._table.items():
            v = self._vec(_OUT, s)
            total += len(v)
            for w in v:
                if w == nid:
                    loops += 1
                else:
                    assert self.is_node(w) and self._vhas(_OUT, self._table.get(w), nid), \
                        f"asymmetric edge {nid}-{w}"
        assert (total + loops) % 2 == 0 and self._nedges == (total + loops) // 2, "edge counter"

    @classmethod
    def from_edges(cls, src, dst, nodes=()):
        """Bulk-build from parallel endpoint arrays (duplicates collapse)."""
        src, dst, nodes = _as_id_array(src), _as_id_array(dst), _as_id_array(nodes)
        if len(src) != len(dst):
            raise ValueError("src and dst lengths differ")
        ids = np.unique(np.concatenate([nodes, src, dst]))
        a = np.minimum(src, dst)
        b = np.maximum(src, dst)
        und = np.unique(a * (MAX_NODE_ID + 1) + b)
        a, b = und // (MAX_NODE_ID + 1), und % (MAX_NODE_ID + 1)
        loop = a == b
        rows = np.concatenate([a, b[~loop]])
        cols = np.concatenate([b, a[~loop]])
        g = cls(len(ids))
        g._bulk_fill(ids, [(rows, cols)])
        g._nedges = len(a)
        return g

    def _bulk_fill(self, ids, vectors):
        """Populate an empty graph from sorted ``ids`` and per-vector (row, col) id pairs."""
        n = len(ids)
        self._ids = array("i", ids.astype(np.int32).tobytes()) if n else array("i")
        self._order = array("i", self._ids)
        table = self._table
        for s, nid in enumerate(self._ids):
            table.put(nid, s)
        chunks = []
        base = 0
        for k, (rows, cols) in enumerate(vectors):
            order = np.lexsort((cols, rows))
            rows, cols = rows[order], cols[order]
            counts = np.bincount(np.searchsorted(ids, rows), minlength=n).astype(np.int64)
            offs = np.zeros(n, dtype=np.int64)
            if n > 1:
                np.cumsum(counts[:-1], out=offs[1:])
            offs += base
            base += len(cols)
            self._off[k] = array("q", offs.tobytes())
            self._len[k] = array("i", counts.astype(np.int32).tobytes())
            self._cap[k] = array("i", counts.astype(np.int32).tobytes())
            chunks.append(cols.astype(np.int32))
        pool = np.concatenate(chunks) if chunks else np.zeros(0, np.int32)
        self._pool = array("i", pool.tobytes())


class DirectedGraph(UndirectedGraph):
    """Directed simple graph with out- and in-vectors per node."""

    directed = True
    tag = 2
    _nvec = 2

    def _deg_slot(self, s):
        return self._len[_OUT][s] + self._len[_IN][s]

    def add_edge(self, src, dst):
        su, sv = self._slot(src), self._slot(dst)
        if not self._vinsert(_OUT, su, dst):
            return False
        self._vinsert(_IN, sv, src)
        self._nedges += 1
        return True

    def del_edge(self, src, dst):
        su, sv = self._table.get(src), self._table.get(dst)
        if su < 0 or sv < 0 or not self._vremove(_OUT, su, dst):
            raise EdgeNotFoundError(src, dst)
        self._vremove(_IN, sv, src)
        self._nedges -= 1

    def is_edge(self, src, dst):
        su = self._table.get(src)
        sv = self._table.get(dst)
        if su < 0 or sv < 0:
            return False
        if self._len[_OUT][su] <= self._len[_IN][sv]:
            return self._vhas(_OUT, su, dst)
        return self._vhas(_IN, sv, src)

    def neighbors(self, nid):
        s = self._slot(nid)
        return array("i", sorted(set(self._vec(_OUT, s)).union(self._vec(_IN, s))))

    def del_node(self, nid):
        s = self._slot(nid)
        get = self._table.get
        outs = self._vec(_OUT, s)
        ins = self._vec(_IN, s)
        loop = 0
        for w in outs:
            if w == nid:
                loop = 1
            else:
                self._vremove(_IN, get(w), nid)
        for w in ins:
            if w != nid:
                self._vremove(_OUT, get(w), nid)
        self._nedges -= len(outs) + len(ins) - loop
        self._forget_node(nid, s)

    def edge_iter(self) -> Iterator[Edge]:
        get = self._table.get
        for u in self.nodes():
            for v in self._vec(_OUT, get(u)):
                yield Edge(u, v)

    def _check_edges(self):
        n_out = n_in = 0
        get = self._table.get
        for nid, s in self._table.items():
            outs, ins = self._vec(_OUT, s), self._vec(_IN, s)
            n_out += len(outs)
            n_in += len(ins)
            for w in outs:
                assert self.is_node(w) and self._vhas(_IN, get(w), nid), f"duality {nid}->{w}"
            for w in ins:
                assert self.is_node(w) and self._vhas(_OUT, get(w), nid), f"duality {w}->{nid}"
        assert n_out == n_in == self._nedges, "edge counter"

    @classmethod
    def from_edges(cls, src, dst, nodes=()):
        src, dst, nodes = _as_id_array(src), _as_id_array(dst), _as_id_array(nodes)
        if len(src) != len(dst):
            raise ValueError("src and dst lengths differ")
        ids = np.unique(np.concatenate([nodes, src, dst]))
        key = np.unique(src * (MAX_NODE_ID + 1) + dst)
        a, b = key // (MAX_NODE_ID + 1), key % (MAX_NODE_ID + 1)
        g = cls(len(ids))
        g._bulk_fill(ids, [(a, b), (b, a)])
        g._nedges = len(a)
        return g


class DirectedMultigraph(DirectedGraph):
    """Directed multigraph: node vectors hold sorted edge ids, and an edge
    table maps each edge id to its endpoints. Edge ids come from a counter
    and are never reused."""

    multigraph = True
    tag = 3

    def _reset(self, capacity_hint=0):
        super()._reset(capacity_hint)
        self._edges: dict[int, tuple[int, int]] = {}
        self._next_eid = 0

    def copy(self):
        g = super().copy()
        g._edges = dict(self._edges)
        return g

    def add_edge(self, src, dst, eid=None):
        """Add a new edge and return its id; parallel edges are allowed."""
        su, sv = self._slot(src), self._slot(dst)
        if eid is None:
            eid = self._next_eid
        else:
            eid = _check_id(eid)
            if eid in self._edges:
                raise ValueError(f"edge id {eid} already in use")
        self._vinsert(_OUT, su, eid)
        self._vinsert(_IN, sv, eid)
        self._edges[eid] = (src, dst)
        if eid >= self._next_eid:
            self._next_eid = eid + 1
        self._nedges += 1
        return eid

    add_edge_multi = add_edge

    def _edge_ids_between(self, src, dst):
        su, sv = self._table.get(src), self._table.get(dst)
        if su < 0 or sv < 0:
            return []
        edges = self._edges
        if self._len[_OUT][su] <= self._len[_IN][sv]:
            return [e for e in self._vec(_OUT, su) if edges[e][1] == dst]
        return [e for e in self._vec(_IN, sv) if edges[e][0] == src]

    def edge_ids(self, src, dst):
        """All edge ids from ``src`` to ``dst`` in ascending order."""
        return self._edge_ids_between(src, dst)

    def is_edge(self, src, dst):
        return bool(self._edge_ids_between(src, dst))

    def is_edge_id(self, eid):
        return eid in self._edges

    def edge_endpoints(self, eid):
        try:
            return self._edges[eid]
        except KeyError:
            raise EdgeNotFoundError(eid) from None

    def del_edge(self, src, dst):
        """Delete the lowest-id edge from ``src`` to ``dst``."""
        ids = self._edge_ids_between(src, dst)
        if not ids:
            raise EdgeNotFoundError(src, dst)
        self.del_edge_by_id(ids[0])

    def del_edge_by_id(self, eid):
        try:
            src, dst = self._edges.pop(eid)
        except KeyError:
            raise EdgeNotFoundError(eid) from None
        get = self._table.get
        self._vremove(_OUT, get(src), eid)
        self._vremove(_IN, get(dst), eid)
        self._nedges -= 1

    def _drop_edge_row(self, eid):
        """Hook for subclasses holding per-edge data."""

    def del_node(self, nid):
        s = self._slot(nid)
        get = self._table.get
        edges = self._edges
        removed = 0
        for eid in sorted(set(self._vec(_OUT, s)).union(self._vec(_IN, s))):
            src, dst = edges.pop(eid)
            if src != nid:
                self._vremove(_OUT, get(src), eid)
            if dst != nid:
                self._vremove(_IN, get(dst), eid)
            self._drop_edge_row(eid)
            removed += 1
        self._nedges -= removed
        self._forget_node(nid, s)

    def out_edges(self, nid):
        """Ids of out-edges in ascending order."""
        return self._vec(_OUT, self._slot(nid))

    def in_edges(self, nid):
        return self._vec(_IN, self._slot(nid))

    def _nbr_at(self, k, s, i):
        eid = super()._nbr_at(k, s, i)
        return self._edges[eid][1 if k == _OUT else 0]

    def out_neighbors(self, nid):
        edges = self._edges
        return array("i", sorted(edges[e][1] for e in self._vec(_OUT, self._slot(nid))))

    def in_neighbors(self, nid):
        edges = self._edges
        return array("i", sorted(edges[e][0] for e in self._vec(_IN, self._slot(nid))))

    def neighbors(self, nid):
        return array("i", sorted(set(self.out_neighbors(nid)).union(self.in_neighbors(nid))))

    def edge_iter(self) -> Iterator[Edge]:
        edges = self._edges
        for eid in sorted(edges):
            src, dst = edges[eid]
            yield Edge(src, dst, eid)

    def max_edge_id(self):
        return max(self._edges, default=-1)

    def _edge_arrays(self):
        """(eids, src, dst) sorted by edge id."""
        eids = np.fromiter(self._edges.keys(), dtype=np.int64, count=len(self._edges))
        ends = np.fromiter((x for e in self._edges.values() for x in e), dtype=np.int64,
                           count=2 * len(self._edges)).reshape(-1, 2)
        order = np.argsort(eids, kind="stable")
        return eids[order], ends[order, 0], ends[order, 1]

    def to_csr(self, direction="out"):
        if direction == "both":
            return super().to_csr("both")
        ids, indptr, vals = self._csr_from_vectors(_OUT if direction == "out" else _IN)
        eids, src, dst = self._edge_arrays()
        other = dst if direction == "out" else src
        nbr = other[np.searchsorted(eids, vals)] if len(vals) else vals
        rows = np.repeat(np.arange(len(ids)), np.diff(indptr))
        cols = np.searchsorted(ids, nbr)
        return _csr_from_pairs(ids, rows, cols, dedupe=False)

    def dump(self):
        lines = [super().dump().rstrip("\n")]
        for eid in sorted(self._edges):
            lines.append(f"  edge {eid}: {self._edges[eid][0]} -> {self._edges[eid][1]}")
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        eq = super().__eq__(other)
        if eq is not True:
            return eq
        return self._edges == other._edges

    __hash__ = None

    def _check_edges(self):
        get = self._table.get
        n_out = n_in = 0
        for nid, s in self._table.items():
            outs, ins = self._vec(_OUT, s), self._vec(_IN, s)
            n_out += len(outs)
            n_in += len(ins)
            for e in outs:
                assert self._edges[e][0] == nid, f"edge {e} not from {nid}"
            for e in ins:
                assert self._edges[e][1] == nid, f"edge {e} not into {nid}"
        for e, (a, b) in self._edges.items():
            assert self._vhas(_OUT, get(a), e) and self._vhas(_IN, get(b), e), f"edge {e} unlinked"
            assert e < self._next_eid
        assert n_out == n_in == len(self._edges) == self._nedges, "edge counter"

    @classmethod
    def from_edges(cls, src, dst, nodes=(), eids=None):
        """Bulk-build; ``eids`` defaults to ``0..m-1`` in input order."""
        src, dst, nodes = _as_id_array(src), _as_id_array(dst), _as_id_array(nodes)
        if len(src) != len(dst):
            raise ValueError("src and dst lengths differ")
        eids = np.arange(len(src), dtype=np.int64) if eids is None else _as_id_array(eids)
        if len(np.unique(eids)) != len(eids):
            raise ValueError("duplicate edge ids")
        ids = np.unique(np.concatenate([nodes, src, dst]))
        g = cls(len(ids))
        g._bulk_fill(ids, [(src, eids), (dst, eids)])
        g._edges = dict(zip(eids.tolist(), zip(src.tolist(), dst.tolist())))
        g._next_eid = int(eids.max()) + 1 if len(eids) else 0
        g._nedges = len(eids)
        return g


CONTAINERS = {
    "undirected": UndirectedGraph,
    "directed": DirectedGraph,
    "multigraph": DirectedMultigraph,
}


def to_csr(g, direction="out"):
    return g.to_csr(direction)


def edge_arrays(g):
    """``(src, dst)`` numpy arrays in edge-iterator order."""
    if g.multigraph:
        _, src, dst = g._edge_arrays()
        return src, dst
    ids, indptr, vals = g._csr_from_vectors(0)
    rows = np.repeat(ids, np.diff(indptr))
    if not g.directed:
        keep = rows <= vals
        rows, vals = rows[keep], vals[keep]
    return rows, vals
