"""Binary save/load and whitespace-separated edge-list text I/O.

Binary layout (all integers little-endian)::

    header   magic b"GSNB" | version u32 = 1 | container tag u8
             | node count u64 | edge count u64                (25 bytes)
    nodes    per node, ascending id:
             id i32 | out_len u32 | [in_len u32] | out values | [in values]
             (undirected graphs carry a single vector; values are i32 node
             ids, or edge ids for multigraphs)
    edges    multigraphs only: edge count x (eid, src, dst) i32, ascending eid
    attrs    attribute networks only, for kind in (node, edge):
             u32 count, then per attribute: name (u32 length + UTF-8),
             type u8, default value, then one row per node (ascending id)
             or edge (ascending eid): explicit-flag u8 + value

Values: INT as i64, FLOAT as f64, STR as u32 length + UTF-8.
"""
from __future__ import annotations

import io
import os
import struct
import sys
from array import array

import numpy as np

from .attributes import AttrNetwork, AttrType
from .core import MAX_NODE_ID, DirectedGraph, DirectedMultigraph, UndirectedGraph, edge_arrays
from .errors import (
    BadMagicError,
    BadVersionError,
    CountMismatchError,
    GraphFormatError,
    MalformedLineError,
    NegativeIdError,
    TruncatedStreamError,
    UnsortedVectorError,
)

MAGIC = b"GSNB"
VERSION = 1
_HEADER = struct.Struct("<4sIBQQ")
HEADER_SIZE = _HEADER.size

TAGS = {1: UndirectedGraph, 2: DirectedGraph, 3: DirectedMultigraph, 4: AttrNetwork}


def _open(target, mode):
    if isinstance(target, (str, os.PathLike)):
        return open(target, mode), True
    return target, False


# binary ------------------------------------------------------------------

def dumps_binary(g) -> bytes:
    """Serialize ``g``; identical graphs always give identical bytes."""
    vecs = [g._csr_from_vectors(k) for k in range(g._nvec)]
    ids = vecs[0][0]
    n = len(ids)
    hdr = 1 + g._nvec
    lens = [np.diff(indptr) for _, indptr, _ in vecs]
    rec = hdr + sum(lens)
    starts = np.zeros(n, dtype=np.int64)
    if n > 1:
        np.cumsum(rec[:-1], out=starts[1:])
    total = int(starts[-1] + rec[-1]) if n else 0
    body = np.empty(total, dtype="<i4")
    body[starts] = ids
    base = starts + hdr
    for k, (_, indptr, vals) in enumerate(vecs):
        body[starts + 1 + k] = lens[k]
        pos = np.repeat(base - indptr[:-1], lens[k]) + np.arange(len(vals))
        body[pos] = vals
        base = base + lens[k]
    parts = [_HEADER.pack(MAGIC, VERSION, g.tag, n, g.get_edges()), body.tobytes()]
    if g.multigraph:
        eids, src, dst = g._edge_arrays()
        parts.append(np.stack([eids, src, dst], axis=1).astype("<i4").tobytes())
    if isinstance(g, AttrNetwork):
        parts.append(_dump_attrs(g))
    return b"".join(parts)


def save_binary(g, sink) -> int:
    """Write ``g`` to a path or binary stream; returns the byte length."""
    data = dumps_binary(g)
    f, owned = _open(sink, "wb")
    try:
        f.write(data)
    finally:
        if owned:
            f.close()
    return len(data)


def _pack_value(tag, v):
    if tag is AttrType.INT:
        return struct.pack("<q", v)
    if tag is AttrType.FLOAT:
        return struct.pack("<d", v)
    b = v.encode("utf-8")
    return struct.pack("<I", len(b)) + b


def _dump_attrs(g):
    out = io.BytesIO()
    targets = {"node": list(g._sorted_ids()), "edge": sorted(g._edges)}
    for kind in ("node", "edge"):
        cols = g._cols[kind]
        out.write(struct.pack("<I", len(cols)))
        for name, col in cols.items():
            nb = name.encode("utf-8")
            out.write(struct.pack("<I", len(nb)) + nb + struct.pack("<B", col.tag))
            out.write(_pack_value(col.tag, col.default))
            for t in targets[kind]:
                flag = 0 if g.is_default(kind, t, name) else 1
                out.write(struct.pack("<B", flag))
                out.write(_pack_value(col.tag, g.get_attr(kind, t, name)))
    return out.getvalue()


class _Reader:
    """Byte cursor raising TruncatedStreamError on short reads."""

    def __init__(self, buf, pos):
        self.buf = buf
        self.pos = pos

    def take(self, n):
        if self.pos + n > len(self.buf):
            raise TruncatedStreamError(f"need {n} bytes at offset {self.pos}, stream has {len(self.buf)}")
        out = self.buf[self.pos : self.pos + n]
        self.pos += n
        return out

    def unpack(self, fmt):
        s = struct.Struct(fmt)
        return s.unpack(self.take(s.size))

    def value(self, tag):
        if tag is AttrType.INT:
            return self.unpack("<q")[0]
        if tag is AttrType.FLOAT:
            return self.unpack("<d")[0]
        (n,) = self.unpack("<I")
        try:
            return bytes(self.take(n)).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise GraphFormatError(f"invalid UTF-8 in attribute data: {exc}") from None


def loads_binary(buf):
    """Inverse of :func:`dumps_binary`."""
    buf = memoryview(buf).cast("B")
    if len(buf) < HEADER_SIZE:
        if bytes(buf[:4]) != MAGIC[: len(buf)]:
            raise BadMagicError("not a graph file (bad magic)")
        raise TruncatedStreamError(f"header needs {HEADER_SIZE} bytes, got {len(buf)}")
    magic, version, tag, n, m = _HEADER.unpack_from(buf, 0)
    if magic != MAGIC:
        raise BadMagicError(f"bad magic {bytes(magic)!r}, expected {MAGIC!r}")
    if version != VERSION:
        raise BadVersionError(f"unsupported version {version}, expected {VERSION}")
    if tag not in TAGS:
        raise GraphFormatError(f"unknown container tag {tag}")
    cls = TAGS[tag]
    nvec = cls._nvec
    hdr = 1 + nvec
    nwords = (len(buf) - HEADER_SIZE) // 4
    words = np.frombuffer(buf, dtype="<i4", count=nwords, offset=HEADER_SIZE)
    if n > nwords:
        raise TruncatedStreamError(f"header claims {n} nodes but stream holds {nwords} words")

    # record scan: the only sequential step
    starts = np.empty(n, dtype=np.int64)
    wl = words.tolist() if n else []
    pos = 0
    for i in range(n):
        if pos + hdr > nwords:
            raise TruncatedStreamError(f"node record {i} cut short")
        starts[i] = pos
        ln = wl[pos + 1]
        if nvec == 2:
            ln2 = wl[pos + 2]
            if ln < 0 or ln2 < 0:
                raise GraphFormatError(f"negative vector length in node record {i}")
            ln += ln2
        elif ln < 0:
            raise GraphFormatError(f"negative vector length in node record {i}")
        pos += hdr + ln
        if pos > nwords:
            raise TruncatedStreamError(f"node record {i} cut short")
    del wl

    ids = words[starts].astype(np.int64) if n else np.zeros(0, np.int64)
    if n and ids.min() < 0:
        raise GraphFormatError("negative node id")
    if n > 1 and np.any(np.diff(ids) <= 0):
        raise UnsortedVectorError("node records not in strictly ascending id order")
    lens = [words[starts + 1 + k].astype(np.int64) if n else np.zeros(0, np.int64) for k in range(nvec)]
    base = starts + hdr
    offs = []
    vals = []
    for k in range(nvec):
        offs.append(base)
        indptr = np.concatenate([[0], np.cumsum(lens[k])])
        gather = np.repeat(base - indptr[:-1], lens[k]) + np.arange(int(indptr[-1]))
        v = words[gather].astype(np.int64)
        within = np.ones(len(v), dtype=bool)
        within[indptr[:-1][lens[k] > 0]] = False
        if len(v) > 1 and np.any((np.diff(v) <= 0) & within[1:]):
            raise UnsortedVectorError("adjacency vector not strictly ascending")
        vals.append((np.repeat(ids, lens[k]), v))
        base = base + lens[k]

    tail = pos
    edge_table = None
    if cls.multigraph:
        if tail + 3 * m > nwords:
            raise TruncatedStreamError(f"edge table needs {m} records")
        et = words[tail : tail + 3 * m].astype(np.int64).reshape(-1, 3)
        tail += 3 * m
        edge_table = et
    body_end = HEADER_SIZE + 4 * tail

    _validate(cls, ids, vals, m, edge_table)

    g = cls(n)
    g._ids = array("i", ids.astype(np.int32).tobytes())
    g._order = array("i", g._ids)
    put = g._table.put
    for s, nid in enumerate(g._ids):
        put(nid, s)
    g._pool = array("i", words[:pos].tobytes())
    if sys.byteorder == "big":
        g._pool.byteswap()
    for k in range(nvec):
        g._off[k] = array("q", offs[k].astype(np.int64).tobytes())
        g._len[k] = array("i", lens[k].astype(np.int32).tobytes())
        g._cap[k] = array("i", lens[k].astype(np.int32).tobytes())
    g._garbage = len(g._pool) - sum(int(lk.sum()) for lk in lens)
    g._nedges = m
    if cls.multigraph:
        g._edges = dict(zip(edge_table[:, 0].tolist(), zip(edge_table[:, 1].tolist(), edge_table[:, 2].tolist())))
        g._next_eid = int(edge_table[:, 0].max()) + 1 if m else 0

    end = body_end
    if cls is AttrNetwork:
        end = _load_attrs(g, buf, body_end)
    if end != len(buf):
        raise CountMismatchError(f"{len(buf) - end} trailing bytes after the declared content")
    return g


def _validate(cls, ids, vals, m, edge_table):
    n = len(ids)
    if cls is UndirectedGraph:
        rows, cols = vals[0]
        if len(cols) and not np.all(np.isin(cols, ids)):
            raise GraphFormatError("adjacency entry names a missing node")
        loops = int(np.count_nonzero(rows == cols))
        if len(cols) + loops != 2 * m:
            raise CountMismatchError(f"vectors hold {(len(cols) + loops) / 2:g} edges, header says {m}")
        nonloop = rows != cols
        a = np.sort(rows[nonloop] * (MAX_NODE_ID + 1) + cols[nonloop])
        b = np.sort(cols[nonloop] * (MAX_NODE_ID + 1) + rows[nonloop])
        if not np.array_equal(a, b):
            raise GraphFormatError("undirected adjacency is not symmetric")
        return
    (orow, ocol), (irow, icol) = vals
    if len(ocol) != m or len(icol) != m:
        raise CountMismatchError(f"out/in vectors hold {len(ocol)}/{len(icol)} entries, header says {m}")
    if cls is DirectedGraph:
        if m and not (np.all(np.isin(ocol, ids)) and np.all(np.isin(icol, ids))):
            raise GraphFormatError("adjacency entry names a missing node")
        a = np.sort(orow * (MAX_NODE_ID + 1) + ocol)
        b = np.sort(icol * (MAX_NODE_ID + 1) + irow)
        if not np.array_equal(a, b):
            raise GraphFormatError("out- and in-vectors disagree")
        return
    eids, src, dst = edge_table[:, 0], edge_table[:, 1], edge_table[:, 2]
    if m and (eids.min() < 0 or np.any(np.diff(eids) <= 0)):
        raise UnsortedVectorError("edge table not in strictly ascending id order")
    if m and not (np.all(np.isin(src, ids)) and np.all(np.isin(dst, ids))):
        raise GraphFormatError("edge table names a missing node")
    o = np.argsort(ocol, kind="stable")
    i = np.argsort(icol, kind="stable")
    if not (np.array_equal(ocol[o], eids) and np.array_equal(orow[o], src)
            and np.array_equal(icol[i], eids) and np.array_equal(irow[i], dst)):
        raise GraphFormatError("node vectors disagree with the edge table")


def _load_attrs(g, buf, pos):
    r = _Reader(buf, pos)
    targets = {"node": list(g._sorted_ids()), "edge": sorted(g._edges)}
    for kind in ("node", "edge"):
        (count,) = r.unpack("<I")
        for _ in range(count):
            (ln,) = r.unpack("<I")
            try:
                name = bytes(r.take(ln)).decode("utf-8")
            except UnicodeDecodeError:
                raise GraphFormatError("attribute name is not UTF-8") from None
            (raw_tag,) = r.unpack("<B")
            try:
                tag = AttrType(raw_tag)
            except ValueError:
                raise GraphFormatError(f"unknown attribute type {raw_tag}") from None
            default = r.value(tag)
            try:
                g.declare_attr(kind, name, tag, default)
            except Exception as exc:
                raise GraphFormatError(f"bad attribute declaration {name!r}: {exc}") from None
            for t in targets[kind]:
                (flag,) = r.unpack("<B")
                v = r.value(tag)
                if flag:
                    g.set_attr(kind, t, name, v)
                elif v != default:
                    raise GraphFormatError(f"default-flagged row of {name!r} holds a non-default value")
    return r.pos


def load_binary(source):
    """Load a container written by :func:`save_binary` from a path or stream."""
    f, owned = _open(source, "rb")
    try:
        data = f.read()
    finally:
        if owned:
            f.close()
    return loads_binary(data)


# text edge lists --------------------------------------------------------

ISOLATED_PREFIX = "# Isolated nodes:"


def load_edge_list(source, directed=False, container=None):
    """Read a whitespace-separated edge list.

    ``#`` lines are comments (``# Isolated nodes: ...`` lines, as written by
    :func:`save_edge_list`, list nodes without edges). Nodes are created on
    first mention; for simple containers duplicate edges collapse.
    """
    cls = container or (DirectedGraph if directed else UndirectedGraph)
    f, owned = _open(source, "r")
    src = array("q")
    dst = array("q")
    extra = array("q")
    try:
        for lineno, line in enumerate(f, 1):
            parts = line.split()
            if not parts:
                continue
            if parts[0].startswith("#"):
                if line.startswith(ISOLATED_PREFIX):
                    for tok in line[len(ISOLATED_PREFIX):].split():
                        extra.append(_parse_id(tok, lineno, line))
                continue
            if len(parts) != 2:
                raise MalformedLineError(lineno, line.rstrip("\n"))
            src.append(_parse_id(parts[0], lineno, line))
            dst.append(_parse_id(parts[1], lineno, line))
    finally:
        if owned:
            f.close()
    return cls.from_edges(np.frombuffer(src, np.int64), np.frombuffer(dst, np.int64),
                          np.frombuffer(extra, np.int64))


def _parse_id(tok, lineno, line):
    try:
        v = int(tok)
    except ValueError:
        raise MalformedLineError(lineno, line.rstrip("\n")) from None
    if v < 0:
        raise NegativeIdError(lineno, line.rstrip("\n"))
    if v > MAX_NODE_ID:
        raise MalformedLineError(lineno, line.rstrip("\n"), reason="node id exceeds 31 bits")
    return v


def save_edge_list(g, sink):
    """Write ``# ...`` header lines then one ``src<TAB>dst`` line per edge."""
    src, dst = edge_arrays(g)
    ids = np.asarray(g.nodes(), dtype=np.int64)
    isolated = ids[~np.isin(ids, np.concatenate([src, dst]))]
    lines = [f"# {'Directed' if g.directed else 'Undirected'} graph",
             f"# Nodes: {g.get_nodes()} Edges: {g.get_edges()}"]
    for i in range(0, len(isolated), 1000):
        lines.append(ISOLATED_PREFIX + " " + " ".join(map(str, isolated[i : i + 1000].tolist())))
    lines.append("# FromNodeId\tToNodeId")
    text = "\n".join(lines) + "\n"
    if len(src):
        text += "\n".join(f"{a}\t{b}" for a, b in zip(src.tolist(), dst.tolist())) + "\n"
    f, owned = _open(sink, "w")
    try:
        f.write(text)
    finally:
        if owned:
            f.close()


def sniff_directed(path):
    """Guess directedness from a text file's leading comment lines."""
    with open(path) as f:
        for line in f:
            if not line.startswith("#"):
                break
            low = line.lower()
            if "undirected" in low:
                return False
            if "directed" in low:
                return True
    return False


def is_binary_file(path):
    with open(path, "rb") as f:
        return f.read(4) == MAGIC
