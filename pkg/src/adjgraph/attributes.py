"""Directed multigraph with run-time declared node and edge attributes.

Attributes are stored column-wise: one dense store per attribute, indexed
by the internal node slot (node attributes) or by the edge id (edge
attributes), plus a byte per row flagging explicitly written values. Rows
of deleted nodes and edges are reset to the declared default.
"""
from __future__ import annotations

from array import array
from enum import IntEnum

from .core import DirectedMultigraph
from .errors import (
    AttributeTypeError,
    DuplicateAttributeError,
    EdgeNotFoundError,
    NodeNotFoundError,
    UndeclaredAttributeError,
)


class AttrType(IntEnum):
    INT = 1
    FLOAT = 2
    STR = 3


_DEFAULTS = {AttrType.INT: 0, AttrType.FLOAT: 0.0, AttrType.STR: ""}
_KINDS = ("node", "edge")


def coerce_value(tag, value):
    """Validate ``value`` against ``tag``; ints are accepted for floats."""
    if tag is AttrType.INT:
        if isinstance(value, int) and not isinstance(value, bool):
            if -(2**63) <= value < 2**63:
                return value
            raise AttributeTypeError(f"integer {value} does not fit in 64 bits")
    elif tag is AttrType.FLOAT:
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            return float(value)
    elif tag is AttrType.STR:
        if isinstance(value, str):
            return value
    raise AttributeTypeError(f"{value!r} is not a valid {tag.name} value")


class Column:
    __slots__ = ("name", "tag", "default", "values", "explicit")

    def __init__(self, name, tag, default, size):
        self.name = name
        self.tag = tag
        self.default = default
        if tag is AttrType.INT:
            self.values = array("q", [default]) * size
        elif tag is AttrType.FLOAT:
            self.values = array("d", [default]) * size
        else:
            self.values = [default] * size
        self.explicit = bytearray(size)

    def ensure(self, size):
        short = size - len(self.explicit)
        if short > 0:
            if isinstance(self.values, list):
                self.values.extend([self.default] * short)
            else:
                self.values.extend(array(self.values.typecode, [self.default]) * short)
            self.explicit.extend(bytes(short))

    def reset(self, row):
        if row < len(self.explicit):
            self.values[row] = self.default
            self.explicit[row] = 0

    def copy(self):
        c = Column.__new__(Column)
        c.name, c.tag, c.default = self.name, self.tag, self.default
        c.values = self.values[:] if isinstance(self.values, list) else array(self.values.typecode, self.values)
        c.explicit = bytearray(self.explicit)
        return c


class AttrNetwork(DirectedMultigraph):
    """Directed multigraph whose nodes and edges carry typed key-value data."""

    tag = 4

    def _reset(self, capacity_hint=0):
        super()._reset(capacity_hint)
        self._cols = {"node": {}, "edge": {}}

    def copy(self):
        g = super().copy()
        g._cols = {kind: {n: c.copy() for n, c in cols.items()} for kind, cols in self._cols.items()}
        return g

    # row bookkeeping ---------------------------------------------------

    def _new_slot(self, nid):
        s = super()._new_slot(nid)
        for col in self._cols["node"].values():
            col.ensure(s + 1)
            col.reset(s)
        return s

    def _release_slot(self, s):
        for col in self._cols["node"].values():
            col.reset(s)
        super()._release_slot(s)

    def _drop_edge_row(self, eid):
        for col in self._cols["edge"].values():
            col.reset(eid)

    def add_edge(self, src, dst, eid=None):
        eid = super().add_edge(src, dst, eid)
        for col in self._cols["edge"].values():
            col.ensure(eid + 1)
        return eid

    add_edge_multi = add_edge

    def del_edge_by_id(self, eid):
        super().del_edge_by_id(eid)
        self._drop_edge_row(eid)

    def _row(self, kind, target):
        if kind == "node":
            s = self._table.get(target)
            if s < 0:
                raise NodeNotFoundError(target)
            return s
        if kind == "edge":
            if target not in self._edges:
                raise EdgeNotFoundError(target)
            return target
        raise ValueError(f"kind must be 'node' or 'edge', got {kind!r}")

    def _rows(self, kind):
        return len(self._ids) if kind == "node" else self._next_eid

    def _column(self, kind, name):
        try:
            return self._cols[kind][name]
        except KeyError:
            if kind not in _KINDS:
                raise ValueError(f"kind must be 'node' or 'edge', got {kind!r}") from None
            raise UndeclaredAttributeError(f"{kind} attribute {name!r} is not declared") from None

    # public attribute API ----------------------------------------------

    def declare_attr(self, kind, name, tag, default=None):
        """Declare attribute ``name`` for all current and future nodes/edges."""
        if kind not in _KINDS:
            raise ValueError(f"kind must be 'node' or 'edge', got {kind!r}")
        tag = AttrType(tag)
        if name in self._cols[kind]:
            raise DuplicateAttributeError(f"{kind} attribute {name!r} already declared")
        default = _DEFAULTS[tag] if default is None else coerce_value(tag, default)
        self._cols[kind][name] = Column(name, tag, default, self._rows(kind))

    def del_attr(self, kind, name):
        self._column(kind, name)
        del self._cols[kind][name]

    def set_attr(self, kind, target, name, value):
        col = self._column(kind, name)
        row = self._row(kind, target)
        value = coerce_value(col.tag, value)
        col.ensure(row + 1)
        col.values[row] = value
        col.explicit[row] = 1

    def get_attr(self, kind, target, name):
        col = self._column(kind, name)
        row = self._row(kind, target)
        if row >= len(col.explicit):
            return col.default
        return col.values[row]

    def is_default(self, kind, target, name):
        """True when no value was written since declaration or row reuse."""
        col = self._column(kind, name)
        row = self._row(kind, target)
        return row >= len(col.explicit) or not col.explicit[row]

    def attr_schema(self, kind):
        """``{name: (tag, default)}`` in declaration order."""
        return {n: (c.tag, c.default) for n, c in self._cols[kind].items()}

    def attrs(self, kind, target):
        return {name: self.get_attr(kind, target, name) for name in self._cols[kind]}

    # comparisons -------------------------------------------------------

    def _attr_state(self):
        state = {}
        for kind in _KINDS:
            targets = list(self._sorted_ids()) if kind == "node" else sorted(self._edges)
            for name, col in self._cols[kind].items():
                rows = tuple((t, self.get_attr(kind, t, name), self.is_default(kind, t, name))
                             for t in targets)
                state[(kind, name)] = (col.tag, col.default, rows)
        return state

    def __eq__(self, other):
        eq = super().__eq__(other)
        if eq is not True:
            return eq
        return self._attr_state() == other._attr_state()

    __hash__ = None

    def dump(self):
        lines = [super().dump().rstrip("\n")]
        for kind in _KINDS:
            for name, col in self._cols[kind].items():
                lines.append(f"  {kind} attr {name}: {col.tag.name} default {col.default!r}")
        return "\n".join(lines) + "\n"

    def _check_edges(self):
        super()._check_edges()
        for name, col in self._cols["node"].items():
            for s, nid in enumerate(self._ids):
                if s < len(col.explicit):
                    if nid < 0:
                        assert not col.explicit[s] and col.values[s] == col.default, \
                            f"stale node row {s} in {name}"
                    assert isinstance(col.values[s], type(col.default))
        for name, col in self._cols["edge"].items():
            for eid in range(len(col.explicit)):
                if eid not in self._edges:
                    assert not col.explicit[eid], f"stale edge row {eid} in {name}"
