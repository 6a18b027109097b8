import random

import pytest

from adjgraph import (
    AttributeTypeError,
    DuplicateAttributeError,
    EdgeNotFoundError,
    NodeNotFoundError,
    UndeclaredAttributeError,
)
from adjgraph.attributes import AttrNetwork, AttrType, coerce_value


def small_net():
    g = AttrNetwork()
    for v in range(3):
        g.add_node(v)
    e = g.add_edge(0, 1)
    g.declare_attr("node", "name", AttrType.STR)
    g.declare_attr("node", "weight", AttrType.FLOAT, 1.5)
    g.declare_attr("edge", "count", AttrType.INT, 7)
    return g, e


def test_defaults_and_explicit_flags():
    g, e = small_net()
    assert g.get_attr("node", 0, "name") == ""
    assert g.get_attr("node", 2, "weight") == 1.5
    assert g.get_attr("edge", e, "count") == 7
    assert g.is_default("node", 0, "name")
    g.set_attr("node", 0, "name", "a")
    assert g.get_attr("node", 0, "name") == "a" and not g.is_default("node", 0, "name")
    # writing the default value still counts as explicit
    g.set_attr("edge", e, "count", 7)
    assert not g.is_default("edge", e, "count")


def test_new_nodes_see_defaults():
    g, _ = small_net()
    g.add_node(10)
    assert g.attrs("node", 10) == {"name": "", "weight": 1.5}


def test_schema_errors():
    g, e = small_net()
    with pytest.raises(DuplicateAttributeError):
        g.declare_attr("node", "name", AttrType.INT)
    with pytest.raises(UndeclaredAttributeError):
        g.get_attr("node", 0, "missing")
    with pytest.raises(AttributeTypeError):
        g.set_attr("node", 0, "name", 3)
    with pytest.raises(AttributeTypeError):
        g.set_attr("edge", e, "count", 1.5)
    with pytest.raises(AttributeTypeError):
        g.set_attr("edge", e, "count", 2**63)
    with pytest.raises(NodeNotFoundError):
        g.set_attr("node", 99, "name", "x")
    with pytest.raises(EdgeNotFoundError):
        g.get_attr("edge", 99, "count")
    with pytest.raises(ValueError):
        g.declare_attr("graph", "x", AttrType.INT)


def test_int_accepted_for_float():
    assert coerce_value(AttrType.FLOAT, 3) == 3.0
    with pytest.raises(AttributeTypeError):
        coerce_value(AttrType.INT, True)


def test_deleted_rows_reset():
    g, e = small_net()
    g.set_attr("node", 1, "name", "b")
    g.set_attr("edge", e, "count", 3)
    g.del_node(1)
    assert not g.is_edge(0, 1)
    g.add_node(1)
    assert g.is_default("node", 1, "name") and g.get_attr("node", 1, "name") == ""
    e2 = g.add_edge(0, 1)
    assert e2 != e and g.get_attr("edge", e2, "count") == 7
    g.check_invariants()


def test_del_attr_and_schema_order():
    g, _ = small_net()
    assert list(g.attr_schema("node")) == ["name", "weight"]
    g.del_attr("node", "name")
    assert list(g.attr_schema("node")) == ["weight"]
    with pytest.raises(UndeclaredAttributeError):
        g.del_attr("node", "name")


def test_copy_and_equality_include_attributes():
    g, e = small_net()
    h = g.copy()
    assert g == h
    h.set_attr("edge", e, "count", 1)
    assert g != h
    assert g.get_attr("edge", e, "count") == 7


def test_random_operations_against_shadow_map():
    rng = random.Random(11)
    g = AttrNetwork()
    g.declare_attr("node", "x", AttrType.INT, -1)
    g.declare_attr("node", "s", AttrType.STR, "d")
    g.declare_attr("edge", "w", AttrType.FLOAT)
    nodes, edges = {}, {}
    for step in range(10_000):
        r = rng.random()
        if r < 0.2 or len(nodes) < 2:
            v = rng.randrange(200)
            if v not in nodes:
                g.add_node(v)
                nodes[v] = {}
        elif r < 0.27:
            v = rng.choice(list(nodes))
            g.del_node(v)
            del nodes[v]
            edges = {k: a for k, a in edges.items() if v not in a["ends"]}
        elif r < 0.45:
            u, v = rng.sample(list(nodes), 2)
            edges[g.add_edge(u, v)] = {"ends": (u, v)}
        elif r < 0.5 and edges:
            eid = rng.choice(list(edges))
            g.del_edge_by_id(eid)
            del edges[eid]
        elif r < 0.75:
            v = rng.choice(list(nodes))
            name, val = rng.choice([("x", rng.randrange(-5, 5)), ("s", str(rng.random()))])
            g.set_attr("node", v, name, val)
            nodes[v][name] = val
        elif edges:
            eid = rng.choice(list(edges))
            val = rng.random()
            g.set_attr("edge", eid, "w", val)
            edges[eid]["w"] = val
        if step % 500 == 0:
            g.check_invariants()
    g.check_invariants()
    for v, a in nodes.items():
        assert g.get_attr("node", v, "x") == a.get("x", -1)
        assert g.get_attr("node", v, "s") == a.get("s", "d")
        assert g.is_default("node", v, "x") == ("x" not in a)
    for eid, a in edges.items():
        assert g.get_attr("edge", eid, "w") == a.get("w", 0.0)
    assert g.get_edges() == len(edges)
