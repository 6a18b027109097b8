"""In-memory graph containers built on sorted adjacency vectors, with
generators, analytics and a benchmarking command line."""
from .attributes import AttrNetwork, AttrType
from .core import (
    CSR,
    MAX_NODE_ID,
    DegreeSummary,
    DirectedGraph,
    DirectedMultigraph,
    Edge,
    NodeView,
    UndirectedGraph,
    edge_arrays,
    to_csr,
)
from .errors import *  # noqa: F401,F403
from .io import load_binary, load_edge_list, save_binary, save_edge_list

__all__ = [
    "AttrNetwork",
    "AttrType",
    "CSR",
    "MAX_NODE_ID",
    "DegreeSummary",
    "DirectedGraph",
    "DirectedMultigraph",
    "Edge",
    "NodeView",
    "UndirectedGraph",
    "edge_arrays",
    "to_csr",
    "load_binary",
    "load_edge_list",
    "save_binary",
    "save_edge_list",
]

__version__ = "0.1.0"
