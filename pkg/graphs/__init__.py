from .bits import VertexSet
from .builders import (
    cartesian_product,
    delete_vertices,
    disjoint_union,
    inspect,
    make_caterpillar,
    make_complete,
    make_cycle,
    make_cylinder,
    make_grid,
    make_path,
    make_torus,
    without_isolated,
)
from .edge_list import load_edge_list, parse_edge_list, save_edge_list, serialize_edge_list
from .types import Graph, GraphSummary, VertexDeletion

__all__ = [
    "Graph",
    "GraphSummary",
    "VertexDeletion",
    "VertexSet",
    "make_path",
    "make_cycle",
    "make_complete",
    "make_caterpillar",
    "make_torus",
    "make_cylinder",
    "make_grid",
    "cartesian_product",
    "disjoint_union",
    "delete_vertices",
    "without_isolated",
    "inspect",
    "parse_edge_list",
    "serialize_edge_list",
    "load_edge_list",
    "save_edge_list",
]
