"""Constructors and combinators for the graph families studied here.

Families are assembled with networkx and frozen into bitmask `Graph`s; vertex i of the
result is the i-th node of the networkx graph in sorted order.
"""

import networkx as nx
from loguru import logger

from .bits import VertexSet
from .errors import DomainError
from .types import Graph, GraphSummary, VertexDeletion


def make_path(n: int) -> Graph:
    if n < 1:
        raise DomainError(f"a path needs at least one vertex, got n={n}")
    return Graph.from_networkx(nx.path_graph(n))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise DomainError(f"a cycle needs at least three vertices, got n={n}")
    return Graph.from_networkx(nx.cycle_graph(n))


def make_complete(n: int) -> Graph:
    if n < 1:
        raise DomainError(f"K_n needs n >= 1, got n={n}")
    return Graph.from_networkx(nx.complete_graph(n))


def make_caterpillar(m: int, l: int) -> Graph:
    """T_{m,l}: spine v1..vm (indices 0..m-1), then the l leaves of each spine vertex in spine order."""
    if m < 1:
        raise DomainError(f"caterpillar spine needs m >= 1, got m={m}")
    if l < 0:
        raise DomainError(f"leaf count must be non-negative, got l={l}")
    tree = nx.path_graph(m)
    tree.add_edges_from((i, m + i * l + j) for i in range(m) for j in range(l))
    labels = [f"v{i + 1}" for i in range(m)] + [f"v{i + 1}.{j + 1}" for i in range(m) for j in range(l)]
    return Graph.from_networkx(tree, labels)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G □ H with vertex (i,j) at index i*n(H) + j, labelled with 1-based coordinates "(i,j)"."""
    if g.n == 0 or h.n == 0:
        raise DomainError("cartesian product needs two nonempty factors")
    product = nx.cartesian_product(g.to_networkx(), h.to_networkx())
    labels = [f"({i + 1},{j + 1})" for i, j in sorted(product.nodes)]
    return Graph.from_networkx(product, labels)


def make_torus(n: int, m: int) -> Graph:
    return cartesian_product(make_cycle(n), make_cycle(m))


def make_cylinder(n: int, m: int) -> Graph:
    return cartesian_product(make_cycle(n), make_path(m))


def make_grid(n: int, m: int) -> Graph:
    return cartesian_product(make_path(n), make_path(m))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Vertices of h are shifted by n(g); labels, when either side has them, get a "1:"/"2:" prefix."""
    labels = None
    if g.labels is not None or h.labels is not None:
        labels = [f"1:{g.label(v)}" for v in range(g.n)] + [f"2:{h.label(v)}" for v in range(h.n)]
    return Graph.from_networkx(nx.disjoint_union(g.to_networkx(), h.to_networkx()), labels)


def delete_vertices(g: Graph, x: VertexSet) -> VertexDeletion:
    if x >> g.n:
        raise DomainError(f"deletion set mentions vertices outside 0..{g.n - 1}")
    kept = [v for v in range(g.n) if not x >> v & 1]
    labels = [g.labels[v] for v in kept] if g.labels is not None else None
    sub = Graph.from_networkx(g.to_networkx().subgraph(kept), labels)
    return VertexDeletion(graph=sub, old_to_new={old: new for new, old in enumerate(kept)}, new_to_old=tuple(kept))


def without_isolated(g: Graph) -> tuple[Graph, int]:
    """Drop isolated vertices; returns the remaining graph and how many were removed."""
    isolated = g.isolated
    return delete_vertices(g, isolated).graph, isolated.bit_count()


def inspect(g: Graph) -> GraphSummary:
    triangle = g.find_triangle()
    summary = GraphSummary(
        n=g.n,
        edge_count=g.edge_count,
        max_degree=g.max_degree,
        is_triangle_free=triangle is None,
        isolated=g.isolated,
        triangle=triangle,
    )
    logger.debug("Inspected graph: n={} m={} Δ={} triangle={}", g.n, summary.edge_count, summary.max_degree, triangle)
    return summary
