"""Labeled graphs on n vertices, one per subset of the C(n,2) vertex pairs."""

from collections.abc import Iterable, Iterator
from itertools import combinations

from graphs import Graph
from graphs.errors import DomainError

from .types import GraphFilter

MAX_ENUMERATION_N = 7


def graph_from_mask(n: int, mask: int) -> Graph:
    """Bit i of mask switches on the i-th pair of combinations(range(n), 2)."""
    pairs = combinations(range(n), 2)
    return Graph.from_edges(n, (pair for i, pair in enumerate(pairs) if mask >> i & 1))


def _keep(g: Graph, filters: set[GraphFilter]) -> bool:
    if GraphFilter.triangle_free in filters and g.find_triangle() is not None:
        return False
    if GraphFilter.isolate_free in filters and g.isolated:
        return False
    return True


def enumerate_masks(n: int, filters: Iterable[GraphFilter] = (GraphFilter.all,)) -> Iterator[int]:
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise DomainError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION_N}, got {n}")
    wanted = set(filters)
    for mask in range(1 << (n * (n - 1) // 2)):
        if _keep(graph_from_mask(n, mask), wanted):
            yield mask


def enumerate_graphs(n: int, filters: Iterable[GraphFilter] = (GraphFilter.all,)) -> Iterator[Graph]:
    for mask in enumerate_masks(n, filters):
        yield graph_from_mask(n, mask)
