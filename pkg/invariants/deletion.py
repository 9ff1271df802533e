"""Bounded vertex-deletion search: min over X of max{Δ(G - X), |X|}."""

from loguru import logger

from graphs import Graph
from graphs.bits import VertexSet, bit, lex_key, members
from graphs.errors import DomainError

from .types import DeletionWitness


def require_triangle_free(g: Graph) -> None:
    triangle = g.find_triangle()
    if triangle is not None:
        names = ", ".join(g.label(v) for v in triangle)
        raise DomainError(f"graph contains the triangle {{{names}}}")


def require_isolate_free(g: Graph) -> None:
    if g.isolated:
        v = (g.isolated & -g.isolated).bit_length() - 1
        raise DomainError(f"graph has an isolated vertex {g.label(v)}")


def _overloaded(g: Graph, alive: VertexSet, t: int) -> int | None:
    for v in members(alive):
        if (g.adj[v] & alive).bit_count() > t:
            return v
    return None


def exists_deletion_set(g: Graph, t: int) -> DeletionWitness | None:
    """A witness X with |X| <= t and Δ(G - X) <= t, or None when no such X exists.

    While some vertex v has degree > t in G - X, every valid X meets N[v]; the search
    branches over the alive members of N[v] and never adds more than t vertices.
    Among the witnesses reached, the smallest (then lexicographically first) is returned.
    """
    if t < 0:
        raise DomainError(f"t must be non-negative, got {t}")
    everything = g.vertices
    found: list[VertexSet] = []
    seen: set[VertexSet] = set()

    def search(removed: VertexSet, budget: int) -> None:
        if removed in seen:
            return
        seen.add(removed)
        alive = everything & ~removed
        v = _overloaded(g, alive, t)
        if v is None:
            found.append(removed)
            return
        if budget == 0:
            return
        for u in members(g.closed_neighbors(v) & alive):
            search(removed | bit(u), budget - 1)

    search(0, t)
    if not found:
        logger.debug("No deletion set of size <= {} on {}-vertex graph", t, g.n)
        return None
    return DeletionWitness(x=min(found, key=lex_key), t=t)


def min_deletion_witness(g: Graph) -> DeletionWitness:
    """Witness at the smallest feasible t; t = Δ(G) always succeeds with X = ∅."""
    for t in range(g.max_degree + 1):
        witness = exists_deletion_set(g, t)
        if witness is not None:
            return witness
    raise AssertionError("X = ∅ is feasible at t = Δ(G)")


def a1_by_deletion(g: Graph) -> int:
    """a_1(G) = min over X of max{Δ(G - X), |X|} for triangle-free, isolate-free G."""
    if g.n == 0:
        raise DomainError("a_1 is undefined on the empty graph")
    require_triangle_free(g)
    require_isolate_free(g)
    witness = min_deletion_witness(g)
    logger.debug("a1_by_deletion: t={} X={}", witness.t, g.describe(witness.x))
    return witness.t
