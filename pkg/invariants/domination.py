from itertools import combinations

from loguru import logger

from graphs import Graph
from graphs.bits import VertexSet, bit, from_members, lowest, members
from graphs.errors import DomainError, ResourceBudgetError

DEFAULT_DOMINATION_BUDGET = 10**7


def has_dominating_set(g: Graph, s: int, budget: int = DEFAULT_DOMINATION_BUDGET) -> VertexSet | None:
    """A dominating set of size <= s, or None if none exists.

    The lowest undominated vertex must have a dominator in its closed neighbourhood,
    so the search branches over N[v] and stops at depth s.
    """
    if s < 0:
        raise DomainError(f"s must be non-negative, got {s}")
    closed = [g.closed_neighbors(v) for v in range(g.n)]
    everything = g.vertices
    failed: dict[VertexSet, int] = {}
    nodes = 0

    def search(chosen: VertexSet, covered: VertexSet, left: int) -> VertexSet | None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise ResourceBudgetError(f"domination search (s={s})", budget)
        undominated = everything & ~covered
        if not undominated:
            return chosen
        if left == 0 or failed.get(chosen, -1) >= left:
            return None
        v = lowest(undominated)
        for u in members(closed[v]):
            hit = search(chosen | bit(u), covered | closed[u], left - 1)
            if hit is not None:
                return hit
        failed[chosen] = left
        return None

    return search(0, 0, s)


def domination_number(g: Graph, budget: int = DEFAULT_DOMINATION_BUDGET) -> int:
    for s in range(g.n + 1):
        witness = has_dominating_set(g, s, budget=budget)
        if witness is not None:
            logger.debug("γ = {} with dominating set {}", s, g.describe(witness))
            return s
    raise AssertionError("V(G) always dominates")


def is_dominating(g: Graph, x: VertexSet) -> bool:
    covered = 0
    for v in members(x):
        covered |= g.closed_neighbors(v)
    return covered == g.vertices


def brute_force_dominating_set(g: Graph, s: int) -> VertexSet | None:
    """Scan every subset of size <= s; an independent oracle for has_dominating_set."""
    for size in range(s + 1):
        for combo in combinations(range(g.n), size):
            x = from_members(combo)
            if is_dominating(g, x):
                return x
    return None
