from graphs import Graph

from .deletion import require_triangle_free
from .independence import DEFAULT_NODE_BUDGET, a1_by_alpha
from .types import ThresholdPair


def triangle_free_thresholds(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> ThresholdPair:
    """(a_1, a_1') of a triangle-free graph; a_1' = Δ(G), absent once G has an isolated vertex."""
    require_triangle_free(g)
    a1 = a1_by_alpha(g, budget=budget)
    a1_prime = None if g.isolated else g.max_degree
    return ThresholdPair(a1=a1, a1_prime=a1_prime)
