"""k-independence numbers and the α_k form of the triangle-free threshold formula."""

from loguru import logger

from graphs import Graph, without_isolated
from graphs.bits import VertexSet, bit, members
from graphs.errors import DomainError, ResourceBudgetError

from .deletion import require_triangle_free

DEFAULT_NODE_BUDGET = 10**8


def _greedy_k_independent(g: Graph, k: int) -> VertexSet:
    chosen = 0
    for v in sorted(range(g.n), key=lambda u: (g.degree(u), u)):
        if _addable(g, k, chosen, v):
            chosen |= bit(v)
    return chosen


def _addable(g: Graph, k: int, chosen: VertexSet, v: int) -> bool:
    inside = g.adj[v] & chosen
    if inside.bit_count() > k:
        return False
    return all((g.adj[u] & chosen).bit_count() < k for u in members(inside))


def _saturated(g: Graph, k: int, chosen: VertexSet) -> VertexSet:
    sat = 0
    for u in members(chosen):
        if (g.adj[u] & chosen).bit_count() >= k:
            sat |= bit(u)
    return sat


def k_independence_number(g: Graph, k: int, budget: int = DEFAULT_NODE_BUDGET) -> int:
    """α_k(G): the largest S with Δ(G[S]) <= k, by include/exclude branch and bound.

    Raises ResourceBudgetError carrying the best size found when the node budget runs out.
    """
    if k < 0:
        raise DomainError(f"k must be non-negative, got {k}")
    if k >= g.max_degree:
        return g.n
    best = _greedy_k_independent(g, k).bit_count()
    nodes = 0

    def branch(chosen: VertexSet, cand: VertexSet) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise ResourceBudgetError(f"alpha_{k} search", budget, best=best)
        size = chosen.bit_count()
        if size + cand.bit_count() <= best:
            return
        if not cand:
            best = size
            return
        pool = chosen | cand
        v = max(members(cand), key=lambda u: ((g.adj[u] & pool).bit_count(), -u))
        if all((g.adj[u] & pool).bit_count() <= k for u in members((g.adj[v] & pool) | bit(v))):
            # v and its neighbours have degree <= k even if all of pool is taken: some optimum contains v
            branch(chosen | bit(v), cand & ~bit(v))
            return
        rest = cand & ~bit(v)
        with_v = chosen | bit(v)
        sat = _saturated(g, k, with_v)
        still = 0
        for w in members(rest):
            if (g.adj[w] & with_v).bit_count() <= k and not g.adj[w] & sat:
                still |= bit(w)
        branch(with_v, still)
        branch(chosen, rest)

    branch(0, g.vertices)
    logger.debug("alpha_{} = {} on {}-vertex graph ({} nodes)", k, best, g.n, nodes)
    return best


def _delete_to_degree(g: Graph, k: int, s: int) -> VertexSet | None:
    """A set X, |X| <= s, with Δ(G - X) <= k; branches on a (k+1)-star that X must hit."""
    everything = g.vertices
    failed: dict[VertexSet, int] = {}

    def search(removed: VertexSet, budget: int) -> VertexSet | None:
        if failed.get(removed, -1) >= budget:
            return None
        alive = everything & ~removed
        centre = next((v for v in members(alive) if (g.adj[v] & alive).bit_count() > k), None)
        if centre is None:
            return removed
        if budget > 0:
            leaves = list(members(g.adj[centre] & alive))[: k + 1]
            for u in [centre, *leaves]:
                hit = search(removed | bit(u), budget - 1)
                if hit is not None:
                    return hit
        failed[removed] = budget
        return None

    return search(0, s)


def k_independent_set_at_least(g: Graph, k: int, size: int) -> VertexSet | None:
    """A k-independent set with at least `size` vertices, or None if α_k(G) < size."""
    x = _delete_to_degree(g, k, max(g.n - size, 0)) if size <= g.n else None
    return None if x is None else g.vertices & ~x


def a1_by_alpha(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> int:
    """min over k of max{k, ℓ + n(G) - α_k(G)} for triangle-free G with ℓ isolated vertices.

    With ℓ = 0 this is the α_k form of the triangle-free threshold; isolated vertices
    must all be claimed by Alice on her first turn, which the ℓ term accounts for.
    Only k in 0..Δ is scanned: beyond Δ the second term is ℓ and the first only grows.
    Each α_k comes from the branch and bound, under `budget` nodes.
    """
    if g.n == 0:
        raise DomainError("a_1 is undefined on the empty graph")
    require_triangle_free(g)
    core, isolated = without_isolated(g)
    best = max(core.max_degree, isolated)
    for k in range(core.max_degree):
        if k >= best:
            break
        alpha = k_independence_number(core, k, budget=budget)
        best = min(best, max(k, isolated + core.n - alpha))
    logger.debug("a1_by_alpha = {} (n={}, isolated={})", best, g.n, isolated)
    return best
