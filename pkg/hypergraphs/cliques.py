from loguru import logger

from graphs import Graph
from graphs.bits import VertexSet, bit, lex_key, members

from .types import Hypergraph


def _expand(g: Graph, r: VertexSet, p: VertexSet, x: VertexSet, out: list[VertexSet]) -> None:
    if not p and not x:
        out.append(r)
        return
    # Tomita pivot: the vertex of P ∪ X with the most neighbours in P
    pivot = max(members(p | x), key=lambda u: (g.adj[u] & p).bit_count())
    for v in members(p & ~g.adj[pivot]):
        _expand(g, r | bit(v), p & g.adj[v], x & g.adj[v], out)
        p &= ~bit(v)
        x |= bit(v)


def maximal_cliques(g: Graph) -> list[VertexSet]:
    """All maximal cliques of g, sorted by size then members; isolated vertices give singletons."""
    out: list[VertexSet] = []
    if g.n == 0:
        return out
    _expand(g, 0, g.vertices, 0, out)
    return sorted(out, key=lex_key)


def clique_hypergraph(g: Graph) -> Hypergraph:
    cliques = maximal_cliques(g)
    logger.debug("Clique hypergraph of {}-vertex graph: {} cliques", g.n, len(cliques))
    return Hypergraph(n=g.n, edges=tuple(cliques))
