"""Simplification and Berge-style dualization of hypergraphs."""

from loguru import logger

from graphs.bits import VertexSet, bit, lex_key, members
from graphs.errors import DomainError, ResourceBudgetError

from .types import Hypergraph

DEFAULT_TRANSVERSAL_CAP = 10**6


def _minimal(sets: list[VertexSet]) -> list[VertexSet]:
    """Inclusion-minimal members of `sets`, duplicates dropped, in canonical order."""
    kept: list[VertexSet] = []
    for s in sorted(set(sets), key=lex_key):
        if not any(k & s == k for k in kept):
            kept.append(s)
    return kept


def simplify(h: Hypergraph) -> Hypergraph:
    return Hypergraph(n=h.n, edges=tuple(_minimal(list(h.edges))))


def is_transversal(h: Hypergraph, s: VertexSet) -> bool:
    return all(e & s for e in h.edges)


def hyperdegree_max(h: Hypergraph) -> int:
    return h.max_degree


def transversal_hypergraph(h: Hypergraph, cap: int = DEFAULT_TRANSVERSAL_CAP) -> Hypergraph:
    """Tr(h): every inclusion-minimal transversal, built one hyperedge at a time."""
    if not h.edges:
        raise DomainError("an edgeless hypergraph has only the empty transversal")
    if not h.is_simple:
        raise DomainError("transversal_hypergraph expects a simple hypergraph; simplify() it first")
    current: list[VertexSet] = [bit(v) for v in members(h.edges[0])]
    for step, e in enumerate(h.edges[1:], 2):
        candidates: list[VertexSet] = []
        for t in current:
            if t & e:
                candidates.append(t)
            else:
                candidates.extend(t | bit(v) for v in members(e))
            if len(candidates) > cap:
                raise ResourceBudgetError("transversal dualization", cap)
        current = _minimal(candidates)
        logger.debug("Dualization step {}/{}: {} minimal transversals", step, len(h.edges), len(current))
    return Hypergraph(n=h.n, edges=tuple(current))
