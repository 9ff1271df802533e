from .cliques import clique_hypergraph, maximal_cliques
from .transversal import hyperdegree_max, is_transversal, simplify, transversal_hypergraph
from .types import Hypergraph

__all__ = [
    "Hypergraph",
    "clique_hypergraph",
    "maximal_cliques",
    "simplify",
    "transversal_hypergraph",
    "is_transversal",
    "hyperdegree_max",
]
