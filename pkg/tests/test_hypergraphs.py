import pytest
from hypothesis import given, settings

from graphs import Graph, make_cycle, make_path, make_torus
from graphs.bits import VertexSet, bit, from_members, lex_key, members
from graphs.errors import DomainError, ResourceBudgetError
from hypergraphs import (
    Hypergraph,
    clique_hypergraph,
    hyperdegree_max,
    is_transversal,
    maximal_cliques,
    simplify,
    transversal_hypergraph,
)

from .strategies import graphs, simple_hypergraphs, small_tf_graphs


def minimal_transversals_by_scan(h: Hypergraph) -> list[VertexSet]:
    found = [
        s
        for s in range(1 << h.n)
        if is_transversal(h, s) and not any(is_transversal(h, s & ~bit(v)) for v in members(s))
    ]
    return sorted(found, key=lex_key)


@given(small_tf_graphs())
def test_triangle_free_cliques_are_edges(g: Graph) -> None:
    h = clique_hypergraph(g)
    assert sorted(h.edges) == sorted(from_members(e) for e in g.edges())


def test_isolated_vertex_is_a_singleton_clique() -> None:
    h = clique_hypergraph(Graph.from_edges(3, [(0, 1)]))
    assert h.edge_lists() == [[2], [0, 1]]
    assert h.has_singleton


def test_c3_c4_cliques() -> None:
    h = clique_hypergraph(make_torus(3, 4))
    sizes = sorted(e.bit_count() for e in h.edges)
    assert sizes == [2] * 12 + [3] * 4
    assert all(h.degree(v) == 3 for v in range(12))
    assert hyperdegree_max(h) == 3


def test_c3_c3_cliques() -> None:
    h = clique_hypergraph(make_torus(3, 3))
    assert len(h.edges) == 6
    assert all(e.bit_count() == 3 for e in h.edges)
    assert all(h.degree(v) == 2 for v in range(9))
    assert hyperdegree_max(h) == 2


@given(graphs(max_n=6))
def test_cliques_are_maximal(g: Graph) -> None:
    cliques = maximal_cliques(g)
    assert len(set(cliques)) == len(cliques)
    for c in cliques:
        assert g.is_complete_on(c)
        assert all(not g.is_complete_on(c | 1 << v) for v in range(g.n) if not c >> v & 1)


def test_simplify() -> None:
    h = Hypergraph.from_lists(4, [[1, 2], [1, 2, 3], [1, 2]])
    assert simplify(h).edge_lists() == [[1, 2]]


@given(simple_hypergraphs())
def test_simplify_is_idempotent(h: Hypergraph) -> None:
    assert simplify(simplify(h)) == simplify(h)
    assert simplify(h).is_simple


def test_transversal_of_one_edge() -> None:
    assert transversal_hypergraph(Hypergraph.from_lists(2, [[0, 1]])).edge_lists() == [[0], [1]]


def test_triangle_is_self_dual() -> None:
    k2 = clique_hypergraph(make_path(2))
    assert transversal_hypergraph(k2).edge_lists() == [[0], [1]]
    triangle_edges = Hypergraph.from_lists(3, [[0, 1], [0, 2], [1, 2]])
    assert transversal_hypergraph(triangle_edges).edge_lists() == [[0, 1], [0, 2], [1, 2]]


@settings(max_examples=200)
@given(simple_hypergraphs(max_n=12, max_edges=10))
def test_dualization_is_an_involution(h: Hypergraph) -> None:
    tr = transversal_hypergraph(h)
    assert all(is_transversal(h, t) for t in tr.edges)
    assert transversal_hypergraph(tr).edges == h.canonical().edges


@given(simple_hypergraphs(max_n=10, max_edges=8))
def test_every_transversal_is_minimal(h: Hypergraph) -> None:
    for t in transversal_hypergraph(h).edges:
        assert is_transversal(h, t)
        assert not any(is_transversal(h, t & ~bit(v)) for v in members(t))


@settings(max_examples=50, deadline=None)
@given(simple_hypergraphs(max_n=10, max_edges=6))
def test_dualization_matches_subset_scan(h: Hypergraph) -> None:
    assert list(transversal_hypergraph(h).edges) == minimal_transversals_by_scan(h)


def test_transversal_rejects_bad_input() -> None:
    with pytest.raises(DomainError):
        transversal_hypergraph(Hypergraph(n=2, edges=()))
    with pytest.raises(DomainError, match="simplify"):
        transversal_hypergraph(Hypergraph.from_lists(3, [[0], [0, 1]]))


def test_transversal_cap() -> None:
    # five disjoint pairs have 2^5 minimal transversals
    h = Hypergraph.from_lists(10, [[2 * i, 2 * i + 1] for i in range(5)])
    assert len(transversal_hypergraph(h).edges) == 32
    with pytest.raises(ResourceBudgetError):
        transversal_hypergraph(h, cap=10)


def test_is_transversal() -> None:
    h = clique_hypergraph(make_cycle(4))
    assert is_transversal(h, from_members([0, 2]))
    assert not is_transversal(h, from_members([0, 1]))


def test_json_round_trip_rejects_unsorted_edges() -> None:
    h = Hypergraph.from_json({"n": 3, "edges": [[0, 2], [1]]})
    assert h.to_json() == {"n": 3, "edges": [[0, 2], [1]]}
    with pytest.raises(ValueError):
        Hypergraph.from_json({"n": 3, "edges": [[2, 0]]})
    with pytest.raises(ValueError):
        Hypergraph.from_lists(2, [[]])
