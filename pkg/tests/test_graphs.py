import networkx as nx
import pytest
from hypothesis import given

from graphs import (
    Graph,
    cartesian_product,
    delete_vertices,
    disjoint_union,
    inspect,
    make_caterpillar,
    make_complete,
    make_cycle,
    make_grid,
    make_path,
    make_torus,
    without_isolated,
)
from graphs.bits import bit, from_members
from graphs.errors import DomainError

from .strategies import graphs, small_tf_graphs


def test_make_path() -> None:
    assert make_path(1).n == 1
    assert make_path(1).edge_count == 0
    assert [make_path(4).degree(v) for v in range(4)] == [1, 2, 2, 1]
    with pytest.raises(DomainError):
        make_path(0)


def test_make_cycle() -> None:
    assert make_cycle(3).edge_count == 3
    c5 = make_cycle(5)
    assert all(c5.degree(v) == 2 for v in range(5))
    assert c5.find_triangle() is None
    with pytest.raises(DomainError):
        make_cycle(2)


def test_make_caterpillar() -> None:
    t = make_caterpillar(3, 2)
    assert t.n == 9
    assert t.degree(t.index_of("v2")) == 4
    assert t.max_degree == 4
    assert make_caterpillar(2, 0).edges() == make_path(2).edges()
    assert t.label(3) == "v1.1"
    with pytest.raises(DomainError):
        make_caterpillar(0, 1)


@pytest.mark.parametrize(("m", "l"), [(3, 0), (4, 1), (5, 3)])
def test_caterpillar_max_degree(m: int, l: int) -> None:
    assert make_caterpillar(m, l).max_degree == l + 2


def test_product_labels_and_indices() -> None:
    g = make_torus(3, 4)
    assert g.n == 12
    # row-major: (i, j) sits at i * m + j with 1-based labels
    assert g.label(1 * 4 + 2) == "(2,3)"
    assert g.index_of("(2, 3)") == 6
    assert g.index_of("7") == 7
    with pytest.raises(KeyError):
        g.index_of("(9,9)")
    with pytest.raises(KeyError):
        g.index_of("²")


@given(graphs(max_n=4), graphs(max_n=4))
def test_product_degree_and_order(g: Graph, h: Graph) -> None:
    p = cartesian_product(g, h)
    assert p.n == g.n * h.n
    assert p.max_degree == max(g.degree(i) + h.degree(j) for i in range(g.n) for j in range(h.n))


def test_product_of_edge_is_square() -> None:
    assert cartesian_product(make_path(2), make_path(2)).edge_count == 4
    assert make_grid(2, 2).find_triangle() is None


def test_disjoint_union() -> None:
    g = disjoint_union(make_complete(2), make_complete(2))
    assert (g.n, g.edge_count) == (4, 2)
    assert g.edges() == [(0, 1), (2, 3)]
    assert disjoint_union(make_caterpillar(3, 4), make_caterpillar(2, 4)).n == 25


def test_delete_vertices() -> None:
    c4 = make_cycle(4)
    deletion = delete_vertices(c4, bit(0))
    assert deletion.graph.edges() == make_path(3).edges()
    assert deletion.new_to_old == (1, 2, 3)
    assert deletion.to_original(bit(0)) == bit(1)
    assert delete_vertices(c4, 0).graph == c4
    with pytest.raises(DomainError):
        delete_vertices(c4, bit(7))


def test_delete_keeps_product_labels() -> None:
    g = make_grid(2, 5)
    x = g.indices_of(["(1,2)", "(2,4)"])
    rest = delete_vertices(g, x).graph
    assert rest.max_degree == 2
    assert "(1,2)" not in rest.labels


def test_inspect() -> None:
    assert not inspect(make_cycle(3)).is_triangle_free
    summary = inspect(make_torus(5, 5))
    assert summary.max_degree == 4
    assert summary.is_triangle_free
    assert inspect(make_path(1)).isolated == bit(0)


def test_without_isolated() -> None:
    g = disjoint_union(make_path(2), Graph.from_edges(2, []))
    core, dropped = without_isolated(g)
    assert dropped == 2
    assert core.edge_count == 1


def test_invalid_graph_rejected() -> None:
    with pytest.raises(ValueError, match="self-loop"):
        Graph(n=2, adj=(bit(0), 0))
    with pytest.raises(ValueError, match="symmetric"):
        Graph(n=2, adj=(bit(1), 0))
    with pytest.raises(ValueError, match="unique"):
        Graph.from_edges(2, [(0, 1)], labels=["a", "a"])


@given(graphs())
def test_edges_match_adjacency(g: Graph) -> None:
    for u, v in g.edges():
        assert u < v
        assert g.neighbors(u) & bit(v)
    assert len(g.edges()) == g.edge_count
    assert from_members(v for v in range(g.n) if g.degree(v) == 0) == g.isolated


def test_networkx_round_trip() -> None:
    g = make_grid(2, 3)
    nxg = g.to_networkx()
    assert nx.is_isomorphic(nxg, nx.grid_2d_graph(2, 3))
    assert Graph.from_networkx(nxg).edges() == g.edges()
    assert Graph.from_networkx(nx.empty_graph(3)).n == 3


@given(small_tf_graphs(max_n=7))
def test_constructed_graphs_need_no_filtering(g: Graph) -> None:
    assert g.find_triangle() is None
    assert not g.isolated
