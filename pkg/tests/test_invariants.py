from itertools import combinations

import pytest
from hypothesis import given

from graphs import Graph, disjoint_union, make_complete, make_cycle, make_cylinder, make_grid, make_path, make_torus
from graphs.bits import from_members
from graphs.errors import DomainError, ResourceBudgetError
from invariants import (
    DeletionWitness,
    ThresholdPair,
    a1_by_alpha,
    a1_by_deletion,
    brute_force_dominating_set,
    domination_number,
    exists_deletion_set,
    has_dominating_set,
    is_dominating,
    k_independence_number,
    k_independent_set_at_least,
    min_deletion_witness,
    triangle_free_thresholds,
)

from .strategies import graphs, small_tf_graphs


def alpha_by_subsets(g: Graph, k: int) -> int:
    for size in range(g.n, 0, -1):
        for combo in combinations(range(g.n), size):
            if g.induced_max_degree(from_members(combo)) <= k:
                return size
    return 0


def a1_by_subsets(g: Graph) -> int:
    best = g.n
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            x = from_members(combo)
            best = min(best, max(size, g.induced_max_degree(g.vertices & ~x)))
    return best


def test_alpha_examples() -> None:
    assert k_independence_number(make_cycle(5), 0) == 2
    assert k_independence_number(make_path(4), 1) == 3
    assert k_independence_number(make_cycle(6), 1) == 4
    assert k_independence_number(make_torus(3, 3), 4) == 9


@given(graphs(max_n=7))
def test_alpha_matches_subset_scan(g: Graph) -> None:
    for k in range(g.max_degree + 1):
        assert k_independence_number(g, k) == alpha_by_subsets(g, k)


@given(graphs(max_n=7))
def test_alpha_is_monotone_and_saturates(g: Graph) -> None:
    values = [k_independence_number(g, k) for k in range(g.max_degree + 1)]
    assert values == sorted(values)
    assert values[-1] == g.n


def test_alpha_budget() -> None:
    with pytest.raises(ResourceBudgetError) as info:
        k_independence_number(make_torus(5, 6), 0, budget=3)
    assert info.value.best is not None
    assert not info.value.exact


def test_k_independent_set_at_least() -> None:
    g = make_cycle(6)
    s = k_independent_set_at_least(g, 1, 4)
    assert s is not None
    assert s.bit_count() >= 4
    assert g.induced_max_degree(s) <= 1
    assert k_independent_set_at_least(g, 1, 5) is None


@given(graphs(max_n=7))
def test_decision_form_brackets_alpha(g: Graph) -> None:
    for k in range(g.max_degree + 1):
        alpha = k_independence_number(g, k)
        found = k_independent_set_at_least(g, k, alpha)
        assert found is not None
        assert g.induced_max_degree(found) <= k
        assert k_independent_set_at_least(g, k, alpha + 1) is None


def test_exists_deletion_set() -> None:
    g = make_torus(4, 4)
    assert exists_deletion_set(g, g.max_degree) == DeletionWitness(x=0, t=4)
    assert exists_deletion_set(make_cycle(4), 1) is None
    grid = make_grid(2, 5)
    witness = exists_deletion_set(grid, 2)
    assert witness is not None
    assert witness.holds_for(grid)
    assert witness.x.bit_count() <= 2


def test_deletion_witness_checks_itself() -> None:
    g = make_grid(2, 5)
    assert DeletionWitness(x=g.indices_of(["(1,2)", "(2,4)"]), t=2).holds_for(g)
    assert not DeletionWitness(x=0, t=2).holds_for(g)
    assert not DeletionWitness(x=1 << 20, t=2).holds_for(g)


@given(graphs(max_n=7))
def test_deletion_feasibility_is_monotone_in_t(g: Graph) -> None:
    feasible = [exists_deletion_set(g, t) is not None for t in range(g.max_degree + 2)]
    assert feasible == sorted(feasible)
    assert feasible[-1]


@pytest.mark.parametrize(
    ("g", "expected"),
    [
        (make_torus(4, 4), 4),
        (make_complete(2), 1),
        (make_grid(3, 3), 2),
        (make_cycle(6), 2),
        (make_grid(2, 2), 2),
    ],
)
def test_a1_by_deletion(g: Graph, expected: int) -> None:
    assert a1_by_deletion(g) == expected
    assert a1_by_alpha(g) == expected


@given(small_tf_graphs(max_n=7))
def test_the_two_formulas_agree(g: Graph) -> None:
    assert a1_by_alpha(g) == a1_by_deletion(g) == a1_by_subsets(g)
    assert min_deletion_witness(g).holds_for(g)


@given(small_tf_graphs(max_n=9))
def test_alpha_route_matches_deletion_route(g: Graph) -> None:
    assert a1_by_alpha(g) == a1_by_deletion(g)


def test_alpha_route_respects_its_budget() -> None:
    with pytest.raises(ResourceBudgetError):
        a1_by_alpha(make_grid(4, 4), budget=1)
    with pytest.raises(ResourceBudgetError):
        triangle_free_thresholds(make_grid(4, 4), budget=1)


def test_formula_preconditions() -> None:
    with pytest.raises(DomainError, match="triangle"):
        a1_by_deletion(make_cycle(3))
    with pytest.raises(DomainError, match="isolated"):
        a1_by_deletion(disjoint_union(make_path(2), make_path(1)))
    with pytest.raises(DomainError, match="triangle"):
        a1_by_alpha(make_torus(3, 4))


def test_isolated_vertices_count_towards_alice() -> None:
    # Alice must claim the lone vertex on her first turn, then answer Bob on the edge
    assert a1_by_alpha(disjoint_union(make_complete(2), make_path(1))) == 1
    three_isolated = disjoint_union(make_cycle(4), Graph.from_edges(3, []))
    assert a1_by_alpha(three_isolated) == 3


def test_triangle_free_thresholds() -> None:
    assert triangle_free_thresholds(make_grid(2, 2)) == ThresholdPair(a1=2, a1_prime=2)
    assert triangle_free_thresholds(make_cylinder(10, 2)) == ThresholdPair(a1=3, a1_prime=3)
    lone = triangle_free_thresholds(make_path(1))
    assert lone.a1_prime is None
    assert lone.render() == ("1", "-")
    with pytest.raises(DomainError):
        triangle_free_thresholds(make_cycle(3))


def test_threshold_pair_order() -> None:
    with pytest.raises(ValueError):
        ThresholdPair(a1=3, a1_prime=2)


def test_dominating_sets() -> None:
    assert has_dominating_set(make_cylinder(4, 3), 3) is not None
    assert has_dominating_set(make_cylinder(4, 4), 3) is None
    witness = has_dominating_set(make_path(9), 3)
    assert witness is not None
    assert is_dominating(make_path(9), witness)
    assert has_dominating_set(make_path(10), 3) is None


@pytest.mark.parametrize(
    ("g", "gamma"),
    [(make_cycle(6), 2), (make_complete(2), 1), (make_grid(3, 3), 3), (make_path(9), 3), (make_torus(4, 4), 4)],
)
def test_domination_number(g: Graph, gamma: int) -> None:
    assert domination_number(g) == gamma


@given(graphs(max_n=7))
def test_domination_matches_brute_force(g: Graph) -> None:
    for s in range(4):
        fast = has_dominating_set(g, s)
        slow = brute_force_dominating_set(g, s)
        assert (fast is None) == (slow is None)
        if fast is not None:
            assert fast.bit_count() <= s
            assert is_dominating(g, fast)


def test_domination_budget() -> None:
    with pytest.raises(ResourceBudgetError):
        has_dominating_set(make_torus(6, 6), 5, budget=10)
