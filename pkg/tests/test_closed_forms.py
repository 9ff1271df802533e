import pytest
from pydantic import ValidationError

from closed_forms import (
    Family,
    FamilyParams,
    UnionRealization,
    caterpillar_a1,
    caterpillar_cases,
    caterpillar_witness,
    cylinder_a1_via_domination,
    cylinder_cases,
    cylinder_gamma_at_most_3,
    cylinder_thresholds,
    grid_a1_via_domination,
    grid_cases,
    grid_gamma_at_most_3,
    grid_thresholds,
    realization_value,
    realize_union,
    torus_cases,
    torus_thresholds,
    union_bounds,
)
from graphs import Graph, make_caterpillar, make_cylinder, make_grid, make_torus
from graphs.errors import DomainError, UnsupportedCaseError
from invariants import ThresholdPair, a1_by_alpha, a1_by_deletion, domination_number


@pytest.mark.parametrize(
    ("m", "l", "expected", "case"),
    [(2, 3, 2, "m <= l"), (4, 2, 2, "m/2 <= l < m"), (7, 2, 3, "m/3 - 1 <= l <= m/2 - 1"), (9, 1, 3, "l <= m/3 - 2")],
)
def test_caterpillar_cases(m: int, l: int, expected: int, case: str) -> None:
    assert caterpillar_a1(m, l) == expected
    assert caterpillar_cases(m, l).a1.case == case


def test_caterpillar_rejects_paths() -> None:
    with pytest.raises(UnsupportedCaseError, match="a1_by_alpha"):
        caterpillar_a1(5, 0)
    with pytest.raises(DomainError):
        caterpillar_a1(0, 2)


@pytest.mark.parametrize("m", range(1, 8))
@pytest.mark.parametrize("l", range(1, 4))
def test_caterpillar_matches_formula(m: int, l: int) -> None:
    g = make_caterpillar(m, l)
    pair = caterpillar_cases(m, l)
    assert pair.a1.value == a1_by_alpha(g)
    assert pair.a1_prime.value == g.max_degree
    witness = caterpillar_witness(m, l)
    assert witness.holds_for(g)
    assert witness.t == pair.a1.value


@pytest.mark.parametrize(
    ("n", "m", "expected"), [(3, 3, (1, 1)), (3, 4, (2, 3)), (3, 5, (3, 3)), (4, 4, (4, 4)), (5, 7, (4, 4))]
)
def test_torus_thresholds(n: int, m: int, expected: tuple[int, int]) -> None:
    assert torus_thresholds(n, m) == ThresholdPair(a1=expected[0], a1_prime=expected[1])


@pytest.mark.parametrize(
    ("n", "m", "expected"),
    [(3, 2, (2, 2)), (5, 2, (3, 3)), (10, 3, (4, 4)), (4, 2, (2, 3)), (6, 3, (3, 4)), (3, 6, (3, 3))],
)
def test_cylinder_thresholds(n: int, m: int, expected: tuple[int, int]) -> None:
    assert cylinder_thresholds(n, m) == ThresholdPair(a1=expected[0], a1_prime=expected[1])


@pytest.mark.parametrize(
    ("n", "m", "expected"),
    [(2, 2, (2, 2)), (2, 5, (2, 3)), (5, 5, (3, 4)), (3, 12, (4, 4)), (6, 6, (4, 4)), (2, 6, (3, 3))],
)
def test_grid_thresholds(n: int, m: int, expected: tuple[int, int]) -> None:
    assert grid_thresholds(n, m) == ThresholdPair(a1=expected[0], a1_prime=expected[1])


def test_every_cell_fires_exactly_one_case() -> None:
    for n in range(3, 16):
        for m in range(n, 16):
            torus_cases(n, m)
    for n in range(3, 16):
        for m in range(2, 16):
            cylinder_cases(n, m)
    for n in range(2, 16):
        for m in range(n, 16):
            grid_cases(n, m)


@pytest.mark.parametrize(
    ("evaluate", "n", "m"),
    [(torus_thresholds, 2, 5), (torus_thresholds, 5, 4), (cylinder_thresholds, 3, 1), (grid_thresholds, 3, 2)],
)
def test_out_of_range_is_a_domain_error(evaluate, n: int, m: int) -> None:
    with pytest.raises(DomainError):
        evaluate(n, m)


@pytest.mark.parametrize(
    ("g", "pair"),
    [
        (make_torus(4, 4), torus_thresholds(4, 4)),
        (make_grid(2, 3), grid_thresholds(2, 3)),
        (make_grid(2, 5), grid_thresholds(2, 5)),
        (make_grid(3, 4), grid_thresholds(3, 4)),
        (make_cylinder(4, 2), cylinder_thresholds(4, 2)),
        (make_cylinder(5, 3), cylinder_thresholds(5, 3)),
    ],
)
def test_product_formulas_agree_with_the_deletion_search(g: Graph, pair: ThresholdPair) -> None:
    assert a1_by_deletion(g) == pair.a1
    assert g.max_degree == pair.a1_prime


@pytest.mark.parametrize(("n", "m", "expected"), [(4, 5, 3), (4, 6, 4), (6, 4, 4), (5, 4, 3), (7, 3, 3)])
def test_cylinder_via_domination(n: int, m: int, expected: int) -> None:
    assert cylinder_a1_via_domination(n, m) == expected
    assert cylinder_thresholds(n, m).a1 == expected


@pytest.mark.parametrize(("n", "m", "expected"), [(3, 4, 2), (3, 11, 3), (3, 12, 4), (4, 7, 3), (4, 8, 4), (5, 5, 3)])
def test_grid_via_domination(n: int, m: int, expected: int) -> None:
    assert grid_a1_via_domination(n, m) == expected
    assert grid_thresholds(n, m).a1 == expected


def test_domination_routes_reject_small_inputs() -> None:
    with pytest.raises(DomainError):
        cylinder_a1_via_domination(3, 5)
    with pytest.raises(DomainError):
        grid_a1_via_domination(2, 5)


@pytest.mark.parametrize(("n", "m"), [(4, 1), (4, 3), (4, 4), (5, 2), (5, 3), (6, 1), (6, 2), (9, 1), (10, 1)])
def test_small_domination_characterisations(n: int, m: int) -> None:
    assert cylinder_gamma_at_most_3(n, m) == (domination_number(make_cylinder(n, m)) <= 3)


@pytest.mark.parametrize(("n", "m"), [(1, 9), (1, 10), (2, 4), (2, 5), (2, 6), (3, 3), (3, 4)])
def test_grid_domination_characterisation(n: int, m: int) -> None:
    assert grid_gamma_at_most_3(n, m) == (domination_number(make_grid(n, m)) <= 3)


def test_union_bounds() -> None:
    assert union_bounds(2, 3) == (3, 5)
    assert union_bounds(4, 4) == (4, 8)
    with pytest.raises(DomainError):
        union_bounds(0, 1)


@pytest.mark.parametrize(("k", "l", "i"), [(1, 1, 0), (1, 1, 1), (2, 1, 1), (2, 2, 0), (2, 2, 2), (3, 2, 1)])
def test_realization_value_matches_the_formula(k: int, l: int, i: int) -> None:
    realization = realize_union(k, l, k + i)
    g = realization.union()
    assert realization_value(k, l, i) == k + i
    assert a1_by_alpha(g) == k + i
    lo, hi = union_bounds(*(a1_by_alpha(part) for part in realization.graphs()))
    assert (lo, hi) == (realization.lower, realization.upper)
    assert lo <= k + i <= hi


def test_realization_order() -> None:
    assert realize_union(3, 2, 4).union().n == 25
    with pytest.raises(DomainError):
        realize_union(2, 3, 4)
    with pytest.raises(DomainError):
        realization_value(3, 2, 3)
    with pytest.raises(ValueError):
        UnionRealization(k=3, l=2, p=6)


def test_family_params() -> None:
    torus = FamilyParams(family=Family.torus, params=(3, 5))
    assert torus.thresholds().a1.value == 3
    assert torus.build().n == 15
    assert torus.label() == "torus(3,5)"
    union = FamilyParams(family=Family.union_realization, params=(3, 2, 1))
    assert union.thresholds().to_pair() == ThresholdPair(a1=4, a1_prime=6)
    assert union.build().n == 25


@pytest.mark.parametrize(
    ("family", "params"), [(Family.torus, (3,)), (Family.torus, (2, 5)), (Family.caterpillar, (4, 0))]
)
def test_family_params_validate(family: Family, params: tuple[int, ...]) -> None:
    with pytest.raises(ValidationError):
        FamilyParams(family=family, params=params)
