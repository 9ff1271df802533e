"""a_1 of cylinders and grids through small dominating sets of the inner product.

For n >= 4 the cylinder C_n □ P_m has a_1 > 2, and a_1 = 3 exactly when C_n □ P_{m-2}
has a dominating set of size 3 (delete it, the rest has maximum degree 3). Grids reduce
the same way to P_{n-2} □ P_{m-2}. Every remaining case has value 4, the number of
maximal cliques through an interior vertex.
"""

from loguru import logger

from graphs import Graph, make_cylinder, make_grid
from graphs.errors import CaseCoverageError, DomainError
from invariants import exists_deletion_set, has_dominating_set
from invariants.domination import DEFAULT_DOMINATION_BUDGET


def _assert_above_two(g: Graph, name: str) -> None:
    witness = exists_deletion_set(g, 2)
    if witness is not None:
        raise CaseCoverageError(f"{name} has a deletion set {g.describe(witness.x)} of size <= 2, so a_1 <= 2")


def cylinder_a1_via_domination(n: int, m: int, budget: int = DEFAULT_DOMINATION_BUDGET) -> int:
    if n < 4 or m < 3:
        raise DomainError(f"the domination route needs n >= 4 and m >= 3, got n={n}, m={m}")
    _assert_above_two(make_cylinder(n, m), f"C_{n} □ P_{m}")
    inner = make_cylinder(n, m - 2)
    value = 3 if has_dominating_set(inner, 3, budget=budget) is not None else 4
    logger.debug("cylinder ({},{}) via domination: {}", n, m, value)
    return value


def grid_a1_via_domination(n: int, m: int, budget: int = DEFAULT_DOMINATION_BUDGET) -> int:
    if not 3 <= n <= m:
        raise DomainError(f"the domination route needs 3 <= n <= m, got n={n}, m={m}")
    if n == 3 and m in (3, 4):
        return 2
    _assert_above_two(make_grid(n, m), f"P_{n} □ P_{m}")
    inner = make_grid(n - 2, m - 2)
    value = 3 if has_dominating_set(inner, 3, budget=budget) is not None else 4
    logger.debug("grid ({},{}) via domination: {}", n, m, value)
    return value


def cylinder_gamma_at_most_3(n: int, m: int) -> bool:
    """γ(C_n □ P_m) <= 3 for n >= 4, m >= 1, by the known small cases."""
    if n < 4 or m < 1:
        raise DomainError(f"need n >= 4 and m >= 1, got n={n}, m={m}")
    return (n == 4 and m <= 3) or (n == 5 and m <= 2) or (6 <= n <= 9 and m == 1)


def grid_gamma_at_most_3(n: int, m: int) -> bool:
    """γ(P_n □ P_m) <= 3 for 1 <= n <= m, by the known small cases."""
    if not 1 <= n <= m:
        raise DomainError(f"need 1 <= n <= m, got n={n}, m={m}")
    return (n == 1 and m <= 9) or (n == 2 and m <= 5) or (n == 3 and m == 3)
