"""Closed-form thresholds for caterpillars, tori, cylinders, grids and caterpillar unions.

Each evaluator runs its case table exactly as the theorem states it; an argument
pair that fires no case, or more than one, is a coverage bug and raises.
"""

from collections.abc import Callable

from graphs.bits import from_members
from graphs.errors import CaseCoverageError, DomainError, UnsupportedCaseError
from invariants import DeletionWitness, ThresholdPair

from .types import CasedPair, CasedValue, UnionRealization

Case = tuple[str, Callable[[int, int], bool], int]


def _fire(cases: list[Case], n: int, m: int, what: str) -> CasedValue:
    fired = [(name, value) for name, test, value in cases if test(n, m)]
    if len(fired) != 1:
        names = ", ".join(name for name, _ in fired) or "none"
        raise CaseCoverageError(f"{what}({n},{m}) fired {len(fired)} cases: {names}")
    name, value = fired[0]
    return CasedValue(value=value, case=name)


# ----------------------------------------------------------------------
# caterpillars T_{m,l}

_CATERPILLAR_A1: list[Case] = [
    ("m <= l", lambda m, l: l >= m, 1),
    ("m/2 <= l < m", lambda m, l: m // 2 <= l < m, 2),
    ("m/3 - 1 <= l <= m/2 - 1", lambda m, l: m // 3 - 1 <= l <= m // 2 - 1, 3),
    ("l <= m/3 - 2", lambda m, l: l <= m // 3 - 2, 4),
]


def _caterpillar_range(m: int, l: int) -> None:
    if m < 1:
        raise DomainError(f"caterpillar spine needs m >= 1, got {m}")
    if l == 0:
        raise UnsupportedCaseError("T_{m,0} is the path P_m; compute it with a1_by_alpha instead")
    if l < 0:
        raise DomainError(f"caterpillar needs l >= 1, got {l}")


def caterpillar_cases(m: int, l: int) -> CasedPair:
    _caterpillar_range(m, l)
    which = _fire(_CATERPILLAR_A1, m, l, "caterpillar_a1")
    value = (m, l, l + 1, l + 2)[which.value - 1]
    delta = l + min(m - 1, 2)
    return CasedPair(
        a1=CasedValue(value=value, case=which.case),
        a1_prime=CasedValue(value=delta, case="Δ(T_{m,l})"),
    )


def caterpillar_a1(m: int, l: int) -> int:
    return caterpillar_cases(m, l).a1.value


def caterpillar_witness(m: int, l: int) -> DeletionWitness:
    """The deletion set from the caterpillar argument; spine vertex i has index i."""
    _caterpillar_range(m, l)
    if l >= m:
        return DeletionWitness(x=from_members(range(m)), t=m)
    if m // 2 <= l:
        return DeletionWitness(x=from_members(range(1, m, 2)), t=l)
    if m // 3 - 1 <= l:
        return DeletionWitness(x=from_members(range(2, m, 3)), t=l + 1)
    return DeletionWitness(x=0, t=l + 2)


# ----------------------------------------------------------------------
# Cartesian products

_TORUS_A1: list[Case] = [
    ("n = m = 3", lambda n, m: n == 3 and m == 3, 1),
    ("n = 3, m = 4", lambda n, m: n == 3 and m == 4, 2),
    ("n = 3, m >= 5", lambda n, m: n == 3 and m >= 5, 3),
    ("m >= n >= 4", lambda n, m: n >= 4, 4),
]
_TORUS_A1_PRIME: list[Case] = [
    ("n = m = 3", lambda n, m: n == 3 and m == 3, 1),
    ("n = 3, m >= 4", lambda n, m: n == 3 and m >= 4, 3),
    ("m >= n >= 4", lambda n, m: n >= 4, 4),
]

_CYLINDER_A1: list[Case] = [
    ("n = 3, 2 <= m <= 5", lambda n, m: n == 3 and 2 <= m <= 5, 2),
    ("n = 4, m = 2", lambda n, m: n == 4 and m == 2, 2),
    ("n = 3, m >= 6", lambda n, m: n == 3 and m >= 6, 3),
    ("n = 4, 3 <= m <= 5", lambda n, m: n == 4 and 3 <= m <= 5, 3),
    ("n = 5, 2 <= m <= 4", lambda n, m: n == 5 and 2 <= m <= 4, 3),
    ("6 <= n <= 9, m in {2, 3}", lambda n, m: 6 <= n <= 9 and m in (2, 3), 3),
    ("n >= 10, m = 2", lambda n, m: n >= 10 and m == 2, 3),
    ("n = 4, m >= 6", lambda n, m: n == 4 and m >= 6, 4),
    ("n = 5, m >= 5", lambda n, m: n == 5 and m >= 5, 4),
    ("n >= 6, m >= 4", lambda n, m: n >= 6 and m >= 4, 4),
    ("n >= 10, m = 3", lambda n, m: n >= 10 and m == 3, 4),
]
_CYLINDER_A1_PRIME: list[Case] = [
    ("n = 3, m = 2", lambda n, m: n == 3 and m == 2, 2),
    ("n = 3, m >= 3", lambda n, m: n == 3 and m >= 3, 3),
    ("n >= 4, m = 2", lambda n, m: n >= 4 and m == 2, 3),
    ("n >= 4, m >= 3", lambda n, m: n >= 4 and m >= 3, 4),
]

_GRID_A1: list[Case] = [
    ("n = 2, 2 <= m <= 5", lambda n, m: n == 2 and m <= 5, 2),
    ("n = 3, m in {3, 4}", lambda n, m: n == 3 and m in (3, 4), 2),
    ("n = 2, m >= 6", lambda n, m: n == 2 and m >= 6, 3),
    ("n = 3, 5 <= m <= 11", lambda n, m: n == 3 and 5 <= m <= 11, 3),
    ("n = 4, 4 <= m <= 7", lambda n, m: n == 4 and m <= 7, 3),
    ("n = m = 5", lambda n, m: n == 5 and m == 5, 3),
    ("n = 3, m >= 12", lambda n, m: n == 3 and m >= 12, 4),
    ("n = 4, m >= 8", lambda n, m: n == 4 and m >= 8, 4),
    ("n = 5, m >= 6", lambda n, m: n == 5 and m >= 6, 4),
    ("m >= n >= 6", lambda n, m: n >= 6, 4),
]
_GRID_A1_PRIME: list[Case] = [
    ("n = m = 2", lambda n, m: n == 2 and m == 2, 2),
    ("n = 2, m >= 3", lambda n, m: n == 2 and m >= 3, 3),
    ("m >= n >= 3", lambda n, m: n >= 3, 4),
]


def torus_cases(n: int, m: int) -> CasedPair:
    if not 3 <= n <= m:
        raise DomainError(f"torus C_n □ C_m needs m >= n >= 3, got n={n}, m={m}")
    return CasedPair(a1=_fire(_TORUS_A1, n, m, "torus a1"), a1_prime=_fire(_TORUS_A1_PRIME, n, m, "torus a1'"))


def cylinder_cases(n: int, m: int) -> CasedPair:
    if n < 3 or m < 2:
        raise DomainError(f"cylinder C_n □ P_m needs n >= 3 and m >= 2, got n={n}, m={m}")
    return CasedPair(
        a1=_fire(_CYLINDER_A1, n, m, "cylinder a1"), a1_prime=_fire(_CYLINDER_A1_PRIME, n, m, "cylinder a1'")
    )


def grid_cases(n: int, m: int) -> CasedPair:
    if not 2 <= n <= m:
        raise DomainError(f"grid P_n □ P_m needs 2 <= n <= m, got n={n}, m={m}")
    return CasedPair(a1=_fire(_GRID_A1, n, m, "grid a1"), a1_prime=_fire(_GRID_A1_PRIME, n, m, "grid a1'"))


def torus_thresholds(n: int, m: int) -> ThresholdPair:
    return torus_cases(n, m).to_pair()


def cylinder_thresholds(n: int, m: int) -> ThresholdPair:
    return cylinder_cases(n, m).to_pair()


def grid_thresholds(n: int, m: int) -> ThresholdPair:
    return grid_cases(n, m).to_pair()


# ----------------------------------------------------------------------
# disjoint unions


def union_bounds(a1_g1: int, a1_g2: int) -> tuple[int, int]:
    """max{a_1(G1), a_1(G2)} <= a_1(G1 ∪ G2) <= a_1(G1) + a_1(G2)."""
    if a1_g1 < 1 or a1_g2 < 1:
        raise DomainError(f"thresholds are positive, got {a1_g1} and {a1_g2}")
    return max(a1_g1, a1_g2), a1_g1 + a1_g2


def realization_value(k: int, l: int, i: int) -> int:
    """a_1(T_{k,k+i} ∪ T_{l,k+i}) = k + i for 1 <= l <= k and 0 <= i <= l."""
    if not 1 <= l <= k:
        raise DomainError(f"need 1 <= l <= k, got k={k}, l={l}")
    if not 0 <= i <= l:
        raise DomainError(f"need 0 <= i <= l, got i={i}, l={l}")
    return k + i


def realize_union(k: int, l: int, p: int) -> UnionRealization:
    """Caterpillars with a_1 values k and l whose union has a_1 = p, for any k <= p <= k + l."""
    if not 1 <= l <= k <= p <= k + l:
        raise DomainError(f"need 1 <= l <= k <= p <= k + l, got k={k}, l={l}, p={p}")
    return UnionRealization(k=k, l=l, p=p)
