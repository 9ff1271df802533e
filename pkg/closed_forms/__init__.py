from .domination import (
    cylinder_a1_via_domination,
    cylinder_gamma_at_most_3,
    grid_a1_via_domination,
    grid_gamma_at_most_3,
)
from .families import (
    caterpillar_a1,
    caterpillar_cases,
    caterpillar_witness,
    cylinder_cases,
    cylinder_thresholds,
    grid_cases,
    grid_thresholds,
    realization_value,
    realize_union,
    torus_cases,
    torus_thresholds,
    union_bounds,
)
from .params import FamilyParams
from .types import CasedPair, CasedValue, Family, UnionRealization

__all__ = [
    "Family",
    "FamilyParams",
    "CasedValue",
    "CasedPair",
    "UnionRealization",
    "caterpillar_a1",
    "caterpillar_cases",
    "caterpillar_witness",
    "torus_thresholds",
    "torus_cases",
    "cylinder_thresholds",
    "cylinder_cases",
    "grid_thresholds",
    "grid_cases",
    "union_bounds",
    "realization_value",
    "realize_union",
    "cylinder_a1_via_domination",
    "grid_a1_via_domination",
    "cylinder_gamma_at_most_3",
    "grid_gamma_at_most_3",
]
