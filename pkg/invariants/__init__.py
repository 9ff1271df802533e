from .deletion import (
    a1_by_deletion,
    exists_deletion_set,
    min_deletion_witness,
    require_isolate_free,
    require_triangle_free,
)
from .domination import brute_force_dominating_set, domination_number, has_dominating_set, is_dominating
from .independence import a1_by_alpha, k_independence_number, k_independent_set_at_least
from .thresholds import triangle_free_thresholds
from .types import DeletionWitness, ThresholdPair

__all__ = [
    "ThresholdPair",
    "DeletionWitness",
    "k_independence_number",
    "k_independent_set_at_least",
    "exists_deletion_set",
    "min_deletion_witness",
    "a1_by_deletion",
    "a1_by_alpha",
    "triangle_free_thresholds",
    "has_dominating_set",
    "domination_number",
    "is_dominating",
    "brute_force_dominating_set",
    "require_triangle_free",
    "require_isolate_free",
]
