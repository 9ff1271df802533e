from .mct import alice_wins, breaker_bound, mct_spec, threshold_exact
from .policies import (
    StrategyPolicy,
    exact_policy,
    policy_alice_deletion,
    policy_bob_attack,
    policy_breaker_pairing,
    random_policy,
)
from .rules import apply_pick, legal_picks, next_mover, winner
from .simulate import simulate, verify_policy
from .solver import SOLVER_BUDGET, Solver, solve
from .types import (
    GameSpec,
    GameState,
    Method,
    Outcome,
    Player,
    Role,
    SimulationResult,
    ThresholdResult,
    TranscriptEntry,
)

__all__ = [
    "GameSpec",
    "GameState",
    "Outcome",
    "ThresholdResult",
    "TranscriptEntry",
    "SimulationResult",
    "Player",
    "Role",
    "Method",
    "Solver",
    "SOLVER_BUDGET",
    "solve",
    "mct_spec",
    "threshold_exact",
    "breaker_bound",
    "alice_wins",
    "legal_picks",
    "apply_pick",
    "next_mover",
    "winner",
    "StrategyPolicy",
    "policy_breaker_pairing",
    "policy_alice_deletion",
    "policy_bob_attack",
    "exact_policy",
    "random_policy",
    "simulate",
    "verify_policy",
]
