from loguru import logger

from graphs.bits import members
from graphs.errors import IllegalPickError, PolicyFaultError, ResourceBudgetError

from .policies import StrategyPolicy
from .rules import apply_pick, legal_picks, next_mover, winner
from .solver import SOLVER_BUDGET
from .types import GameSpec, GameState, Outcome, Role, SimulationResult, TranscriptEntry


def _checked_pick(spec: GameSpec, state: GameState, policy: StrategyPolicy) -> GameState:
    v = policy.pick(spec, state)
    try:
        return apply_pick(spec, state, v)
    except IllegalPickError as e:
        raise PolicyFaultError(policy.name, v, str(e)) from e


def simulate(
    spec: GameSpec,
    maker_policy: StrategyPolicy,
    breaker_policy: StrategyPolicy,
    state: GameState | None = None,
) -> SimulationResult:
    """Play the two policies against each other to the end; deterministic for deterministic policies."""
    state = state or GameState()
    transcript: list[TranscriptEntry] = []
    while (result := winner(spec, state)) is None:
        role = next_mover(spec, state)
        policy = maker_policy if role is Role.maker else breaker_policy
        before = state.played
        state = _checked_pick(spec, state, policy)
        v = (state.played & ~before).bit_length() - 1
        transcript.append(TranscriptEntry(player=role.player, vertex=v, label=spec.label(v)))
    logger.debug("{} vs {}: {} wins after {} picks", maker_policy.name, breaker_policy.name, result, len(transcript))
    return SimulationResult(
        outcome=Outcome(winner=result, variation=tuple(t.vertex for t in transcript), degenerate=spec.degenerate),
        transcript=transcript,
    )


def verify_policy(spec: GameSpec, policy: StrategyPolicy, role: Role, budget: int | None = None) -> bool:
    """Does `policy`, playing `role`, win against every possible sequence of opponent picks?"""
    budget = budget if budget is not None else SOLVER_BUDGET
    memo: dict[tuple[int, int], bool] = {}

    def holds(state: GameState) -> bool:
        decided = winner(spec, state)
        if decided is not None:
            return decided is role
        key = (state.maker_set, state.breaker_set)
        if key in memo:
            return memo[key]
        if next_mover(spec, state) is role:
            result = holds(_checked_pick(spec, state, policy))
        else:
            result = all(holds(apply_pick(spec, state, v)) for v in members(legal_picks(spec, state)))
        if len(memo) >= budget:
            raise ResourceBudgetError(f"verification of policy '{policy.name}'", budget)
        memo[key] = result
        return result

    return holds(GameState())
