"""Turn accounting and terminal rules shared by the solver, the policies and simulate."""

from graphs.bits import VertexSet, bit
from graphs.errors import IllegalPickError

from .types import GameSpec, GameState, Role


def winner(spec: GameSpec, state: GameState) -> Role | None:
    """Maker once his set contains a hyperedge, Breaker once every hyperedge meets hers, else None."""
    maker, breaker = state.maker_set, state.breaker_set
    if any(e & ~maker == 0 for e in spec.board.edges):
        return Role.maker
    if all(e & breaker for e in spec.board.edges):
        return Role.breaker
    return None


def next_mover(spec: GameSpec, state: GameState) -> Role:
    return spec.mover_after(state.picks)


def legal_picks(spec: GameSpec, state: GameState) -> VertexSet:
    if winner(spec, state) is not None:
        return 0
    return state.unplayed(spec.board.n)


def apply_pick(spec: GameSpec, state: GameState, v: int) -> GameState:
    if not 0 <= v < spec.board.n:
        raise IllegalPickError(f"vertex {v} is not on the board")
    if winner(spec, state) is not None:
        raise IllegalPickError(f"the game is over, cannot pick {spec.label(v)}")
    if state.played >> v & 1:
        raise IllegalPickError(f"vertex {spec.label(v)} is already played")
    if next_mover(spec, state) is Role.maker:
        return GameState(maker_set=state.maker_set | bit(v), breaker_set=state.breaker_set)
    return GameState(maker_set=state.maker_set, breaker_set=state.breaker_set | bit(v))
