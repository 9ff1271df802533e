"""Scripted strategies. Every policy is a pure function of (spec, state)."""

import random
from typing import Protocol, runtime_checkable

from graphs import Graph
from graphs.bits import lowest, members
from graphs.errors import DomainError
from invariants import DeletionWitness, require_isolate_free, require_triangle_free

from .rules import next_mover
from .solver import Solver
from .types import GameSpec, GameState


@runtime_checkable
class StrategyPolicy(Protocol):
    name: str

    def pick(self, spec: GameSpec, state: GameState) -> int: ...


def _live_or_any(spec: GameSpec, state: GameState) -> int:
    """Lowest unplayed vertex of an unhit hyperedge, else the lowest unplayed vertex."""
    unplayed = state.unplayed(spec.board.n)
    for e in spec.board.edges:
        if not e & state.breaker_set and e & unplayed:
            return lowest(e & unplayed)
    return lowest(unplayed)


class PairingBreaker:
    """Answers each Maker pick v by hitting every unhit hyperedge through v."""

    name = "pairing"

    def __init__(self, spec: GameSpec) -> None:
        if spec.board.has_singleton:
            raise DomainError("pairing needs a board without one-vertex hyperedges")
        if spec.breaker_per_turn < spec.board.max_degree:
            raise DomainError(
                f"pairing needs breaker_per_turn >= Δ(board) = {spec.board.max_degree}, got {spec.breaker_per_turn}"
            )
        self.board = spec.board

    def pick(self, spec: GameSpec, state: GameState) -> int:
        unplayed = state.unplayed(spec.board.n)
        for e in self.board.edges:
            if e & state.maker_set and not e & state.breaker_set:
                return lowest(e & unplayed)
        return _live_or_any(spec, state)


class DeletionAlice:
    """Alice claims the deletion set X first, then every unplayed neighbour of Bob's vertices."""

    name = "deletion"

    def __init__(self, g: Graph, witness: DeletionWitness) -> None:
        require_triangle_free(g)
        require_isolate_free(g)
        if not witness.holds_for(g):
            raise DomainError(f"{g.describe(witness.x)} is not a deletion witness for t={witness.t}")
        self.g = g
        self.witness = witness

    def guarantees(self, spec: GameSpec) -> bool:
        """The strategy only forces a win once Alice picks at least t vertices per turn."""
        return spec.breaker_per_turn >= self.witness.t

    def pick(self, spec: GameSpec, state: GameState) -> int:
        unplayed = state.unplayed(self.g.n)
        for u in members(state.maker_set):
            threat = self.g.adj[u] & unplayed
            if threat:
                return lowest(threat)
        rest = self.witness.x & unplayed
        if rest:
            return lowest(rest)
        return lowest(unplayed)


class AttackBob:
    """Bob finds a vertex with more than a unplayed neighbours, then claims one of them."""

    name = "attack"

    def __init__(self, g: Graph) -> None:
        require_triangle_free(g)
        self.g = g

    def pick(self, spec: GameSpec, state: GameState) -> int:
        unplayed = state.unplayed(self.g.n)
        for u in members(state.maker_set):
            open_ = self.g.adj[u] & unplayed
            if open_:
                return lowest(open_)
        best = max(members(unplayed), key=lambda v: ((self.g.adj[v] & unplayed).bit_count(), -v))
        if (self.g.adj[best] & unplayed).bit_count() > spec.breaker_per_turn:
            return best
        return lowest(unplayed)


class ExactPolicy:
    """Optimal play from the solver; one solver (and transposition table) per game spec."""

    name = "exact"

    def __init__(self, budget: int | None = None) -> None:
        self.budget = budget
        self._solvers: dict[GameSpec, Solver] = {}

    def pick(self, spec: GameSpec, state: GameState) -> int:
        solver = self._solvers.get(spec)
        if solver is None:
            solver = self._solvers[spec] = Solver(spec, budget=self.budget)
        return solver.best_pick(state)


class RandomPolicy:
    name = "random"

    def __init__(self, seed: int) -> None:
        self.seed = seed

    def pick(self, spec: GameSpec, state: GameState) -> int:
        # seeded by the position itself, so replays agree pick for pick
        rng = random.Random(f"{self.seed}:{next_mover(spec, state)}:{state.maker_set}:{state.breaker_set}")
        return rng.choice(list(members(state.unplayed(spec.board.n))))


def policy_breaker_pairing(spec: GameSpec) -> StrategyPolicy:
    return PairingBreaker(spec)


def policy_alice_deletion(g: Graph, witness: DeletionWitness) -> StrategyPolicy:
    return DeletionAlice(g, witness)


def policy_bob_attack(g: Graph) -> StrategyPolicy:
    return AttackBob(g)


def exact_policy(budget: int | None = None) -> StrategyPolicy:
    return ExactPolicy(budget=budget)


def random_policy(seed: int) -> StrategyPolicy:
    return RandomPolicy(seed)
