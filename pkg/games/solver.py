"""Exact Maker-Breaker solver over bitmask positions with a transposition table.

Picks inside a turn are made one vertex at a time and the schedule is a fixed
function of the number of picks, so a position is identified by the two claimed
sets alone. Only unplayed vertices of hyperedges Breaker has not yet hit are ever
tried: a vertex outside every live hyperedge cannot change the outcome, and
claiming an extra vertex never hurts in a monotone game.
"""

import os

from loguru import logger

from graphs.bits import VertexSet, bit, full, members
from graphs.errors import DomainError, ResourceBudgetError

from .rules import winner
from .types import GameSpec, GameState, Outcome, Role

SOLVER_BUDGET = int(os.getenv("SOLVER_BUDGET", str(2**26)))


class Solver:
    def __init__(self, spec: GameSpec, budget: int | None = None) -> None:
        if spec.board.n == 0:
            raise DomainError("cannot solve a game on an empty board")
        self.spec = spec
        self.n = spec.board.n
        self.budget = budget if budget is not None else SOLVER_BUDGET
        self.edges = spec.board.edges
        self.incident = [spec.board.incident(v) for v in range(self.n)]
        self.memo: dict[int, bool] = {}

    # ------------------------------------------------------------------

    def _ordered(self, maker: VertexSet, breaker: VertexSet) -> list[int]:
        """Unplayed vertices of live hyperedges, most urgent first.

        Urgency is the fewest vertices Maker still lacks in a live hyperedge through v,
        ties broken by the number of live hyperedges through v, then by index.
        """
        played = maker | breaker
        need: dict[int, int] = {}
        load: dict[int, int] = {}
        for e in self.edges:
            if e & breaker:
                continue
            lack = (e & ~maker).bit_count()
            for v in members(e & ~played):
                need[v] = min(need.get(v, lack), lack)
                load[v] = load.get(v, 0) + 1
        return sorted(need, key=lambda v: (need[v], -load[v], v))

    def _completes(self, maker: VertexSet, breaker: VertexSet, v: int) -> bool:
        grown = maker | bit(v)
        return any(e & ~grown == 0 for e in self.incident[v] if not e & breaker)

    def _blocks_all(self, breaker: VertexSet, v: int) -> bool:
        grown = breaker | bit(v)
        return all(e & grown for e in self.edges)

    def after(self, maker: VertexSet, breaker: VertexSet, v: int) -> bool:
        """Does Maker win with optimal play once the mover claims v?"""
        if self.spec.mover_after((maker | breaker).bit_count()) is Role.maker:
            return self._completes(maker, breaker, v) or self.maker_wins(maker | bit(v), breaker)
        return not self._blocks_all(breaker, v) and self.maker_wins(maker, breaker | bit(v))

    def maker_wins(self, maker: VertexSet, breaker: VertexSet) -> bool:
        """Value of a position that is not yet decided."""
        key = maker | breaker << self.n
        known = self.memo.get(key)
        if known is not None:
            return known
        mover = self.spec.mover_after((maker | breaker).bit_count())
        if mover is Role.maker:
            result = any(self.after(maker, breaker, v) for v in self._ordered(maker, breaker))
        else:
            result = all(self.after(maker, breaker, v) for v in self._ordered(maker, breaker))
        if len(self.memo) >= self.budget:
            raise ResourceBudgetError("game solver transposition table", self.budget)
        self.memo[key] = result
        return result

    # ------------------------------------------------------------------

    def best_pick(self, state: GameState) -> int:
        """A pick that keeps the mover's win if one exists, else the most urgent pick."""
        maker, breaker = state.maker_set, state.breaker_set
        moves = self._ordered(maker, breaker)
        if not moves:
            # only vertices outside every live hyperedge remain
            return next(members(full(self.n) & ~(maker | breaker)))
        want = self.spec.mover_after(state.picks) is Role.maker
        for v in moves:
            if self.after(maker, breaker, v) == want:
                return v
        return moves[0]

    def solve(self, state: GameState | None = None) -> Outcome:
        state = state or GameState()
        decided = winner(self.spec, state)
        if decided is not None:
            return Outcome(winner=decided, degenerate=self.spec.degenerate)
        verdict = Role.maker if self.maker_wins(state.maker_set, state.breaker_set) else Role.breaker
        variation: list[int] = []
        while winner(self.spec, state) is None:
            v = self.best_pick(state)
            variation.append(v)
            mover = self.spec.mover_after(state.picks)
            if mover is Role.maker:
                state = GameState(maker_set=state.maker_set | bit(v), breaker_set=state.breaker_set)
            else:
                state = GameState(maker_set=state.maker_set, breaker_set=state.breaker_set | bit(v))
        logger.debug(
            "Solved {}-vertex board (maker {}, breaker {}, {} first): {} wins, {} positions",
            self.n,
            self.spec.maker_per_turn,
            self.spec.breaker_per_turn,
            self.spec.first,
            verdict,
            len(self.memo),
        )
        return Outcome(winner=verdict, variation=tuple(variation), degenerate=self.spec.degenerate)


def solve(spec: GameSpec, budget: int | None = None) -> Outcome:
    return Solver(spec, budget=budget).solve()
