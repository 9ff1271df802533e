from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, model_validator

from graphs.bits import VertexSet, full
from hypergraphs import Hypergraph


class Player(StrEnum):
    alice = "alice"
    bob = "bob"

    @property
    def role(self) -> "Role":
        # Bob is Maker on the clique hypergraph, Alice is Breaker
        return Role.maker if self is Player.bob else Role.breaker


class Role(StrEnum):
    maker = "maker"
    breaker = "breaker"

    @property
    def player(self) -> Player:
        return Player.bob if self is Role.maker else Player.alice

    @property
    def other(self) -> "Role":
        return Role.breaker if self is Role.maker else Role.maker


class Method(StrEnum):
    exact = "exact"
    formula = "formula"
    closed_form = "closed_form"


class GameSpec(BaseModel):
    """A biased Maker-Breaker game: Maker claims maker_per_turn vertices per turn, Breaker breaker_per_turn."""

    model_config = ConfigDict(frozen=True)

    board: Hypergraph
    maker_per_turn: PositiveInt
    breaker_per_turn: PositiveInt
    first: Role
    labels: tuple[str, ...] | None = None

    @model_validator(mode="after")
    def _check_board(self) -> "GameSpec":
        if not self.board.is_simple:
            raise ValueError("the board hypergraph must be simple")
        if self.labels is not None and len(self.labels) != self.board.n:
            raise ValueError("one label per board vertex")
        return self

    def per_turn(self, role: Role) -> int:
        return self.maker_per_turn if role is Role.maker else self.breaker_per_turn

    def mover_after(self, picks: int) -> Role:
        """Who makes pick number `picks` (0-based); the schedule depends only on the pick count."""
        lead = self.per_turn(self.first)
        r = picks % (lead + self.per_turn(self.first.other))
        return self.first if r < lead else self.first.other

    @property
    def degenerate(self) -> bool:
        return self.board.n < self.per_turn(self.first)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


class GameState(BaseModel):
    model_config = ConfigDict(frozen=True)

    maker_set: VertexSet = 0
    breaker_set: VertexSet = 0

    @model_validator(mode="after")
    def _check_disjoint(self) -> "GameState":
        if self.maker_set & self.breaker_set:
            raise ValueError("a vertex cannot belong to both players")
        return self

    @property
    def played(self) -> VertexSet:
        return self.maker_set | self.breaker_set

    @property
    def picks(self) -> int:
        return self.played.bit_count()

    def unplayed(self, n: int) -> VertexSet:
        return full(n) & ~self.played


class Outcome(BaseModel):
    winner: Role
    variation: tuple[int, ...] = ()
    degenerate: bool = False

    @property
    def winner_player(self) -> Player:
        return self.winner.player


class ThresholdResult(BaseModel):
    """a_l(G) (Alice starts) or a_l'(G) (Bob starts); value None means the threshold does not exist."""

    value: int | None = Field(default=None, ge=1)
    method: Method
    start: Player
    bias: PositiveInt = 1
    witness: list[int] | None = None
    note: str = ""
    degenerate: bool = False


class TranscriptEntry(BaseModel):
    player: Player
    vertex: int
    label: str


class SimulationResult(BaseModel):
    outcome: Outcome
    transcript: list[TranscriptEntry]
