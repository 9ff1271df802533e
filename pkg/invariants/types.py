from pydantic import BaseModel, ConfigDict, Field, model_validator

from graphs import Graph
from graphs.bits import VertexSet


class ThresholdPair(BaseModel):
    """a_1 and a_1'; a1_prime is None when the Bob-start threshold does not exist."""

    model_config = ConfigDict(frozen=True)

    a1: int = Field(ge=1)
    a1_prime: int | None = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _check_order(self) -> "ThresholdPair":
        if self.a1_prime is not None and self.a1 > self.a1_prime:
            raise ValueError(f"a1={self.a1} exceeds a1_prime={self.a1_prime}")
        return self

    def render(self) -> tuple[str, str]:
        return str(self.a1), "-" if self.a1_prime is None else str(self.a1_prime)


class DeletionWitness(BaseModel):
    """A set X with |X| <= t and Δ(G - X) <= t."""

    model_config = ConfigDict(frozen=True)

    x: VertexSet = Field(ge=0)
    t: int = Field(ge=0)

    def holds_for(self, g: Graph) -> bool:
        if self.x >> g.n:
            return False
        return self.x.bit_count() <= self.t and g.induced_max_degree(g.vertices & ~self.x) <= self.t
