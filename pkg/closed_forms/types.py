from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from graphs import Graph, disjoint_union, make_caterpillar
from invariants import ThresholdPair


class Family(StrEnum):
    caterpillar = "caterpillar"
    torus = "torus"
    cylinder = "cylinder"
    grid = "grid"
    union_realization = "union_realization"


class CasedValue(BaseModel):
    """A closed-form value together with the case of the theorem that produced it."""

    model_config = ConfigDict(frozen=True)

    value: int = Field(ge=1)
    case: str


class CasedPair(BaseModel):
    model_config = ConfigDict(frozen=True)

    a1: CasedValue
    a1_prime: CasedValue | None

    def to_pair(self) -> ThresholdPair:
        return ThresholdPair(a1=self.a1.value, a1_prime=None if self.a1_prime is None else self.a1_prime.value)


class UnionRealization(BaseModel):
    """Caterpillars G1 = T_{k,p} and G2 = T_{l,p} whose union has a_1 = p."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=1)
    l: int = Field(ge=1)
    p: int = Field(ge=1)

    @model_validator(mode="after")
    def _check_window(self) -> "UnionRealization":
        if not 1 <= self.l <= self.k <= self.p <= self.k + self.l:
            raise ValueError(f"need 1 <= l <= k <= p <= k + l, got k={self.k}, l={self.l}, p={self.p}")
        return self

    @property
    def lower(self) -> int:
        return self.k

    @property
    def upper(self) -> int:
        return self.k + self.l

    def graphs(self) -> tuple[Graph, Graph]:
        return make_caterpillar(self.k, self.p), make_caterpillar(self.l, self.p)

    def union(self) -> Graph:
        return disjoint_union(*self.graphs())
