from enum import StrEnum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, computed_field

from games import Method
from hypergraphs.transversal import DEFAULT_TRANSVERSAL_CAP
from invariants.domination import DEFAULT_DOMINATION_BUDGET
from invariants.independence import DEFAULT_NODE_BUDGET


class MethodChoice(StrEnum):
    exact = "exact"
    formula = "formula"
    closed = "closed"
    auto = "auto"


class TableFormat(StrEnum):
    csv = "csv"
    json = "json"


class GraphFilter(StrEnum):
    all = "all"
    triangle_free = "triangle-free"
    isolate_free = "isolate-free"


class Scope(StrEnum):
    tiny_exhaustive = "tiny-exhaustive"
    families = "families"
    hypergraph_duality = "hypergraph-duality"
    strategies = "strategies"
    unions = "unions"
    all = "all"


class CheckStatus(StrEnum):
    ok = "ok"
    mismatch = "mismatch"
    budget = "budget"


class Budgets(BaseModel):
    """Search limits handed to every crosscheck item; a solver budget of None reads SOLVER_BUDGET."""

    model_config = ConfigDict(frozen=True)

    alpha: PositiveInt = DEFAULT_NODE_BUDGET
    transversal: PositiveInt = DEFAULT_TRANSVERSAL_CAP
    domination: PositiveInt = DEFAULT_DOMINATION_BUDGET
    solver: PositiveInt | None = None


class CheckItem(BaseModel):
    scope: str
    name: str
    expected: str
    actual: str
    status: CheckStatus
    detail: str = ""


class TableCell(BaseModel):
    n: int
    m: int
    a1: int | None = None
    a1_prime: int | None = None
    method_a1: Method | None = None
    method_a1_prime: Method | None = None
    case_a1: str = ""
    case_a1_prime: str = ""
    in_range: bool = True
    note: str = ""

    def csv_row(self) -> str:
        def show(value: int | None) -> str:
            return "-" if value is None else str(value)

        return ",".join(
            [
                str(self.n),
                str(self.m),
                show(self.a1),
                show(self.a1_prime),
                self.method_a1 or "",
                self.method_a1_prime or "",
            ]
        )


class RunReport(BaseModel):
    command: str
    argv: list[str] = Field(default_factory=list)
    results: list[dict[str, Any]] = Field(default_factory=list)
    checks: list[CheckItem] = Field(default_factory=list)
    wall_time: float = 0.0

    @computed_field
    @property
    def mismatches(self) -> list[CheckItem]:
        return [c for c in self.checks if c.status is CheckStatus.mismatch]

    @computed_field
    @property
    def budget_failures(self) -> list[CheckItem]:
        return [c for c in self.checks if c.status is CheckStatus.budget]

    @property
    def exit_code(self) -> int:
        if self.mismatches:
            return 1
        if self.budget_failures:
            return 3
        return 0
