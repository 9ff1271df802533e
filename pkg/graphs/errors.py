class WorkbenchError(Exception):
    """Base class for every error raised by the workbench packages."""


class EdgeListParseError(WorkbenchError, ValueError):
    def __init__(self, line: int, reason: str) -> None:
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class DomainError(WorkbenchError, ValueError):
    """An input violates the hypothesis an operation is defined under."""


class UnsupportedCaseError(DomainError):
    pass


class ResourceBudgetError(WorkbenchError):
    """A search exceeded its budget; `best` holds the best bound found, if any."""

    def __init__(self, what: str, budget: int, best: int | None = None) -> None:
        self.what = what
        self.budget = budget
        self.best = best
        self.exact = False
        detail = f" (best bound so far: {best}, inexact)" if best is not None else ""
        super().__init__(f"{what} exceeded budget of {budget}{detail}")


class IllegalPickError(WorkbenchError, ValueError):
    pass


class PolicyFaultError(WorkbenchError):
    def __init__(self, policy: str, vertex: int, reason: str) -> None:
        self.policy = policy
        self.vertex = vertex
        super().__init__(f"policy '{policy}' returned illegal pick {vertex}: {reason}")


class CaseCoverageError(WorkbenchError, RuntimeError):
    """A closed form matched no case, or a computed value contradicts a theorem hypothesis."""
