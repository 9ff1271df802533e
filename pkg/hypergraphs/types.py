from pydantic import BaseModel, ConfigDict, Field, model_validator

from graphs.bits import VertexSet, from_members, full, lex_key, members


class Hypergraph(BaseModel):
    """Set system on vertices 0..n-1; each hyperedge is a nonempty bitmask."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    edges: tuple[int, ...]

    @model_validator(mode="after")
    def _check_edges(self) -> "Hypergraph":
        everything = full(self.n)
        for i, e in enumerate(self.edges):
            if e == 0:
                raise ValueError(f"hyperedge {i} is empty")
            if e & ~everything:
                raise ValueError(f"hyperedge {i} mentions a vertex >= {self.n}")
        return self

    @classmethod
    def from_lists(cls, n: int, edges: list[list[int]]) -> "Hypergraph":
        return cls(n=n, edges=tuple(from_members(e) for e in edges))

    @classmethod
    def from_json(cls, data: dict) -> "Hypergraph":
        edges = data["edges"]
        for e in edges:
            if any(a >= b for a, b in zip(e, e[1:], strict=False)):
                raise ValueError(f"hyperedge {e} is not strictly increasing")
        return cls.from_lists(data["n"], edges)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": self.edge_lists()}

    def edge_lists(self) -> list[list[int]]:
        return [list(members(e)) for e in self.edges]

    def canonical(self) -> "Hypergraph":
        return Hypergraph(n=self.n, edges=tuple(sorted(set(self.edges), key=lex_key)))

    # ------------------------------------------------------------------

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if e >> v & 1)

    @property
    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    @property
    def is_simple(self) -> bool:
        if len(set(self.edges)) != len(self.edges):
            return False
        return not any(e != f and e & f == e for e in self.edges for f in self.edges)

    @property
    def has_singleton(self) -> bool:
        return any(e.bit_count() == 1 for e in self.edges)

    def incident(self, v: int) -> list[VertexSet]:
        return [e for e in self.edges if e >> v & 1]
