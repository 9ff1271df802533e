from collections.abc import Hashable, Iterable

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .bits import VertexSet, bit, from_members, full, members


class Graph(BaseModel):
    """Simple undirected graph on vertices 0..n-1; adj[v] is the neighbour bitmask of v."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    @model_validator(mode="after")
    def _check_simple(self) -> "Graph":
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for {self.n} vertices")
        everything = full(self.n)
        for v, row in enumerate(self.adj):
            if row & ~everything:
                raise ValueError(f"vertex {v} has a neighbour index >= {self.n}")
            if row & bit(v):
                raise ValueError(f"self-loop at vertex {v}")
            for u in members(row):
                if not self.adj[u] & bit(v):
                    raise ValueError(f"adjacency not symmetric for edge {v}-{u}")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise ValueError(f"{len(self.labels)} labels for {self.n} vertices")
            if len(set(self.labels)) != self.n:
                raise ValueError("vertex labels must be unique")
        return self

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Iterable[str] | None = None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            adj[u] |= bit(v)
            adj[v] |= bit(u)
        return cls(n=n, adj=tuple(adj), labels=tuple(labels) if labels is not None else None)

    @classmethod
    def from_networkx(cls, nxg: nx.Graph, labels: Iterable[str] | None = None) -> "Graph":
        """Vertex i is the i-th node of `nxg` in sorted order."""
        index: dict[Hashable, int] = {node: i for i, node in enumerate(sorted(nxg.nodes))}
        return cls.from_edges(len(index), ((index[u], index[v]) for u, v in nxg.edges), labels)

    def to_networkx(self) -> nx.Graph:
        nxg = nx.Graph()
        nxg.add_nodes_from(range(self.n))
        nxg.add_edges_from(self.edges())
        return nxg

    # ------------------------------------------------------------------

    @property
    def vertices(self) -> VertexSet:
        return full(self.n)

    def neighbors(self, v: int) -> VertexSet:
        return self.adj[v]

    def closed_neighbors(self, v: int) -> VertexSet:
        return self.adj[v] | bit(v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def induced_max_degree(self, mask: VertexSet) -> int:
        """Maximum degree of G[mask]."""
        return max((((self.adj[v] & mask).bit_count()) for v in members(mask)), default=0)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def isolated(self) -> VertexSet:
        return from_members(v for v, row in enumerate(self.adj) if not row)

    def find_triangle(self) -> tuple[int, int, int] | None:
        for u, v in self.edges():
            common = self.adj[u] & self.adj[v]
            if common:
                w = (common & -common).bit_length() - 1
                return tuple(sorted((u, v, w)))  # type: ignore[return-value]
        return None

    def is_complete_on(self, mask: VertexSet) -> bool:
        return all((self.adj[v] | bit(v)) & mask == mask for v in members(mask))

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def index_of(self, label: str) -> int:
        """Resolve a display label (e.g. a product coordinate "(1,2)") or a plain index."""
        if self.labels is not None:
            compact = label.replace(" ", "")
            for v, name in enumerate(self.labels):
                if name == compact:
                    return v
        plain = label.strip()
        if plain.isascii() and plain.isdigit() and int(plain) < self.n:
            return int(plain)
        raise KeyError(f"no vertex labelled {label!r}")

    def indices_of(self, labels: Iterable[str]) -> VertexSet:
        return from_members(self.index_of(name) for name in labels)

    def describe(self, mask: VertexSet) -> list[str]:
        return [self.label(v) for v in members(mask)]


class GraphSummary(BaseModel):
    n: int
    edge_count: int
    max_degree: int
    is_triangle_free: bool
    isolated: VertexSet
    triangle: tuple[int, int, int] | None = None


class VertexDeletion(BaseModel):
    """G - X together with the index maps between the two vertex numberings."""

    model_config = ConfigDict(frozen=True)

    graph: Graph
    old_to_new: dict[int, int]
    new_to_old: tuple[int, ...]

    def to_original(self, mask: VertexSet) -> VertexSet:
        return from_members(self.new_to_old[v] for v in members(mask))
