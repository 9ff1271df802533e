"""Edge-list text format.

Line 1 holds the vertex count n; every further non-empty line is an edge "u v" with
0 <= u, v < n. Lines starting with '#' are comments. The canonical form lists each
edge once as "u v" with u < v, sorted, and ends with a newline.
"""

from pathlib import Path

from .errors import EdgeListParseError
from .types import Graph


def _is_index(field: str) -> bool:
    # str.isdigit also accepts superscripts and other digits int() rejects
    return field.isascii() and field.isdigit()


def parse_edge_list(text: str) -> Graph:
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1 or not _is_index(fields[0]):
                raise EdgeListParseError(lineno, f"expected the vertex count, got {line!r}")
            n = int(fields[0])
            continue
        if len(fields) != 2 or not all(_is_index(f) for f in fields):
            raise EdgeListParseError(lineno, f"expected 'u v', got {line!r}")
        u, v = int(fields[0]), int(fields[1])
        if u >= n or v >= n:
            raise EdgeListParseError(lineno, f"vertex index {max(u, v)} out of range for n={n}")
        if u == v:
            raise EdgeListParseError(lineno, f"self-loop at vertex {u}")
        edge = (min(u, v), max(u, v))
        if edge in seen:
            raise EdgeListParseError(lineno, f"duplicate edge {edge[0]} {edge[1]}")
        seen.add(edge)
        edges.append(edge)
    if n is None:
        raise EdgeListParseError(1, "missing vertex count")
    return Graph.from_edges(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in sorted(g.edges())]
    return "\n".join(lines) + "\n"


def load_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def save_edge_list(g: Graph, path: str | Path) -> None:
    Path(path).write_text(serialize_edge_list(g), encoding="utf-8")
