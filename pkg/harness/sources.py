"""Turning CLI arguments into graphs: named families or edge-list files."""

from pathlib import Path

from loguru import logger

from closed_forms import Family, FamilyParams
from graphs import (
    Graph,
    load_edge_list,
    make_caterpillar,
    make_complete,
    make_cycle,
    make_cylinder,
    make_grid,
    make_path,
    make_torus,
)
from graphs.errors import DomainError

_BUILDERS = {
    "path": (make_path, 1),
    "cycle": (make_cycle, 1),
    "complete": (make_complete, 1),
    "caterpillar": (make_caterpillar, 2),
    "torus": (make_torus, 2),
    "cylinder": (make_cylinder, 2),
    "grid": (make_grid, 2),
}

FAMILY_NAMES = sorted({*_BUILDERS, *Family})


def build_family(name: str, params: list[int]) -> tuple[Graph, FamilyParams | None]:
    """The graph, plus its closed-form parameters when (name, params) lies in a theorem's range."""
    recognized: FamilyParams | None = None
    if name in set(Family):
        try:
            recognized = FamilyParams(family=Family(name), params=tuple(params))
        except ValueError as e:
            logger.debug("{}{} is outside the closed-form range: {}", name, tuple(params), e)
    if recognized is not None:
        return recognized.build(), recognized
    if name not in _BUILDERS:
        raise DomainError(f"unknown or out-of-range family {name!r}; known families: {', '.join(FAMILY_NAMES)}")
    builder, arity = _BUILDERS[name]
    if len(params) != arity:
        raise DomainError(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
    return builder(*params), None


def resolve_graph(
    family: str | None, params: list[int] | None, edge_list: Path | None
) -> tuple[Graph, FamilyParams | None]:
    if (family is None) == (edge_list is None):
        raise DomainError("give exactly one of --family NAME PARAMS... or --edge-list PATH")
    if edge_list is not None:
        g = load_edge_list(edge_list)
        logger.info("Loaded {}: n={} edges={}", edge_list, g.n, g.edge_count)
        return g, None
    assert family is not None
    g, recognized = build_family(family, params or [])
    logger.info("Built {}{}: n={} edges={}", family, tuple(params or []), g.n, g.edge_count)
    return g, recognized


def parse_span(text: str) -> range:
    """"3..12" is the inclusive range 3..12; a single number is a one-element range."""
    lo, sep, hi = text.partition("..")
    try:
        start = int(lo)
        stop = int(hi) if sep else start
    except ValueError as e:
        raise DomainError(f"expected N or A..B, got {text!r}") from e
    if stop < start:
        raise DomainError(f"empty range {text!r}")
    return range(start, stop + 1)
