"""Vertex sets as int bitmasks: bit v set means vertex v is a member."""

from collections.abc import Iterable, Iterator

VertexSet = int


def bit(v: int) -> VertexSet:
    return 1 << v


def full(n: int) -> VertexSet:
    return (1 << n) - 1


def from_members(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> Iterator[int]:
    """Yield members in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_list(mask: VertexSet) -> list[int]:
    return list(members(mask))


def lowest(mask: VertexSet) -> int:
    return (mask & -mask).bit_length() - 1


def lex_key(mask: VertexSet) -> tuple[int, tuple[int, ...]]:
    # smaller sets first, then lexicographic on sorted members
    return mask.bit_count(), tuple(members(mask))
