"""The (a,b) monochromatic clique transversal game as a Maker-Breaker game on H_G.

Bob colours b vertices per turn and wins by claiming a whole maximal clique, so he is
Maker with bias b. Alice colours a per turn and wins when her set meets every
maximal clique, so she is Breaker with bias a.
"""

from loguru import logger

from graphs import Graph
from graphs.errors import DomainError
from hypergraphs import Hypergraph, clique_hypergraph

from .solver import Solver
from .types import GameSpec, Method, Player, Role, ThresholdResult


def mct_spec(g: Graph, a: int, b: int, first: Player, board: Hypergraph | None = None) -> GameSpec:
    if a < 1 or b < 1:
        raise DomainError(f"both biases must be positive, got a={a}, b={b}")
    if g.n == 0:
        raise DomainError("the MCT game needs at least one vertex")
    return GameSpec(
        board=board if board is not None else clique_hypergraph(g),
        maker_per_turn=b,
        breaker_per_turn=a,
        first=Player(first).role,
        labels=g.labels,
    )


def breaker_bound(g: Graph) -> int:
    """Δ(H_G): the most maximal cliques through one vertex; Alice wins with that many picks."""
    return clique_hypergraph(g).max_degree


def alice_wins(g: Graph, a: int, l: int, start: Player, budget: int | None = None) -> bool:
    return Solver(mct_spec(g, a, l, start), budget=budget).solve().winner is Role.breaker


def threshold_exact(g: Graph, l: int, start: Player, budget: int | None = None) -> ThresholdResult:
    """Smallest a with Alice winning the (a,l) game from `start`, found by solving a = 1, 2, ...

    The witness is Bob's winning line at a-1, so both sides of the crossing are on record.
    """
    start = Player(start)
    board = clique_hypergraph(g)
    if start is Player.bob and board.has_singleton:
        lone = next(e for e in board.edges if e.bit_count() == 1)
        return ThresholdResult(
            value=None,
            method=Method.exact,
            start=start,
            bias=l,
            note=f"Bob claims the one-vertex clique {{{g.label(lone.bit_length() - 1)}}} on his first pick",
        )
    cap = max(board.max_degree, g.n)
    losing_line: list[int] | None = None
    degenerate = False
    for a in range(1, cap + 1):
        outcome = Solver(mct_spec(g, a, l, start, board=board), budget=budget).solve()
        # a short first turn at any bias on the way up marks the whole search
        degenerate = degenerate or outcome.degenerate
        if outcome.winner is Role.breaker:
            logger.debug("threshold ({} starts, l={}) = {} on {}-vertex graph", start, l, a, g.n)
            note = "Alice wins at a=1" if a == 1 else f"Alice wins at a={a}, Bob wins at a={a - 1}"
            return ThresholdResult(
                value=a,
                method=Method.exact,
                start=start,
                bias=l,
                witness=losing_line,
                note=note,
                degenerate=degenerate,
            )
        losing_line = list(outcome.variation)
    return ThresholdResult(
        value=None,
        method=Method.exact,
        start=start,
        bias=l,
        witness=losing_line,
        note=f"Bob still wins at a={cap} = max(Δ(H_G), n)",
        degenerate=degenerate,
    )
