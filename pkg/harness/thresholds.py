from loguru import logger

from closed_forms import FamilyParams
from games import Method, Player, ThresholdResult, threshold_exact
from graphs import Graph
from graphs.bits import to_list
from graphs.errors import DomainError
from invariants import a1_by_alpha, min_deletion_witness

from .types import MethodChoice


def _closed(family: FamilyParams | None, l: int, start: Player) -> ThresholdResult:
    if family is None:
        raise DomainError("the closed method needs a recognized family (--family with in-range parameters)")
    if l != 1:
        raise DomainError(f"closed forms exist only for l = 1, got l={l}")
    cased = family.thresholds()
    value = cased.a1 if start is Player.alice else cased.a1_prime
    return ThresholdResult(
        value=None if value is None else value.value,
        method=Method.closed_form,
        start=start,
        bias=l,
        note=f"{family.label()}: {'absent' if value is None else value.case}",
    )


def _formula(g: Graph, l: int, start: Player) -> ThresholdResult:
    if l != 1:
        raise DomainError(f"the triangle-free formula covers l = 1 only, got l={l}")
    triangle = g.find_triangle()
    if triangle is not None:
        names = ", ".join(g.label(v) for v in triangle)
        raise DomainError(f"the formula needs a triangle-free graph; {{{names}}} is a triangle")
    if start is Player.bob:
        if g.isolated:
            return ThresholdResult(
                value=None, method=Method.formula, start=start, bias=l, note="an isolated vertex is a one-vertex clique"
            )
        return ThresholdResult(value=g.max_degree, method=Method.formula, start=start, bias=l, note="Δ(G)")
    value = a1_by_alpha(g)
    witness = None
    if not g.isolated:
        witness = to_list(min_deletion_witness(g).x)
    return ThresholdResult(
        value=value,
        method=Method.formula,
        start=start,
        bias=l,
        witness=witness,
        note="min over k of max{k, ℓ + n - α_k(G)}",
    )


def compute_threshold(
    g: Graph,
    family: FamilyParams | None,
    l: int,
    start: Player,
    method: MethodChoice,
    budget: int | None = None,
) -> ThresholdResult:
    """Dispatch: auto picks the closed form, then the triangle-free formula, then exact search."""
    start = Player(start)
    if method is MethodChoice.auto:
        if family is not None and l == 1:
            method = MethodChoice.closed
        elif l == 1 and g.find_triangle() is None:
            method = MethodChoice.formula
        else:
            method = MethodChoice.exact
        logger.info("auto method resolved to {}", method)
    match method:
        case MethodChoice.closed:
            return _closed(family, l, start)
        case MethodChoice.formula:
            return _formula(g, l, start)
        case _:
            return threshold_exact(g, l, start, budget=budget)
