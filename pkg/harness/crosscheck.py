"""Cross-validation suites: every check compares two independent routes to the same number."""

import random
from functools import partial

from loguru import logger

from closed_forms import (
    Family,
    FamilyParams,
    UnionRealization,
    caterpillar_witness,
    cylinder_a1_via_domination,
    cylinder_gamma_at_most_3,
    cylinder_thresholds,
    grid_a1_via_domination,
    grid_gamma_at_most_3,
    realization_value,
    torus_thresholds,
    union_bounds,
)
from games import (
    GameSpec,
    Player,
    Role,
    alice_wins,
    mct_spec,
    policy_alice_deletion,
    policy_bob_attack,
    policy_breaker_pairing,
    random_policy,
    simulate,
    solve,
    threshold_exact,
    verify_policy,
)
from graphs import Graph, disjoint_union, make_cylinder, make_grid
from graphs.bits import from_members
from hypergraphs import Hypergraph, simplify, transversal_hypergraph
from invariants import (
    a1_by_alpha,
    a1_by_deletion,
    has_dominating_set,
    k_independence_number,
    k_independent_set_at_least,
    min_deletion_witness,
)

from .enumerate import enumerate_masks, graph_from_mask
from .types import Budgets, CheckItem, CheckStatus, GraphFilter, Scope
from .workers import WorkItem

TINY_FILTERS = (GraphFilter.triangle_free, GraphFilter.isolate_free)
DEFAULT_BUDGETS = Budgets()

CYLINDER_DOMINATION_ROWS = range(4, 13)
CYLINDER_DOMINATION_COLUMNS = range(3, 11)
GRID_DOMINATION_SIZES = range(3, 15)


def _compare(scope: str, name: str, expected: object, actual: object, detail: str = "") -> CheckItem:
    status = CheckStatus.ok if expected == actual else CheckStatus.mismatch
    if status is CheckStatus.mismatch:
        logger.error("[{}] {} {}: expected {}, got {}", scope, name, detail, expected, actual)
    return CheckItem(scope=scope, name=name, expected=str(expected), actual=str(actual), status=status, detail=detail)


def random_graph(rng: random.Random, max_n: int) -> Graph:
    n = rng.randint(1, max_n)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])


def random_simple_hypergraph(rng: random.Random, max_n: int, max_edges: int, min_size: int = 1) -> Hypergraph:
    n = rng.randint(max(min_size, 1), max_n)
    edges = []
    for _ in range(rng.randint(1, max_edges)):
        size = rng.randint(min_size, n)
        edges.append(from_members(rng.sample(range(n), size)))
    return simplify(Hypergraph(n=n, edges=tuple(edges)))


# ----------------------------------------------------------------------
# tiny-exhaustive


def _decision_form_agrees(g: Graph, k: int, budget: int) -> bool:
    alpha = k_independence_number(g, k, budget=budget)
    return k_independent_set_at_least(g, k, alpha) is not None and k_independent_set_at_least(g, k, alpha + 1) is None


def check_tiny_graph(n: int, mask: int, budgets: Budgets = DEFAULT_BUDGETS) -> list[CheckItem]:
    """Formula, deletion search and exact play agree on one triangle-free, isolate-free graph."""
    scope = Scope.tiny_exhaustive
    g = graph_from_mask(n, mask)
    name = f"n={n} mask={mask:#x}"
    alpha = a1_by_alpha(g, budget=budgets.alpha)
    alice = threshold_exact(g, 1, Player.alice, budget=budgets.solver).value
    bob = threshold_exact(g, 1, Player.bob, budget=budgets.solver).value
    wins = tuple(alice_wins(g, a, 1, Player.alice, budget=budgets.solver) for a in range(1, g.max_degree + 1))
    decided = all(_decision_form_agrees(g, k, budgets.alpha) for k in range(g.max_degree))
    return [
        _compare(scope, name, alpha, a1_by_deletion(g), "a1_by_alpha vs a1_by_deletion"),
        _compare(scope, name, True, decided, "α_k vs the k-independent set decision form"),
        _compare(scope, name, alpha, alice, "a1_by_alpha vs threshold_exact(alice)"),
        _compare(scope, name, g.max_degree, bob, "Δ vs threshold_exact(bob)"),
        _compare(scope, name, tuple(a >= alpha for a in range(1, g.max_degree + 1)), wins, "Alice wins monotone in a"),
        _compare(scope, name, True, bob is not None and alice is not None and bob >= alice, "a1' >= a1"),
    ]


# ----------------------------------------------------------------------
# families


def _wants_exact(family: Family, n: int, m: int, size: int, exact_limit: int) -> bool:
    if exact_limit <= 0:
        return False
    # the triangle rows of the torus are checked by exact play only
    return size <= exact_limit or (family is Family.torus and n == 3 and m <= 5)


def check_family_cell(
    family: Family, n: int, m: int, exact_limit: int, budgets: Budgets = DEFAULT_BUDGETS
) -> list[CheckItem]:
    scope = Scope.families
    params = FamilyParams(family=family, params=(n, m))
    name = params.label()
    cased = params.thresholds().to_pair()
    g = params.build()
    checks: list[CheckItem] = []
    if g.find_triangle() is None:
        formula = a1_by_alpha(g, budget=budgets.alpha) if family is Family.caterpillar else a1_by_deletion(g)
        checks.append(_compare(scope, name, cased.a1, formula, "closed form vs formula engine"))
        checks.append(_compare(scope, name, cased.a1_prime, g.max_degree, "closed form a1' vs Δ"))
    if family is Family.caterpillar:
        witness = caterpillar_witness(n, m)
        checks.append(_compare(scope, name, True, witness.holds_for(g), "caterpillar deletion set is valid"))
        checks.append(_compare(scope, name, cased.a1, witness.t, "caterpillar deletion set size"))
    if _wants_exact(family, n, m, g.n, exact_limit):
        alice = threshold_exact(g, 1, Player.alice, budget=budgets.solver).value
        bob = threshold_exact(g, 1, Player.bob, budget=budgets.solver).value
        checks.append(_compare(scope, name, cased.a1, alice, "vs exact (alice)"))
        checks.append(_compare(scope, name, cased.a1_prime, bob, "vs exact (bob)"))
    return checks


def check_domination_row(
    family: Family, n: int, columns: range, budgets: Budgets = DEFAULT_BUDGETS
) -> list[CheckItem]:
    """Closed form against the dominating-set route along one row of the cylinder or grid table."""
    route = cylinder_a1_via_domination if family is Family.cylinder else grid_a1_via_domination
    checks = []
    for m in columns:
        params = FamilyParams(family=family, params=(n, m))
        cased, via = params.thresholds().to_pair().a1, route(n, m, budget=budgets.domination)
        checks.append(_compare(Scope.families, params.label(), cased, via, "closed form vs domination"))
    return checks


def check_cylinder_gamma(n: int, m: int, budgets: Budgets = DEFAULT_BUDGETS) -> list[CheckItem]:
    found = has_dominating_set(make_cylinder(n, m), 3, budget=budgets.domination) is not None
    return [_compare(Scope.families, f"γ(C_{n} □ P_{m}) <= 3", cylinder_gamma_at_most_3(n, m), found)]


def check_grid_gamma(n: int, m: int, budgets: Budgets = DEFAULT_BUDGETS) -> list[CheckItem]:
    found = has_dominating_set(make_grid(n, m), 3, budget=budgets.domination) is not None
    return [_compare(Scope.families, f"γ(P_{n} □ P_{m}) <= 3", grid_gamma_at_most_3(n, m), found)]


def check_cylinder_below_torus(n: int, m: int) -> list[CheckItem]:
    cyl, tor = cylinder_thresholds(n, m).a1, torus_thresholds(n, m).a1
    return [_compare(Scope.families, f"cylinder({n},{m}) <= torus({n},{m})", True, cyl <= tor, f"{cyl} <= {tor}")]


# ----------------------------------------------------------------------
# hypergraph-duality


def check_duality(seed: int, budgets: Budgets = DEFAULT_BUDGETS) -> list[CheckItem]:
    scope = Scope.hypergraph_duality
    rng = random.Random(seed)
    h = random_simple_hypergraph(rng, max_n=10, max_edges=8)
    name = f"seed={seed} n={h.n} edges={len(h.edges)}"
    tr = transversal_hypergraph(h, cap=budgets.transversal)
    back = transversal_hypergraph(tr, cap=budgets.transversal)
    checks = [_compare(scope, name, h.canonical(), back.canonical(), "Tr(Tr(H)) = H")]
    if h.n <= 8 and not h.has_singleton:
        on_h = solve(GameSpec(board=h, maker_per_turn=1, breaker_per_turn=1, first=Role.maker), budgets.solver)
        on_tr = solve(GameSpec(board=tr, maker_per_turn=1, breaker_per_turn=1, first=Role.breaker), budgets.solver)
        checks.append(_compare(scope, name, on_h.winner.other, on_tr.winner, "role switch between H and Tr(H)"))
    return checks


# ----------------------------------------------------------------------
# strategies


def check_graph_strategies(n: int, mask: int, budgets: Budgets = DEFAULT_BUDGETS) -> list[CheckItem]:
    """Bob's attack wins below a_1; Alice's deletion strategy wins at the witness bound."""
    scope = Scope.strategies
    g = graph_from_mask(n, mask)
    name = f"n={n} mask={mask:#x}"
    attack = policy_bob_attack(g)
    checks = []
    for a in range(1, a1_by_alpha(g, budget=budgets.alpha)):
        beaten = verify_policy(mct_spec(g, a, 1, Player.alice), attack, Role.maker, budget=budgets.solver)
        checks.append(_compare(scope, name, True, beaten, f"attack, a={a}"))
    witness = min_deletion_witness(g)
    deletion = policy_alice_deletion(g, witness)
    spec = mct_spec(g, witness.t, 1, Player.alice)
    held = verify_policy(spec, deletion, Role.breaker, budget=budgets.solver)
    checks.append(_compare(scope, name, True, held, f"deletion, a={witness.t}"))
    return checks


def check_pairing(board_seed: int, games: int) -> list[CheckItem]:
    rng = random.Random(board_seed)
    board = random_simple_hypergraph(rng, max_n=10, max_edges=8, min_size=2)
    spec = GameSpec(board=board, maker_per_turn=1, breaker_per_turn=board.max_degree, first=Role.maker)
    pairing = policy_breaker_pairing(spec)
    won = sum(simulate(spec, random_policy(seed), pairing).outcome.winner is Role.breaker for seed in range(games))
    name = f"board seed={board_seed} n={board.n} Δ={board.max_degree}"
    return [_compare(Scope.strategies, name, games, won, "pairing Breaker wins vs random Maker")]


# ----------------------------------------------------------------------
# unions


def check_realization(k: int, l: int, i: int, budgets: Budgets = DEFAULT_BUDGETS) -> list[CheckItem]:
    g = UnionRealization(k=k, l=l, p=k + i).union()
    name = f"T_{{{k},{k + i}}} ∪ T_{{{l},{k + i}}}"
    return [_compare(Scope.unions, name, realization_value(k, l, i), a1_by_alpha(g, budget=budgets.alpha))]


def check_union_bounds(seed: int, budgets: Budgets = DEFAULT_BUDGETS) -> list[CheckItem]:
    rng = random.Random(seed)
    g1, g2 = random_graph(rng, 5), random_graph(rng, 5)
    a1 = threshold_exact(g1, 1, Player.alice, budget=budgets.solver).value
    a2 = threshold_exact(g2, 1, Player.alice, budget=budgets.solver).value
    union = threshold_exact(disjoint_union(g1, g2), 1, Player.alice, budget=budgets.solver).value
    assert a1 is not None and a2 is not None and union is not None
    lo, hi = union_bounds(a1, a2)
    name = f"seed={seed} n1={g1.n} n2={g2.n}"
    return [_compare(Scope.unions, name, True, lo <= union <= hi, f"{lo} <= {union} <= {hi}")]


# ----------------------------------------------------------------------


def build_items(
    scope: Scope,
    *,
    max_n: int = 6,
    exact_limit: int = 14,
    samples: int = 500,
    boards: int = 50,
    games: int = 100,
    pairs: int = 200,
    seed: int = 0,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> list[WorkItem]:
    if scope is Scope.all:
        return [
            item
            for part in Scope
            if part is not Scope.all
            for item in build_items(
                part,
                max_n=max_n,
                exact_limit=exact_limit,
                samples=samples,
                boards=boards,
                games=games,
                pairs=pairs,
                seed=seed,
                budgets=budgets,
            )
        ]
    items: list[WorkItem] = []
    match scope:
        case Scope.tiny_exhaustive:
            for n in range(1, max_n + 1):
                for mask in enumerate_masks(n, TINY_FILTERS):
                    job = partial(check_tiny_graph, n, mask, budgets)
                    items.append(WorkItem(scope, f"n={n} mask={mask:#x}", job))
        case Scope.families:
            cells = [(Family.torus, n, m) for n in range(3, 9) for m in range(n, 9)]
            cells += [(Family.cylinder, n, m) for n in range(3, 13) for m in range(2, 9)]
            cells += [(Family.grid, n, m) for n in range(2, 7) for m in range(n, 14)]
            cells += [(Family.caterpillar, m, l) for m in range(1, 8) for l in range(1, 6)]
            for family, n, m in cells:
                job = partial(check_family_cell, family, n, m, exact_limit, budgets)
                items.append(WorkItem(scope, f"{family}({n},{m})", job))
            # one item per row keeps each domination job small
            for n in CYLINDER_DOMINATION_ROWS:
                job = partial(check_domination_row, Family.cylinder, n, CYLINDER_DOMINATION_COLUMNS, budgets)
                items.append(WorkItem(scope, f"domination row cylinder n={n}", job))
            for n in GRID_DOMINATION_SIZES:
                job = partial(check_domination_row, Family.grid, n, range(n, GRID_DOMINATION_SIZES.stop), budgets)
                items.append(WorkItem(scope, f"domination row grid n={n}", job))
            for n in range(4, 13):
                for m in range(1, 9):
                    items.append(WorkItem(scope, f"γ cylinder({n},{m})", partial(check_cylinder_gamma, n, m, budgets)))
            for n in range(1, 13):
                for m in range(n, 13):
                    items.append(WorkItem(scope, f"γ grid({n},{m})", partial(check_grid_gamma, n, m, budgets)))
            for n in range(3, 9):
                for m in range(max(n, 4), 9):
                    job = partial(check_cylinder_below_torus, n, m)
                    items.append(WorkItem(scope, f"cylinder<=torus({n},{m})", job))
        case Scope.hypergraph_duality:
            for s in range(seed, seed + samples):
                items.append(WorkItem(scope, f"seed={s}", partial(check_duality, s, budgets)))
        case Scope.strategies:
            for n in range(2, max_n + 1):
                for mask in enumerate_masks(n, TINY_FILTERS):
                    job = partial(check_graph_strategies, n, mask, budgets)
                    items.append(WorkItem(scope, f"n={n} mask={mask:#x}", job))
            for s in range(seed, seed + boards):
                items.append(WorkItem(scope, f"pairing board {s}", partial(check_pairing, s, games)))
        case Scope.unions:
            for k in range(1, 5):
                for l in range(1, k + 1):
                    for i in range(l + 1):
                        job = partial(check_realization, k, l, i, budgets)
                        items.append(WorkItem(scope, f"realization({k},{l},{i})", job))
            for s in range(seed, seed + pairs):
                items.append(WorkItem(scope, f"union seed={s}", partial(check_union_bounds, s, budgets)))
    logger.info("Scope {}: {} items", scope, len(items))
    return items
