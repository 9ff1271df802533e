import json
import sys
import time
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

import typer
from dotenv import load_dotenv
from loguru import logger

load_dotenv()  # Load .env before importing modules that may read env vars at import time

from closed_forms import Family  # noqa: E402
from games import GameSpec, Player, Role, mct_spec, simulate  # noqa: E402
from graphs import inspect, save_edge_list  # noqa: E402
from graphs.errors import ResourceBudgetError, WorkbenchError  # noqa: E402
from harness import (  # noqa: E402
    AlicePolicy,
    BobPolicy,
    Budgets,
    GraphFilter,
    MethodChoice,
    RunReport,
    Scope,
    TableFormat,
    alice_policy,
    bob_policy,
    build_items,
    cell_check_items,
    compute_threshold,
    engine_for_alice,
    engine_for_bob,
    enumerate_masks,
    family_table,
    graph_from_mask,
    parse_span,
    play_session,
    render_table,
    resolve_graph,
    run_directory,
    run_items,
    write_run,
)
from hypergraphs import clique_hypergraph  # noqa: E402
from hypergraphs.transversal import DEFAULT_TRANSVERSAL_CAP  # noqa: E402
from invariants.domination import DEFAULT_DOMINATION_BUDGET  # noqa: E402
from invariants.independence import DEFAULT_NODE_BUDGET  # noqa: E402

app = typer.Typer(no_args_is_help=True)


@app.callback()
def _setup(log_level: str = typer.Option("INFO", "--log-level", help="Minimum level written to stderr")):
    logger.remove()
    logger.add(sys.stderr, level=log_level.upper())


@contextmanager
def _exit_codes() -> Iterator[None]:
    """0 ok, 1 mismatch or internal fault, 2 usage or domain error, 3 resource budget exceeded."""
    try:
        yield
    except ResourceBudgetError as e:
        logger.error("{}", e)
        raise typer.Exit(3) from e
    except (ValueError, KeyError, FileNotFoundError) as e:
        logger.error("{}", e)
        raise typer.Exit(2) from e
    except WorkbenchError as e:
        logger.error("{}", e)
        raise typer.Exit(1) from e


def _finish(report: RunReport, run_dir: Path | None, payloads: dict[str, str] | None = None) -> None:
    if run_dir is not None:
        write_run(run_dir, report, payloads)
    if report.exit_code:
        logger.error("{} mismatches, {} budget failures", len(report.mismatches), len(report.budget_failures))
        raise typer.Exit(report.exit_code)


@app.command()
def threshold(
    params: list[int] = typer.Argument(None, help="Family parameters, e.g. 3 5 for --family torus"),  # noqa: B008
    family: str | None = typer.Option(None, "--family", "-f", help="Graph family name"),
    edge_list: Path | None = typer.Option(None, "--edge-list", "-e", help="Edge-list file"),  # noqa: B008
    l: int = typer.Option(1, "--bias", "-l", min=1, help="Bob's picks per turn"),
    start: Player = typer.Option(Player.alice, "--start", help="Who moves first"),  # noqa: B008
    method: MethodChoice = typer.Option(MethodChoice.auto, "--method", "-m"),  # noqa: B008
    budget: int | None = typer.Option(None, "--budget", help="Solver transposition-table cap"),  # noqa: B008
    output: str | None = typer.Option(None, "--output", "-o", help="Base output directory"),  # noqa: B008
):
    """Threshold bias a_l (Alice starts) or a_l' (Bob starts)."""
    started = time.perf_counter()
    with _exit_codes(), run_directory(output, "threshold") as run_dir:
        g, recognized = resolve_graph(family, params, edge_list)
        result = compute_threshold(g, recognized, l, start, method, budget=budget)
        logger.success("threshold = {} via {}", "-" if result.value is None else result.value, result.method)
        typer.echo(result.model_dump_json(indent=2))
        report = RunReport(
            command="threshold",
            argv=sys.argv[1:],
            results=[result.model_dump(mode="json")],
            wall_time=round(time.perf_counter() - started, 3),
        )
        _finish(report, run_dir)


@app.command()
def table(
    family: Family = typer.Option(..., "--family", "-f"),  # noqa: B008
    n_span: str = typer.Option(..., "--n", help="Row range, e.g. 3..12"),
    m_span: str = typer.Option(..., "--m", help="Column range, e.g. 2..8"),
    fmt: TableFormat = typer.Option(TableFormat.csv, "--format"),  # noqa: B008
    check: bool = typer.Option(False, "--check", help="Cross-check every cell against a second method"),
    jobs: int = typer.Option(1, "--jobs", "-j", min=1),
    output: str | None = typer.Option(None, "--output", "-o", help="Base output directory"),  # noqa: B008
):
    """a_1 and a_1' grids for a closed-form family."""
    started = time.perf_counter()
    with _exit_codes(), run_directory(output, "table") as run_dir:
        cells = family_table(family, parse_span(n_span), parse_span(m_span))
        for cell in cells:
            if not cell.in_range:
                logger.warning("Cell ({},{}) skipped: {}", cell.n, cell.m, cell.note)
        text = render_table(cells, fmt)
        typer.echo(text, nl=False)
        checks = run_items(cell_check_items(family, cells), jobs=jobs) if check else []
        report = RunReport(
            command="table",
            argv=sys.argv[1:],
            results=[c.model_dump(mode="json") for c in cells],
            checks=checks,
            wall_time=round(time.perf_counter() - started, 3),
        )
        _finish(report, run_dir, {f"{family}.{fmt}": text})


@app.command()
def crosscheck(
    scope: Scope = typer.Argument(Scope.all),  # noqa: B008
    max_n: int = typer.Option(6, "--max-n", help="Largest graph order for exhaustive scopes"),
    exact_limit: int = typer.Option(14, "--exact-limit", help="Largest board solved exactly in the families scope"),
    samples: int = typer.Option(500, "--samples", help="Random hypergraphs for the duality scope"),
    boards: int = typer.Option(50, "--boards", help="Random boards for the pairing check"),
    games: int = typer.Option(100, "--games", help="Random Maker seeds per pairing board"),
    pairs: int = typer.Option(200, "--pairs", help="Random graph pairs for the union bounds"),
    seed: int = typer.Option(0, "--seed"),
    alpha_budget: int = typer.Option(
        DEFAULT_NODE_BUDGET, "--alpha-budget", min=1, help="Branch-and-bound nodes per α_k"
    ),
    transversal_cap: int = typer.Option(
        DEFAULT_TRANSVERSAL_CAP, "--transversal-cap", min=1, help="Candidate transversals kept per hyperedge"
    ),
    domination_budget: int = typer.Option(
        DEFAULT_DOMINATION_BUDGET, "--domination-budget", min=1, help="Search nodes per dominating-set query"
    ),
    solver_budget: int | None = typer.Option(  # noqa: B008
        None, "--solver-budget", min=1, help="Memo entries per exact solve (default: SOLVER_BUDGET)"
    ),
    jobs: int = typer.Option(1, "--jobs", "-j", min=1),
    output: str | None = typer.Option(None, "--output", "-o", help="Base output directory"),  # noqa: B008
):
    """Run a cross-validation suite; exits nonzero on any mismatch or budget failure."""
    started = time.perf_counter()
    with _exit_codes(), run_directory(output, "crosscheck") as run_dir:
        items = build_items(
            scope,
            max_n=max_n,
            exact_limit=exact_limit,
            samples=samples,
            boards=boards,
            games=games,
            pairs=pairs,
            seed=seed,
            budgets=Budgets(
                alpha=alpha_budget,
                transversal=transversal_cap,
                domination=domination_budget,
                solver=solver_budget,
            ),
        )
        checks = run_items(items, jobs=jobs)
        report = RunReport(
            command="crosscheck",
            argv=sys.argv[1:],
            checks=checks,
            wall_time=round(time.perf_counter() - started, 3),
        )
        for c in report.mismatches + report.budget_failures:
            typer.echo(f"{c.status.upper()} [{c.scope}] {c.name} {c.detail}: expected {c.expected}, got {c.actual}")
        typer.echo(f"{len(checks)} checks, {len(report.mismatches)} mismatches, {len(report.budget_failures)} budget")
        if not report.exit_code:
            logger.success("All {} checks passed", len(checks))
        _finish(report, run_dir)


@app.command("enumerate")
def enumerate_cmd(
    n: int = typer.Argument(..., help="Number of vertices (at most 7)"),
    filters: list[GraphFilter] = typer.Option([GraphFilter.all], "--filter"),  # noqa: B006, B008
    output: str | None = typer.Option(None, "--output", "-o", help="Base output directory"),  # noqa: B008
):
    """Labeled graphs on n vertices, one per line as "mask: edges"."""
    started = time.perf_counter()
    with _exit_codes(), run_directory(output, "enumerate") as run_dir:
        lines = []
        for mask in enumerate_masks(n, filters):
            g = graph_from_mask(n, mask)
            lines.append(f"{mask:#x}: " + " ".join(f"{u}-{v}" for u, v in g.edges()))
        text = "\n".join(lines) + ("\n" if lines else "")
        typer.echo(text, nl=False)
        typer.echo(f"total {len(lines)}")
        logger.success("{} labeled graphs on {} vertices ({})", len(lines), n, ", ".join(filters))
        report = RunReport(
            command="enumerate",
            argv=sys.argv[1:],
            results=[{"n": n, "filters": list(filters), "count": len(lines)}],
            wall_time=round(time.perf_counter() - started, 3),
        )
        _finish(report, run_dir, {f"graphs_n{n}.txt": text})


@app.command("simulate")
def simulate_cmd(
    params: list[int] = typer.Argument(None, help="Family parameters"),  # noqa: B008
    family: str | None = typer.Option(None, "--family", "-f"),
    edge_list: Path | None = typer.Option(None, "--edge-list", "-e"),  # noqa: B008
    a: int = typer.Option(1, "-a", min=1, help="Alice's picks per turn"),
    b: int = typer.Option(1, "-b", min=1, help="Bob's picks per turn"),
    start: Player = typer.Option(Player.alice, "--start"),  # noqa: B008
    alice: AlicePolicy = typer.Option(AlicePolicy.exact, "--alice"),  # noqa: B008
    bob: BobPolicy = typer.Option(BobPolicy.exact, "--bob"),  # noqa: B008
    seed: int = typer.Option(0, "--seed"),
    seeds: int = typer.Option(1, "--seeds", min=1, help="Play seeds seed..seed+N-1"),
    budget: int | None = typer.Option(None, "--budget"),  # noqa: B008
    output: str | None = typer.Option(None, "--output", "-o", help="Base output directory"),  # noqa: B008
):
    """Play two policies against each other."""
    started = time.perf_counter()
    with _exit_codes(), run_directory(output, "simulate") as run_dir:
        g, _ = resolve_graph(family, params, edge_list)
        spec = mct_spec(g, a, b, start)
        results = []
        wins = {Player.alice: 0, Player.bob: 0}
        for s in range(seed, seed + seeds):
            played = simulate(spec, bob_policy(bob, g, s, budget), alice_policy(alice, g, spec, s, budget))
            wins[played.outcome.winner_player] += 1
            results.append({"seed": s, **played.model_dump(mode="json")})
        if seeds == 1:
            typer.echo(json.dumps(results[0], indent=2))
        typer.echo(f"alice {wins[Player.alice]} / bob {wins[Player.bob]} over {seeds} game(s)")
        logger.success("{} ({}) vs {} ({}): Alice won {}/{}", alice, a, bob, b, wins[Player.alice], seeds)
        report = RunReport(
            command="simulate",
            argv=sys.argv[1:],
            results=results,
            wall_time=round(time.perf_counter() - started, 3),
        )
        _finish(report, run_dir)


@app.command()
def play(
    params: list[int] = typer.Argument(None, help="Family parameters"),  # noqa: B008
    family: str | None = typer.Option(None, "--family", "-f"),
    edge_list: Path | None = typer.Option(None, "--edge-list", "-e"),  # noqa: B008
    a: int = typer.Option(1, "-a", min=1),
    b: int = typer.Option(1, "-b", min=1),
    human: Player = typer.Option(Player.alice, "--human", help="The side you play"),  # noqa: B008
    start: Player = typer.Option(Player.alice, "--start"),  # noqa: B008
    transcript: Path | None = typer.Option(None, "--transcript", help="Where to save the session JSON"),  # noqa: B008
    budget: int | None = typer.Option(None, "--budget"),  # noqa: B008
):
    """Play the MCT game against the engine in the terminal."""
    with _exit_codes():
        g, _ = resolve_graph(family, params, edge_list)
        spec: GameSpec = mct_spec(g, a, b, start)
        if human is Player.alice:
            engine, banner = engine_for_bob(g, budget)
        else:
            engine, banner = engine_for_alice(g, spec, budget)
        if banner:
            typer.echo(banner)
        typer.echo(f"You are {human} ({Role.breaker if human is Player.alice else Role.maker}); {start} moves first.")
        session = play_session(spec, g, human, engine, ask=typer.prompt, say=typer.echo, budget=budget)
        if transcript is not None:
            transcript.write_text(session.model_dump_json(indent=2))
            logger.success("Transcript saved to {}", transcript)


@app.command()
def graph(
    params: list[int] = typer.Argument(None, help="Family parameters"),  # noqa: B008
    family: str | None = typer.Option(None, "--family", "-f"),
    edge_list: Path | None = typer.Option(None, "--edge-list", "-e"),  # noqa: B008
    save: Path | None = typer.Option(None, "--save", help="Write the graph as an edge list"),  # noqa: B008
    cliques: Path | None = typer.Option(None, "--cliques", help="Write the clique hypergraph as JSON"),  # noqa: B008
):
    """Build a graph and print its summary."""
    with _exit_codes():
        g, recognized = resolve_graph(family, params, edge_list)
        summary = inspect(g)
        board = clique_hypergraph(g)
        typer.echo(summary.model_dump_json(indent=2))
        typer.echo(f"maximal cliques: {len(board.edges)}, most through one vertex: {board.max_degree}")
        if recognized is not None:
            typer.echo(f"recognized as {recognized.label()}")
        if save is not None:
            save_edge_list(g, save)
        if cliques is not None:
            cliques.write_text(json.dumps(board.to_json(), indent=2))


if __name__ == "__main__":
    app()
