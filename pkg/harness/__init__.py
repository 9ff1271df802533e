from .crosscheck import build_items
from .enumerate import enumerate_graphs, enumerate_masks, graph_from_mask
from .play import PlaySession, play_session
from .policies import AlicePolicy, BobPolicy, alice_policy, bob_policy, engine_for_alice, engine_for_bob
from .report import run_directory, write_run
from .sources import build_family, parse_span, resolve_graph
from .tables import CSV_HEADER, cell_check_items, family_table, render_table
from .thresholds import compute_threshold
from .types import (
    Budgets,
    CheckItem,
    CheckStatus,
    GraphFilter,
    MethodChoice,
    RunReport,
    Scope,
    TableCell,
    TableFormat,
)
from .workers import WorkItem, run_items

__all__ = [
    "RunReport",
    "Budgets",
    "CheckItem",
    "CheckStatus",
    "TableCell",
    "TableFormat",
    "MethodChoice",
    "GraphFilter",
    "Scope",
    "WorkItem",
    "run_items",
    "build_items",
    "enumerate_graphs",
    "enumerate_masks",
    "graph_from_mask",
    "family_table",
    "render_table",
    "cell_check_items",
    "CSV_HEADER",
    "compute_threshold",
    "resolve_graph",
    "build_family",
    "parse_span",
    "AlicePolicy",
    "BobPolicy",
    "alice_policy",
    "bob_policy",
    "engine_for_alice",
    "engine_for_bob",
    "PlaySession",
    "play_session",
    "run_directory",
    "write_run",
]
