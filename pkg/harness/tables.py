"""Threshold tables for the product families, straight from the closed forms."""

import json
from functools import partial

from pydantic import ValidationError

from closed_forms import Family, FamilyParams
from games import Method
from graphs.errors import DomainError

from .crosscheck import check_family_cell
from .types import TableCell, TableFormat
from .workers import WorkItem

CSV_HEADER = "n,m,a1,a1_prime,method_a1,method_a1_prime"

TABLE_FAMILIES = (Family.torus, Family.cylinder, Family.grid, Family.caterpillar)


def table_cell(family: Family, n: int, m: int) -> TableCell:
    try:
        params = FamilyParams(family=family, params=(n, m))
    except ValidationError as e:
        return TableCell(n=n, m=m, in_range=False, note=e.errors()[0]["msg"])
    cased = params.thresholds()
    return TableCell(
        n=n,
        m=m,
        a1=cased.a1.value,
        a1_prime=None if cased.a1_prime is None else cased.a1_prime.value,
        method_a1=Method.closed_form,
        method_a1_prime=Method.closed_form,
        case_a1=cased.a1.case,
        case_a1_prime="" if cased.a1_prime is None else cased.a1_prime.case,
    )


def family_table(family: Family, n_span: range, m_span: range) -> list[TableCell]:
    if family not in TABLE_FAMILIES:
        raise DomainError(f"tables cover {', '.join(TABLE_FAMILIES)}; got {family}")
    return [table_cell(family, n, m) for n in n_span for m in m_span]


def render_table(cells: list[TableCell], fmt: TableFormat) -> str:
    """Only in-range cells are emitted; the text is a pure function of the cells."""
    emitted = [c for c in cells if c.in_range]
    if fmt is TableFormat.csv:
        return "\n".join([CSV_HEADER, *(c.csv_row() for c in emitted)]) + "\n"
    rows = [c.model_dump(include={"n", "m", "a1", "a1_prime", "method_a1", "method_a1_prime"}) for c in emitted]
    return json.dumps(rows, indent=2) + "\n"


def cell_check_items(family: Family, cells: list[TableCell]) -> list[WorkItem]:
    """Cross-checks for in-range cells where a second method applies."""
    return [
        WorkItem("table", f"{family}({c.n},{c.m})", partial(check_family_cell, family, c.n, c.m, 0))
        for c in cells
        if c.in_range
    ]
