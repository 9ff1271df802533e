"""Running independent check items, in-process or across a process pool."""

import asyncio
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from typing import NamedTuple

from loguru import logger

from graphs.errors import ResourceBudgetError, WorkbenchError

from .types import CheckItem, CheckStatus


class WorkItem(NamedTuple):
    scope: str
    name: str
    job: Callable[[], list[CheckItem]]


def run_item(item: WorkItem) -> list[CheckItem]:
    # errors are turned into check items here: custom exceptions do not survive the trip back from a worker
    try:
        return item.job()
    except ResourceBudgetError as e:
        logger.warning("[{}] {} ran out of budget: {}", item.scope, item.name, e)
        return [CheckItem(scope=item.scope, name=item.name, expected="-", actual=str(e), status=CheckStatus.budget)]
    except WorkbenchError as e:
        logger.error("[{}] {} failed: {}", item.scope, item.name, e)
        return [
            CheckItem(
                scope=item.scope,
                name=item.name,
                expected="-",
                actual=f"{type(e).__name__}: {e}",
                status=CheckStatus.mismatch,
            )
        ]


async def _gather(items: list[WorkItem], jobs: int) -> list[list[CheckItem]]:
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [loop.run_in_executor(pool, run_item, item) for item in items]
        return await asyncio.gather(*futures)


def run_items(items: list[WorkItem], jobs: int = 1) -> list[CheckItem]:
    """Checks from every item, in item order whatever the completion order."""
    if jobs > 1 and len(items) > 1:
        logger.info("Running {} items on {} worker processes", len(items), jobs)
        batches = asyncio.run(_gather(items, jobs))
    else:
        batches = []
        for i, item in enumerate(items, 1):
            logger.debug("Item {}/{}: [{}] {}", i, len(items), item.scope, item.name)
            batches.append(run_item(item))
    return [check for batch in batches for check in batch]
