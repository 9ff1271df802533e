import json
import uuid
from collections.abc import Iterator
from contextlib import contextmanager
from datetime import UTC, datetime
from pathlib import Path

from loguru import logger

from .types import RunReport

TRACE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level:<8} | {name}:{function}:{line} | {message} | extra={extra}"


@contextmanager
def run_directory(output_base: str | None, command: str) -> Iterator[Path | None]:
    """A fresh <output_base>/<run_id>/ with a DEBUG trace sink attached while the command runs."""
    if output_base is None:
        yield None
        return
    run_id = str(uuid.uuid4())
    run_dir = Path(output_base) / run_id
    run_dir.mkdir(parents=True)
    logger.info("Run ID:  {}", run_id)
    logger.info("Output:  {}", run_dir)
    sink_id = logger.add(run_dir / f"{command}.traces", level="DEBUG", format=TRACE_FORMAT)
    try:
        yield run_dir
    finally:
        logger.remove(sink_id)


def write_run(run_dir: Path, report: RunReport, payloads: dict[str, str] | None = None) -> None:
    """report.json, the payload files and a manifest.json sidecar; payloads carry no timestamps."""
    (run_dir / "report.json").write_text(report.model_dump_json(indent=2))
    for name, text in (payloads or {}).items():
        (run_dir / name).write_text(text)
    manifest = {
        "run_id": run_dir.name,
        "timestamp": datetime.now(UTC).isoformat(),
        "command": report.command,
        "argv": report.argv,
        "wall_time": report.wall_time,
        "files": sorted(["report.json", *(payloads or {})]),
        "mismatches": len(report.mismatches),
        "budget_failures": len(report.budget_failures),
    }
    (run_dir / "manifest.json").write_text(json.dumps(manifest, indent=2))
    logger.success("Done. Results saved to {}/", run_dir)
