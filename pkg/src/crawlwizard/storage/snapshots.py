"""Periodic state snapshots so startup replays only a log suffix.

A snapshot is a JSON file {"version": N, "state": {...}} written
atomically via a temp file and rename. A missing or unreadable snapshot
just means a full replay from event 1.
"""

import json
import logging
import os
from pathlib import Path

log = logging.getLogger(__name__)


def save_snapshot(path: Path | str, state: dict, version: int) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(
        json.dumps({"version": version, "state": state}, ensure_ascii=False),
        encoding="utf-8")
    os.replace(tmp, path)


def load_snapshot(path: Path | str) -> tuple[dict, int] | None:
    """Returns (state, version), or None when absent or unreadable."""
    path = Path(path)
    if not path.exists():
        return None
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
        return dict(data["state"]), int(data["version"])
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        log.warning("ignoring unreadable snapshot %s: %s", path, exc)
        return None
