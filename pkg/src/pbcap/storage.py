"""Storage-unit directory layout and the append-only decision log."""

from __future__ import annotations

import threading
from pathlib import Path

from .errors import ValidationError
from .formats import decision_to_json
from .policy import Decision

LOG_NAME = "decisions.log"


def _safe_name(name: str, what: str) -> str:
    if not name or name in (".", "..") or "/" in name or "\\" in name or "\x00" in name:
        raise ValidationError(f"{what} {name!r} is not a safe file name")
    return name


class StorageLayout:
    """Root directory with one subdirectory per storage unit.

    ``store`` is the only mutating entry point; the decision log is
    serialized through a single lock so concurrent classification keeps
    one log line per processed submission.
    """

    def __init__(self, root: Path):
        self.root = Path(root)
        if not self.root.is_dir():
            raise ValidationError(f"storage root {self.root} does not exist")
        self._log_lock = threading.Lock()

    @property
    def log_path(self) -> Path:
        return self.root / LOG_NAME

    def store(self, decision: Decision, payload: bytes) -> Path:
        """Place the payload in the winning unit and log the decision."""
        unit = _safe_name(decision.storage_unit, "storage unit")
        file_name = _safe_name(decision.file_id, "file id")
        unit_dir = self.root / unit
        unit_dir.mkdir(exist_ok=True)
        target = unit_dir / file_name
        target.write_bytes(payload)
        self.log(decision)
        return target

    def log(self, decision: Decision) -> None:
        line = decision_to_json(decision) + "\n"
        with self._log_lock, self.log_path.open("a", encoding="utf-8") as fh:
            fh.write(line)

    def stored_files(self) -> list[Path]:
        return sorted(
            p for p in self.root.glob("*/*") if p.is_file()
        )
