"""Durable report storage: one JSON file per report plus an index file.

No external database; a directory is the deployment unit and backup is a
copy. Writes go through a temp file and rename, so a crash never leaves a
half-written report. Note appends are linearized per report.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from ..engine import canonical_json, utc_now_iso

STATUS_PENDING = "pending"
STATUS_COMPLETE = "complete"
STATUS_FAILED = "failed"


class UnknownReportError(KeyError):
    pass


class ReportNotCompleteError(RuntimeError):
    pass


@dataclass
class ReportStoreEntry:
    report_id: str
    status: str
    report: Optional[dict] = None
    error_detail: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "report_id": self.report_id,
            "status": self.status,
            "report": self.report,
            "error_detail": self.error_detail,
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "ReportStoreEntry":
        return cls(
            report_id=raw["report_id"],
            status=raw["status"],
            report=raw.get("report"),
            error_detail=raw.get("error_detail"),
        )


class ReportStore:
    def __init__(self, directory: Path | str):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self._index_path = self.directory / "index.json"
        self._index_lock = threading.Lock()
        self._note_locks: dict[str, threading.Lock] = {}
        self._note_locks_guard = threading.Lock()
        if not self._index_path.exists():
            self._write_index({})

    # -- index ------------------------------------------------------------

    def _read_index(self) -> dict[str, str]:
        return json.loads(self._index_path.read_text("utf-8"))

    def _write_index(self, index: dict[str, str]) -> None:
        _atomic_write(self._index_path, json.dumps(index, sort_keys=True, indent=0))

    def _set_status(self, report_id: str, status: str) -> None:
        with self._index_lock:
            index = self._read_index()
            index[report_id] = status
            self._write_index(index)

    def list_ids(self) -> dict[str, str]:
        with self._index_lock:
            return self._read_index()

    # -- entries ----------------------------------------------------------

    def _entry_path(self, report_id: str) -> Path:
        # Report ids are caller-generated; keep the filename shell-safe.
        safe = "".join(c if c.isalnum() or c in "-_.:" else "_" for c in report_id)
        return self.directory / f"{safe}.json"

    def _write_entry(self, entry: ReportStoreEntry) -> None:
        _atomic_write(self._entry_path(entry.report_id), canonical_json(entry.to_dict()))
        self._set_status(entry.report_id, entry.status)

    def put_pending(self, report_id: str) -> None:
        self._write_entry(ReportStoreEntry(report_id=report_id, status=STATUS_PENDING))

    def put_complete(self, report_id: str, report: dict) -> None:
        self._write_entry(
            ReportStoreEntry(report_id=report_id, status=STATUS_COMPLETE, report=report)
        )

    def put_failed(self, report_id: str, error_detail: str) -> None:
        self._write_entry(
            ReportStoreEntry(report_id=report_id, status=STATUS_FAILED, error_detail=error_detail)
        )

    def get(self, report_id: str) -> ReportStoreEntry:
        path = self._entry_path(report_id)
        if not path.exists():
            raise UnknownReportError(report_id)
        return ReportStoreEntry.from_dict(json.loads(path.read_text("utf-8")))

    # -- notes --------------------------------------------------------------

    def append_note(self, report_id: str, author: str, note: str) -> dict:
        """Append one note (append-only; nothing ever edits or removes notes)."""
        with self._note_lock(report_id):
            entry = self.get(report_id)
            if entry.status != STATUS_COMPLETE:
                raise ReportNotCompleteError(report_id)
            assert entry.report is not None
            entry.report["notes"].append(
                {"timestamp": utc_now_iso(), "author": author, "note": note}
            )
            self._write_entry(entry)
            return entry.report

    def _note_lock(self, report_id: str) -> threading.Lock:
        with self._note_locks_guard:
            return self._note_locks.setdefault(report_id, threading.Lock())


def _atomic_write(path: Path, content: str) -> None:
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(content, encoding="utf-8")
    tmp.replace(path)
