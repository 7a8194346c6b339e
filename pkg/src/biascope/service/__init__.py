"""HTTP service exposing analysis, batch jobs, notes, downloads, and mapping."""

from .app import create_app
from .jobs import BatchJob, BatchJobManager
from .persistence import (
    ReportNotCompleteError,
    ReportStore,
    ReportStoreEntry,
    STATUS_COMPLETE,
    STATUS_FAILED,
    STATUS_PENDING,
    UnknownReportError,
)

__all__ = [
    "BatchJob",
    "BatchJobManager",
    "ReportNotCompleteError",
    "ReportStore",
    "ReportStoreEntry",
    "STATUS_COMPLETE",
    "STATUS_FAILED",
    "STATUS_PENDING",
    "UnknownReportError",
    "create_app",
]
