"""Background batch jobs: one report per input line, failures isolated."""

from __future__ import annotations

import json
import logging
import threading
import uuid
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from ..engine import Article, utc_now_iso
from .persistence import ReportStore, STATUS_COMPLETE, STATUS_FAILED

logger = logging.getLogger(__name__)

_BODY_FIELDS = ("body", "text", "sentence", "content")


@dataclass
class BatchJob:
    job_id: str
    report_ids: list[str]
    submitted_at: str
    total: int
    _done: set[str] = field(default_factory=set)


class BatchJobManager:
    """Bounded worker pool running article analyses for uploaded batches."""

    def __init__(self, reports: ReportStore, analyze_fn, max_workers: int = 4):
        self._reports = reports
        self._analyze = analyze_fn
        self._pool = ThreadPoolExecutor(max_workers=max_workers)
        self._jobs: dict[str, BatchJob] = {}
        self._lock = threading.Lock()

    def submit(self, content: str) -> BatchJob:
        """Parse one-article-per-line content and queue the parseable lines.

        Unparseable lines become failed report entries immediately; they never
        affect sibling lines. Raises ValueError when no line is parseable.
        """
        lines = [line for line in content.splitlines() if line.strip()]
        if not lines:
            raise ValueError("batch file contains no records")
        job_id = uuid.uuid4().hex[:12]
        parsed: list[tuple[str, Article | None, str | None]] = []
        ok = 0
        for seq, line in enumerate(lines):
            report_id = f"{job_id}:{seq:04d}"
            try:
                parsed.append((report_id, _parse_article(line, report_id), None))
                ok += 1
            except ValueError as exc:
                parsed.append((report_id, None, str(exc)))
        if ok == 0:
            raise ValueError("no parseable article lines in batch file")

        job = BatchJob(
            job_id=job_id,
            report_ids=[report_id for report_id, _, _ in parsed],
            submitted_at=utc_now_iso(),
            total=len(parsed),
        )
        with self._lock:
            self._jobs[job_id] = job
        for report_id, article, error in parsed:
            if article is None:
                self._reports.put_failed(report_id, error or "unparseable line")
                job._done.add(report_id)
            else:
                self._reports.put_pending(report_id)
                self._pool.submit(self._run_one, job, report_id, article)
        return job

    def _run_one(self, job: BatchJob, report_id: str, article: Article) -> None:
        try:
            report = self._analyze(article)
            self._reports.put_complete(report_id, report)
        except Exception as exc:  # noqa: BLE001 - isolation is the contract
            logger.warning("batch item %s failed: %s", report_id, exc)
            self._reports.put_failed(report_id, str(exc))
        finally:
            with self._lock:
                job._done.add(report_id)

    def get(self, job_id: str) -> BatchJob | None:
        with self._lock:
            return self._jobs.get(job_id)

    def status(self, job: BatchJob) -> dict:
        statuses = {}
        for report_id in job.report_ids:
            try:
                statuses[report_id] = self._reports.get(report_id).status
            except KeyError:
                statuses[report_id] = "unknown"
        completed = sum(1 for s in statuses.values() if s in (STATUS_COMPLETE, STATUS_FAILED))
        return {
            "job_id": job.job_id,
            "submitted_at": job.submitted_at,
            "total": job.total,
            "completed": completed,
            "report_ids": job.report_ids,
            "reports": statuses,
        }


def _parse_article(line: str, fallback_id: str) -> Article:
    try:
        raw = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ValueError("record is not an object")
    for field_name in _BODY_FIELDS:
        if field_name in raw and str(raw[field_name]).strip():
            return Article(id=str(raw.get("id", fallback_id)), body=str(raw[field_name]))
    raise ValueError(f"no article body field (tried {', '.join(_BODY_FIELDS)})")
