"""HTTP service: analysis, batch jobs, notes, downloads, custom mapping.

Single-article analysis is synchronous; batch uploads run on a bounded worker
pool. Reports persist to a directory and survive restarts byte-identically.
Access control is a single operator-set shared token (no accounts).
"""

from __future__ import annotations

import hashlib
import logging
from pathlib import Path

from fastapi import Depends, FastAPI, HTTPException, Request, Response
from pydantic import BaseModel

from ..engine import (
    AnalysisStageError,
    Article,
    analyze_article,
    canonical_json,
    map_descriptor_to_spans,
)
from ..gateway import GatewayError, LlmGateway
from ..store import VectorStore
from .jobs import BatchJobManager
from .persistence import (
    ReportNotCompleteError,
    ReportStore,
    STATUS_COMPLETE,
    UnknownReportError,
)

logger = logging.getLogger(__name__)

MAX_BODY_BYTES = 1_000_000
MAX_BATCH_BYTES = 20_000_000


class AnalyzeRequest(BaseModel):
    body: str


class NoteRequest(BaseModel):
    note: str
    author: str = "anonymous"


class MappingRequest(BaseModel):
    descriptor: str
    article: str


def create_app(
    gateway: LlmGateway,
    store: VectorStore,
    reports_dir: Path | str,
    m: int = 5,
    token: str | None = None,
    batch_workers: int = 4,
) -> FastAPI:
    app = FastAPI(title="biascope", version="0.1.0")
    reports = ReportStore(reports_dir)

    def analyze_to_dict(article: Article) -> dict:
        return analyze_article(gateway, store, article, m).to_dict()

    jobs = BatchJobManager(reports, analyze_to_dict, max_workers=batch_workers)

    async def require_token(request: Request) -> None:
        if token is None:
            return
        supplied = request.headers.get("authorization", "")
        if supplied != f"Bearer {token}":
            raise HTTPException(status_code=401, detail="missing or invalid token")

    guarded = [Depends(require_token)]

    @app.get("/health")
    def health() -> dict:
        header = store.header
        return {
            "status": "ok",
            "store": {
                "format_version": header.format_version,
                "embedding_dimension": header.embedding_dimension,
                "entry_count": header.entry_count,
                "embedding_model": header.embedding_model,
                "build_params_digest": header.build_params_digest,
                "leaning_counts": {
                    leaning.value: count for leaning, count in store.leaning_counts().items()
                },
            },
        }

    @app.post("/analyze", dependencies=guarded)
    def analyze(payload: AnalyzeRequest) -> dict:
        body = payload.body
        if not body.strip():
            raise HTTPException(status_code=400, detail="article body is empty")
        if len(body.encode("utf-8")) > MAX_BODY_BYTES:
            raise HTTPException(status_code=400, detail="article body exceeds size limit")
        article = Article(id=_article_id(body), body=body)
        report = _run_analysis(lambda: analyze_to_dict(article))
        reports.put_complete(report["report_id"], report)
        return {"report_id": report["report_id"], "report": report}

    @app.post("/analyze/batch", dependencies=guarded)
    async def analyze_batch(request: Request) -> dict:
        raw = await request.body()
        if len(raw) > MAX_BATCH_BYTES:
            raise HTTPException(status_code=413, detail="batch file exceeds size limit")
        try:
            content = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise HTTPException(status_code=400, detail=f"batch file is not UTF-8: {exc}")
        try:
            job = jobs.submit(content)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return jobs.status(job)

    @app.get("/analyze/batch/{job_id}", dependencies=guarded)
    def batch_status(job_id: str) -> dict:
        job = jobs.get(job_id)
        if job is None:
            raise HTTPException(status_code=404, detail="unknown job")
        return jobs.status(job)

    @app.get("/report/{report_id}", dependencies=guarded)
    def get_report(report_id: str) -> dict:
        return _entry_or_404(report_id).to_dict()

    @app.post("/report/{report_id}/notes", dependencies=guarded)
    def add_note(report_id: str, payload: NoteRequest) -> dict:
        if not payload.note.strip():
            raise HTTPException(status_code=400, detail="note is empty")
        try:
            return reports.append_note(report_id, payload.author, payload.note)
        except UnknownReportError:
            raise HTTPException(status_code=404, detail="unknown report")
        except ReportNotCompleteError:
            raise HTTPException(status_code=409, detail="report is not complete")

    @app.get("/report/{report_id}/download", dependencies=guarded)
    def download(report_id: str) -> Response:
        entry = _entry_or_404(report_id)
        if entry.status != STATUS_COMPLETE:
            raise HTTPException(status_code=409, detail=f"report is {entry.status}")
        document = canonical_json(entry.report)
        return Response(
            content=document,
            media_type="application/json",
            headers={"Content-Disposition": f'attachment; filename="{report_id}.json"'},
        )

    @app.post("/mapping", dependencies=guarded)
    def mapping(payload: MappingRequest) -> dict:
        if not payload.descriptor.strip():
            raise HTTPException(status_code=400, detail="descriptor is empty")
        if not payload.article.strip():
            raise HTTPException(status_code=400, detail="article is empty")
        article = Article(id=_article_id(payload.article), body=payload.article)
        span_mapping = _run_analysis(
            lambda: map_descriptor_to_spans(gateway, payload.descriptor, article)
        )
        return {
            "descriptor": payload.descriptor,
            "spans": [[start, end] for start, end in span_mapping.spans],
            "unmatched_phrases": list(span_mapping.unmatched_phrases),
        }

    def _entry_or_404(report_id: str):
        try:
            return reports.get(report_id)
        except UnknownReportError:
            raise HTTPException(status_code=404, detail="unknown report")

    app.state.reports = reports
    app.state.jobs = jobs
    return app


def _run_analysis(thunk):
    try:
        return thunk()
    except GatewayError as exc:
        raise HTTPException(
            status_code=503, detail={"error": "gateway-unavailable", "detail": str(exc)}
        )
    except AnalysisStageError as exc:
        raise HTTPException(status_code=500, detail={"stage": exc.stage, "detail": str(exc)})


def _article_id(body: str) -> str:
    return "a" + hashlib.sha256(body.encode("utf-8")).hexdigest()[:12]
