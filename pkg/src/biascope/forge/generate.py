"""Raw indicator generation: one templated chat call per labeled article."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor

from ..gateway import LlmGateway, PromptKind, load_demonstration, parse_tagged_lines
from ..records import IndicatorRecord
from .corpus import LabeledArticle

logger = logging.getLogger(__name__)


class IndicatorGenerationError(Exception):
    """One or more articles failed at the gateway; carries per-article detail."""

    def __init__(self, failures: list[tuple[str, Exception]]):
        self.failures = failures
        detail = "; ".join(f"{article_id}: {exc}" for article_id, exc in failures)
        super().__init__(f"{len(failures)} article(s) failed: {detail}")


def generate_indicators(
    gateway: LlmGateway,
    corpus: list[LabeledArticle],
    parallelism: int = 1,
) -> list[IndicatorRecord]:
    """Generate raw-stage indicator records for every article in the corpus.

    Gateway errors are collected across articles and raised together; an
    article whose response parses to zero lines is only a warning.
    """
    if not corpus:
        raise ValueError("corpus must be non-empty")

    def one(article: LabeledArticle) -> list[IndicatorRecord]:
        response = gateway.complete_chat(
            PromptKind.INDICATOR_GENERATION,
            {
                "DESC&EX": load_demonstration("DESC&EX"),
                "TEXT INPUT": article.body,
                "GIVEN LABEL": article.leaning.value,
            },
        )
        lines, skipped = parse_tagged_lines(response)
        if skipped:
            logger.warning("article %s: skipped %d malformed line(s)", article.id, skipped)
        if not lines:
            logger.warning("article %s: response yielded no indicators", article.id)
        return [
            IndicatorRecord(
                id=f"{article.id}:{seq:04d}",
                category=line.category,
                text=line.text,
                leaning=line.leaning,
                source_article_id=article.id,
            )
            for seq, line in enumerate(lines)
        ]

    records: list[IndicatorRecord] = []
    failures: list[tuple[str, Exception]] = []

    if parallelism > 1:
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            futures = [(article.id, pool.submit(one, article)) for article in corpus]
        for article_id, future in futures:
            try:
                records.extend(future.result())
            except Exception as exc:  # noqa: BLE001 - aggregated below
                failures.append((article_id, exc))
    else:
        for article in corpus:
            try:
                records.extend(one(article))
            except Exception as exc:  # noqa: BLE001
                failures.append((article.id, exc))

    if failures:
        raise IndicatorGenerationError(failures)
    return records
