"""Indicator verification: conflict elimination and confidence filtering."""

from __future__ import annotations

import logging
import re
import string
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor

from ..gateway import LlmGateway, PromptKind
from ..records import IndicatorRecord, IndicatorStage

logger = logging.getLogger(__name__)

_SCORE_RE = re.compile(r"\d+")


def normalize_indicator_text(text: str) -> str:
    """Canonical form used for duplicate/conflict detection."""
    collapsed = re.sub(r"\s+", " ", text.casefold()).strip()
    return collapsed.rstrip(string.punctuation + " ")


def eliminate_conflicts(records: list[IndicatorRecord]) -> list[IndicatorRecord]:
    """Drop indicators whose identical text carries contradictory leanings.

    Records sharing normalized text with more than one distinct leaning are
    all removed; exact duplicates with one leaning collapse to the lowest id.
    Output is ordered by id. Idempotent.
    """
    for record in records:
        if record.stage is not IndicatorStage.RAW:
            raise ValueError(f"record {record.id!r} is not raw-stage")
    groups: dict[str, list[IndicatorRecord]] = defaultdict(list)
    for record in records:
        groups[normalize_indicator_text(record.text)].append(record)
    kept: list[IndicatorRecord] = []
    for text, group in groups.items():
        leanings = {record.leaning for record in group}
        if len(leanings) > 1:
            logger.warning(
                "conflict on %r: leanings %s; removing %d record(s)",
                text,
                sorted(l.value for l in leanings),
                len(group),
            )
            continue
        kept.append(min(group, key=lambda record: record.id))
    return sorted(kept, key=lambda record: record.id)


def parse_confidence(response: str) -> int | None:
    """First integer in [1, 10] scanning left to right, else None."""
    for token in _SCORE_RE.findall(response):
        value = int(token)
        if 1 <= value <= 10:
            return value
    return None


def score_and_filter(
    gateway: LlmGateway,
    records: list[IndicatorRecord],
    threshold: int,
    parallelism: int = 1,
) -> list[IndicatorRecord]:
    """Backward verification: score each indicator 1-10, keep score >= threshold.

    Unparseable scores drop the record (bias toward database precision).
    Survivors advance to the verified stage.
    """
    if not 1 <= threshold <= 10:
        raise ValueError("threshold must be in [1, 10]")

    def score(record: IndicatorRecord) -> IndicatorRecord | None:
        response = gateway.complete_chat(
            PromptKind.CONFIDENCE_SCORING,
            {"INDICATOR": record.text, "LEANING": record.leaning.value},
        )
        confidence = parse_confidence(response)
        if confidence is None:
            logger.warning("record %s: unparseable confidence %r; dropping", record.id, response)
            return None
        if confidence < threshold:
            return None
        return record.verified(confidence)

    if parallelism > 1:
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            scored = list(pool.map(score, records))
    else:
        scored = [score(record) for record in records]
    return [record for record in scored if record is not None]
