"""Dataset ingestion and binary relabeling for benchmark runs.

Datasets are user-supplied JSONL files (one record per line). Field names
vary across corpora, so the loader accepts an explicit field map and falls
back to common aliases. Gold labels are normalized to a small closed
vocabulary and can be collapsed to biased / non-biased.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path

from ..engine import Article

logger = logging.getLogger(__name__)

# Canonical gold labels after load-time normalization.
THREE_WAY_LABELS = {"left", "right", "neutral", "pro", "anti"}
BINARY_LABELS = {"biased", "non-biased"}

BIASED = "biased"
NON_BIASED = "non-biased"

# Gold-label collapse used for every benchmark; emitted in reports for audit.
BINARY_RELABEL_MAP = {
    "left": BIASED,
    "right": BIASED,
    "pro": BIASED,
    "anti": BIASED,
    "neutral": NON_BIASED,
    "center": NON_BIASED,
    "biased": BIASED,
    "non-biased": NON_BIASED,
}

_LABEL_ALIASES = {
    "left": "left",
    "right": "right",
    "neutral": "neutral",
    "center": "neutral",
    "centre": "neutral",
    "pro": "pro",
    "anti": "anti",
    "biased": "biased",
    "non-biased": "non-biased",
    "nonbiased": "non-biased",
    "non_biased": "non-biased",
    "unbiased": "non-biased",
}

_BODY_FIELDS = ("body", "text", "sentence", "content")
_LABEL_FIELDS = ("label", "leaning", "tone", "bias")

MAX_BAD_LINE_FRACTION = 0.01


class LabelScheme(str, Enum):
    THREE_WAY = "three-way"
    BINARY = "binary"


class DatasetError(Exception):
    pass


@dataclass(frozen=True)
class LabeledDataset:
    name: str
    items: tuple[Article, ...]
    label_scheme: LabelScheme


def normalize_label(raw: str) -> str | None:
    return _LABEL_ALIASES.get(raw.strip().lower())


def load_dataset(
    path: Path | str,
    name: str,
    field_map: dict[str, str] | None = None,
) -> LabeledDataset:
    """Load a JSONL dataset, tolerating at most 1% unreadable lines.

    ``field_map`` may pin the ``id``, ``body``, and ``label`` field names for
    corpora that use different keys; otherwise common aliases are tried.
    """
    path = Path(path)
    if not path.exists():
        raise DatasetError(f"dataset file not found: {path}")
    items: list[Article] = []
    failures: list[tuple[int, str]] = []
    total = 0
    with path.open("r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            total += 1
            try:
                items.append(_parse_line(line, line_no, name, field_map))
            except ValueError as exc:
                failures.append((line_no, str(exc)))
    if total == 0:
        raise DatasetError(f"{path}: dataset has no records")
    if len(failures) / total > MAX_BAD_LINE_FRACTION:
        preview = "; ".join(f"line {ln}: {msg}" for ln, msg in failures[:5])
        raise DatasetError(
            f"{path}: {len(failures)} of {total} lines unreadable (>1%): {preview}"
        )
    for line_no, msg in failures:
        logger.warning("%s line %d skipped: %s", path, line_no, msg)
    labels = {item.gold_label for item in items}
    scheme = LabelScheme.BINARY if labels <= BINARY_LABELS else LabelScheme.THREE_WAY
    return LabeledDataset(name=name, items=tuple(items), label_scheme=scheme)


def _parse_line(line: str, line_no: int, name: str, field_map: dict[str, str] | None) -> Article:
    try:
        raw = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ValueError("record is not an object")

    def pick(kind: str, candidates: tuple[str, ...]):
        if field_map and kind in field_map:
            if field_map[kind] not in raw:
                raise ValueError(f"missing field {field_map[kind]!r}")
            return raw[field_map[kind]]
        for candidate in candidates:
            if candidate in raw:
                return raw[candidate]
        raise ValueError(f"no {kind} field (tried {', '.join(candidates)})")

    body = str(pick("body", _BODY_FIELDS))
    label_raw = str(pick("label", _LABEL_FIELDS))
    label = normalize_label(label_raw)
    if label is None:
        raise ValueError(f"unknown label {label_raw!r}")
    if not body.strip():
        raise ValueError("empty body")
    item_id = str(raw.get(field_map.get("id", "id") if field_map else "id", f"{name}-{line_no:06d}"))
    return Article(id=item_id, body=body, gold_label=label)


def relabel_binary(dataset: LabeledDataset) -> LabeledDataset:
    """Collapse gold labels to biased / non-biased; idempotent on binary data."""
    relabeled = []
    for item in dataset.items:
        if item.gold_label not in BINARY_RELABEL_MAP:
            raise DatasetError(f"item {item.id}: cannot relabel {item.gold_label!r}")
        relabeled.append(replace(item, gold_label=BINARY_RELABEL_MAP[item.gold_label]))
    return LabeledDataset(
        name=dataset.name, items=tuple(relabeled), label_scheme=LabelScheme.BINARY
    )
