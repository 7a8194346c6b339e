"""Domain model of one article analysis and its serialized report form.

Reports serialize to canonical JSON (sorted keys, compact separators) so that
persisting, downloading, or re-serializing the same report always produces
identical bytes. Descriptor embeddings are deliberately not serialized; they
are only needed while matching runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Optional, Sequence

import numpy as np

from ..labels import Category, Leaning
from ..store import MatchResult


def canonical_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def utc_now_iso() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%S.%fZ")


@dataclass(frozen=True)
class Article:
    id: str
    body: str
    gold_label: Optional[str] = None

    def __post_init__(self) -> None:
        if not self.body.strip():
            raise ValueError("article body must be non-empty")


@dataclass(frozen=True)
class Descriptor:
    """Indicator-style summary generated for a query article."""

    id: str
    category: Category
    text: str
    leaning_as_generated: Leaning
    embedding: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class DescriptorMatchSet:
    descriptor_id: str
    matches: tuple[MatchResult, ...]
    leaning_distribution: dict[Leaning, float]


@dataclass(frozen=True)
class BiasPrediction:
    label: Leaning
    vote_counts: dict[Leaning, int]
    similarity_mass: dict[Leaning, float]
    tie_broken: bool


@dataclass(frozen=True)
class SpanMapping:
    descriptor_id: str
    spans: tuple[tuple[int, int], ...]
    unmatched_phrases: tuple[str, ...]


@dataclass(frozen=True)
class Note:
    timestamp: str
    author: str
    note: str


@dataclass
class AnalysisReport:
    report_id: str
    created_at: str
    article: Article
    descriptors: list[Descriptor]
    match_sets: list[DescriptorMatchSet]
    prediction: BiasPrediction
    mappings: list[SpanMapping]
    indicator_texts: dict[str, str]
    notes: list[Note] = field(default_factory=list)
    no_descriptors: bool = False

    def to_dict(self) -> dict:
        return {
            "report_id": self.report_id,
            "created_at": self.created_at,
            "article": {
                "id": self.article.id,
                "body": self.article.body,
                "gold_label": self.article.gold_label,
            },
            "descriptors": [
                {
                    "id": d.id,
                    "category": d.category.value,
                    "text": d.text,
                    "leaning_as_generated": d.leaning_as_generated.value,
                }
                for d in self.descriptors
            ],
            "match_sets": [
                {
                    "descriptor_id": ms.descriptor_id,
                    "matches": [
                        {
                            "indicator_id": m.indicator_id,
                            "similarity": m.similarity,
                            "leaning": m.leaning.value,
                            "text": self.indicator_texts.get(m.indicator_id, ""),
                        }
                        for m in ms.matches
                    ],
                    "leaning_distribution": _leaning_dict(ms.leaning_distribution),
                }
                for ms in self.match_sets
            ],
            "prediction": {
                "label": self.prediction.label.value,
                "vote_counts": _leaning_dict(self.prediction.vote_counts),
                "similarity_mass": _leaning_dict(self.prediction.similarity_mass),
                "tie_broken": self.prediction.tie_broken,
            },
            "mappings": [
                {
                    "descriptor_id": sm.descriptor_id,
                    "spans": [[start, end] for start, end in sm.spans],
                    "unmatched_phrases": list(sm.unmatched_phrases),
                }
                for sm in self.mappings
            ],
            "notes": [
                {"timestamp": n.timestamp, "author": n.author, "note": n.note}
                for n in self.notes
            ],
            "no_descriptors": self.no_descriptors,
        }

    def to_json(self) -> str:
        return canonical_json(self.to_dict())


def _leaning_dict(values: dict[Leaning, float] | dict[Leaning, int]) -> dict:
    return {leaning.value: values[leaning] for leaning in Leaning}


def make_report_id(article_id: str, created_at: str) -> str:
    compact = created_at.replace(":", "").replace("-", "").replace(".", "")
    return f"{article_id}-{compact}"
