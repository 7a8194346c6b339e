"""Bias indicator records, shared by the offline forge and the vector store."""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from .labels import Category, Leaning


class IndicatorStage(str, Enum):
    RAW = "raw"
    VERIFIED = "verified"
    FINAL = "final"


@dataclass(frozen=True)
class IndicatorRecord:
    """One fine-grained bias indicator at some stage of the offline pipeline."""

    id: str
    category: Category
    text: str
    leaning: Leaning
    source_article_id: str
    stage: IndicatorStage = IndicatorStage.RAW
    confidence: int | None = None

    def __post_init__(self) -> None:
        if not self.text.strip():
            raise ValueError(f"indicator {self.id!r} has empty text")
        if self.confidence is not None and not 1 <= self.confidence <= 10:
            raise ValueError(f"confidence must be in [1, 10], got {self.confidence}")
        if self.stage is not IndicatorStage.RAW and self.confidence is None:
            raise ValueError(f"stage {self.stage.value} requires a confidence score")

    def verified(self, confidence: int) -> "IndicatorRecord":
        if self.stage is not IndicatorStage.RAW:
            raise ValueError(f"cannot verify a {self.stage.value} record")
        return replace(self, stage=IndicatorStage.VERIFIED, confidence=confidence)

    def finalized(self) -> "IndicatorRecord":
        if self.stage is not IndicatorStage.VERIFIED:
            raise ValueError(f"cannot finalize a {self.stage.value} record")
        return replace(self, stage=IndicatorStage.FINAL)
