"""Binary classification metrics: biased-class P/R/F1 plus micro/macro F1.

Micro F1 here is binary micro-averaged F1 over both classes, which in the
single-label binary setting equals accuracy. Macro F1 is the unweighted mean
of the biased-class and non-biased-class F1 scores. Zero-denominator metrics
report 0 and carry a flag instead of NaN so reports always render.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .datasets import BIASED


@dataclass(frozen=True)
class ConfusionCounts:
    """Binary biased-vs-non-biased confusion counts (biased is positive)."""

    tp: int
    fp: int
    fn: int
    tn: int

    def __post_init__(self) -> None:
        if min(self.tp, self.fp, self.fn, self.tn) < 0:
            raise ValueError("counts must be non-negative")

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn


@dataclass(frozen=True)
class MetricsRow:
    """One dataset's metric row; values are fractions in [0, 1]."""

    dataset: str
    precision: float
    recall: float
    f1: float
    micro_f1: float
    macro_f1: float
    counts: ConfusionCounts
    flags: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "dataset": self.dataset,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "micro_f1": self.micro_f1,
            "macro_f1": self.macro_f1,
            "counts": {
                "tp": self.counts.tp,
                "fp": self.counts.fp,
                "fn": self.counts.fn,
                "tn": self.counts.tn,
            },
            "flags": list(self.flags),
        }


def counts_from_pairs(gold: Sequence[str], predicted: Sequence[str]) -> ConfusionCounts:
    """Confusion counts from aligned binary gold/predicted label sequences."""
    if len(gold) != len(predicted):
        raise ValueError("gold and predicted labels must be aligned")
    tp = fp = fn = tn = 0
    for g, p in zip(gold, predicted):
        if p == BIASED:
            if g == BIASED:
                tp += 1
            else:
                fp += 1
        else:
            if g == BIASED:
                fn += 1
            else:
                tn += 1
    return ConfusionCounts(tp=tp, fp=fp, fn=fn, tn=tn)


def _ratio(numerator: int, denominator: int, flag: str, flags: list[str]) -> float:
    if denominator == 0:
        flags.append(flag)
        return 0.0
    return numerator / denominator


def _f1(precision: float, recall: float, flag: str, flags: list[str]) -> float:
    if precision + recall == 0.0:
        flags.append(flag)
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def compute_metrics(counts: ConfusionCounts, dataset: str = "") -> MetricsRow:
    if counts.total == 0:
        raise ValueError("cannot compute metrics over zero items")
    flags: list[str] = []
    precision = _ratio(counts.tp, counts.tp + counts.fp, "zero-denominator:precision", flags)
    recall = _ratio(counts.tp, counts.tp + counts.fn, "zero-denominator:recall", flags)
    f1 = _f1(precision, recall, "zero-denominator:f1", flags)
    # Non-biased class metrics come from the class-swapped confusion matrix.
    nb_precision = _ratio(counts.tn, counts.tn + counts.fn, "zero-denominator:nonbiased-precision", flags)
    nb_recall = _ratio(counts.tn, counts.tn + counts.fp, "zero-denominator:nonbiased-recall", flags)
    nb_f1 = _f1(nb_precision, nb_recall, "zero-denominator:nonbiased-f1", flags)
    micro_f1 = (counts.tp + counts.tn) / counts.total
    macro_f1 = (f1 + nb_f1) / 2.0
    return MetricsRow(
        dataset=dataset,
        precision=precision,
        recall=recall,
        f1=f1,
        micro_f1=micro_f1,
        macro_f1=macro_f1,
        counts=counts,
        flags=tuple(flags),
    )


def f1_from_percent(precision_pct: float, recall_pct: float) -> float:
    """Harmonic mean of precision and recall given in percent, in percent."""
    if precision_pct + recall_pct == 0.0:
        return 0.0
    return 2.0 * precision_pct * recall_pct / (precision_pct + recall_pct)


# Previously reported benchmark rows (percent precision, recall, F1) used as
# internal-consistency anchors: the F1 column must equal the harmonic mean of
# the P and R columns to within rounding.
REFERENCE_ROWS = {
    "flipbias": (62.9, 72.4, 67.3),
    "basil": (35.2, 34.2, 34.7),
    "babe": (66.4, 69.1, 67.7),
    "mfc": (86.4, 80.0, 83.1),
}

REFERENCE_F1_TOLERANCE_PCT = 0.15


def check_reference_consistency(tolerance_pct: float = REFERENCE_F1_TOLERANCE_PCT) -> dict[str, float]:
    """Re-derive each reference row's F1 from its P/R; raise on divergence.

    Returns the derived F1 values (percent) keyed by dataset.
    """
    derived: dict[str, float] = {}
    for dataset, (precision, recall, printed_f1) in REFERENCE_ROWS.items():
        value = f1_from_percent(precision, recall)
        if abs(value - printed_f1) > tolerance_pct:
            raise AssertionError(
                f"{dataset}: derived F1 {value:.3f} differs from printed "
                f"{printed_f1:.1f} by more than {tolerance_pct}"
            )
        derived[dataset] = value
    return derived
