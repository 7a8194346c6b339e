"""Benchmark and ablation runs over labeled datasets.

Per item the full pipeline route runs descriptor generation, top-M matching,
and majority voting (span mapping contributes nothing to the predicted label,
so it is skipped here). The indicator-database ablation instead asks the chat
model to classify the text directly, zero-shot. Predictions and gold labels
are both collapsed to biased / non-biased before scoring.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from ..engine import Article, generate_descriptors, match_descriptors, predict_bias
from ..gateway import LlmGateway
from ..labels import Leaning
from ..store import VectorStore
from .datasets import BIASED, BINARY_RELABEL_MAP, NON_BIASED, LabeledDataset, relabel_binary
from .metrics import MetricsRow, check_reference_consistency, compute_metrics, counts_from_pairs

logger = logging.getLogger(__name__)

MAX_ITEM_FAILURE_RATE = 0.05

ZERO_SHOT_KIND = "zero-shot-leaning"
ZERO_SHOT_TEMPLATE = (
    "Read the following text and judge its political leaning.\n"
    "\n"
    "TEXT: {body}\n"
    "\n"
    "Reply with exactly one word: left, right, or neutral."
)
FEW_SHOT_KIND = "few-shot-leaning"
FEW_SHOT_TEMPLATE = (
    "Read the following text and judge its political leaning.\n"
    "Here are some labeled examples:\n"
    "{exemplars}\n"
    "\n"
    "TEXT: {body}\n"
    "\n"
    "Reply with exactly one word: left, right, or neutral."
)
_LEANING_WORD_RE = re.compile(r"\b(left|right|neutral|center)\b", re.IGNORECASE)


class BenchmarkError(Exception):
    pass


@dataclass(frozen=True)
class AblationConfig:
    use_indicator_database: bool = True
    use_strict_clustering: bool = True

    def __post_init__(self) -> None:
        if self.use_strict_clustering and not self.use_indicator_database:
            raise ValueError("strict clustering requires the indicator database")


@dataclass
class BenchmarkReport:
    rows: list[MetricsRow]
    ablation: AblationConfig
    m: int
    errors: list[dict]
    relabel_map: dict[str, str]

    def to_dict(self) -> dict:
        return {
            "rows": [row.to_dict() for row in self.rows],
            "ablation": {
                "use_indicator_database": self.ablation.use_indicator_database,
                "use_strict_clustering": self.ablation.use_strict_clustering,
            },
            "m": self.m,
            "errors": self.errors,
            "relabel_map": self.relabel_map,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_table(self) -> str:
        """Aligned plain-text table, columns in the fixed reporting order."""
        headers = ["Dataset", "Precision", "Recall", "F1", "Micro F1", "Macro F1"]
        lines = []
        for row in self.rows:
            lines.append(
                [
                    row.dataset,
                    f"{row.precision * 100:.1f}",
                    f"{row.recall * 100:.1f}",
                    f"{row.f1 * 100:.1f}",
                    f"{row.micro_f1 * 100:.1f}",
                    f"{row.macro_f1 * 100:.1f}",
                ]
            )
        widths = [
            max(len(headers[col]), *(len(line[col]) for line in lines)) if lines else len(headers[col])
            for col in range(len(headers))
        ]
        rendered = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip()]
        for line in lines:
            rendered.append(
                "  ".join(
                    cell.ljust(widths[i]) if i == 0 else cell.rjust(widths[i])
                    for i, cell in enumerate(line)
                ).rstrip()
            )
        return "\n".join(rendered)

    def save(self, path: Path | str) -> None:
        Path(path).write_text(self.to_json() + "\n", encoding="utf-8")


def classify_with_database(
    gateway: LlmGateway, store: VectorStore, article: Article, m: int
) -> Leaning:
    """Descriptor generation, matching, and voting; no span mapping."""
    descriptors = generate_descriptors(gateway, article)
    if not descriptors:
        return Leaning.NEUTRAL
    match_sets = match_descriptors(descriptors, store, m)
    return predict_bias(match_sets).label


def classify_zero_shot(
    gateway: LlmGateway, article: Article, exemplars: str | None = None
) -> Leaning:
    """Direct chat classification used by the indicator-database ablation.

    ``exemplars`` switches the prompt to its few-shot variant; the block is
    operator-supplied verbatim, never synthesized here.
    """
    if exemplars:
        prompt = FEW_SHOT_TEMPLATE.format(exemplars=exemplars.strip(), body=article.body)
        response = gateway.complete_prompt(FEW_SHOT_KIND, prompt)
    else:
        response = gateway.complete_prompt(
            ZERO_SHOT_KIND, ZERO_SHOT_TEMPLATE.format(body=article.body)
        )
    found = _LEANING_WORD_RE.search(response)
    if found is None:
        raise BenchmarkError(f"unparseable direct-classification reply: {response!r}")
    word = found.group(1).lower()
    return Leaning.NEUTRAL if word == "center" else Leaning(word)


def leaning_to_binary(label: Leaning) -> str:
    return NON_BIASED if label is Leaning.NEUTRAL else BIASED


def run_benchmark(
    datasets: Sequence[LabeledDataset],
    gateway: LlmGateway,
    store: VectorStore | None = None,
    m: int = 5,
    ablation: AblationConfig = AblationConfig(),
    max_failure_rate: float = MAX_ITEM_FAILURE_RATE,
    few_shot_exemplars: str | None = None,
) -> BenchmarkReport:
    """Score every dataset and return a fixed-column report.

    Items failing analysis are excluded from the counts and reported with
    their ids; the run aborts when more than ``max_failure_rate`` of all
    items fail.
    """
    if not datasets:
        raise ValueError("at least one dataset is required")
    if ablation.use_indicator_database and store is None:
        raise ValueError("the indicator-database route requires a store")
    check_reference_consistency()

    rows: list[MetricsRow] = []
    errors: list[dict] = []
    total_items = 0
    for dataset in datasets:
        binary = relabel_binary(dataset)
        gold: list[str] = []
        predicted: list[str] = []
        for item in binary.items:
            total_items += 1
            try:
                if ablation.use_indicator_database:
                    label = classify_with_database(gateway, store, item, m)
                else:
                    label = classify_zero_shot(gateway, item, exemplars=few_shot_exemplars)
            except Exception as exc:  # noqa: BLE001 - isolated per item
                errors.append({"dataset": dataset.name, "item": item.id, "error": str(exc)})
                continue
            gold.append(item.gold_label)
            predicted.append(leaning_to_binary(label))
        if not gold:
            raise BenchmarkError(f"dataset {dataset.name}: every item failed")
        rows.append(compute_metrics(counts_from_pairs(gold, predicted), dataset=dataset.name))

    if total_items and len(errors) / total_items > max_failure_rate:
        raise BenchmarkError(
            f"{len(errors)} of {total_items} items failed (>" f"{max_failure_rate:.0%}): "
            + "; ".join(f"{e['dataset']}/{e['item']}" for e in errors[:10])
        )
    return BenchmarkReport(
        rows=rows, ablation=ablation, m=m, errors=errors, relabel_map=dict(BINARY_RELABEL_MAP)
    )
