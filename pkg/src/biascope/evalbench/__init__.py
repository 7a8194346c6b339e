"""Evaluation harness: dataset loading, metrics, benchmark and ablation runs."""

from .benchmark import (
    AblationConfig,
    BenchmarkError,
    BenchmarkReport,
    FEW_SHOT_KIND,
    FEW_SHOT_TEMPLATE,
    ZERO_SHOT_KIND,
    ZERO_SHOT_TEMPLATE,
    classify_with_database,
    classify_zero_shot,
    leaning_to_binary,
    run_benchmark,
)
from .datasets import (
    BIASED,
    BINARY_RELABEL_MAP,
    DatasetError,
    LabelScheme,
    LabeledDataset,
    NON_BIASED,
    load_dataset,
    normalize_label,
    relabel_binary,
)
from .metrics import (
    ConfusionCounts,
    MetricsRow,
    REFERENCE_F1_TOLERANCE_PCT,
    REFERENCE_ROWS,
    check_reference_consistency,
    compute_metrics,
    counts_from_pairs,
    f1_from_percent,
)

__all__ = [
    "AblationConfig",
    "BIASED",
    "BINARY_RELABEL_MAP",
    "BenchmarkError",
    "BenchmarkReport",
    "ConfusionCounts",
    "DatasetError",
    "FEW_SHOT_KIND",
    "FEW_SHOT_TEMPLATE",
    "LabelScheme",
    "LabeledDataset",
    "MetricsRow",
    "NON_BIASED",
    "REFERENCE_F1_TOLERANCE_PCT",
    "REFERENCE_ROWS",
    "ZERO_SHOT_KIND",
    "ZERO_SHOT_TEMPLATE",
    "check_reference_consistency",
    "classify_with_database",
    "classify_zero_shot",
    "compute_metrics",
    "counts_from_pairs",
    "f1_from_percent",
    "leaning_to_binary",
    "load_dataset",
    "normalize_label",
    "relabel_binary",
    "run_benchmark",
]
