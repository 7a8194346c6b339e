"""Offline pipeline: labeled corpus -> verified, clustered indicator database."""

from .clustering import (
    Cluster,
    ClusterParams,
    cluster_indicators,
    nearest_to_centroid,
    select_representatives,
)
from .corpus import CorpusError, LabeledArticle, load_corpus
from .generate import IndicatorGenerationError, generate_indicators
from .pipeline import BuildSummary, build_database
from .verify import (
    eliminate_conflicts,
    normalize_indicator_text,
    parse_confidence,
    score_and_filter,
)

__all__ = [
    "BuildSummary",
    "Cluster",
    "ClusterParams",
    "CorpusError",
    "IndicatorGenerationError",
    "LabeledArticle",
    "build_database",
    "cluster_indicators",
    "eliminate_conflicts",
    "generate_indicators",
    "load_corpus",
    "nearest_to_centroid",
    "normalize_indicator_text",
    "parse_confidence",
    "score_and_filter",
    "select_representatives",
]
