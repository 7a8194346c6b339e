"""Online analysis engine: descriptors, matching, voting, span mapping."""

from .analysis import (
    AnalysisStageError,
    DEFAULT_TOP_M,
    NoMatchesError,
    analyze_article,
    generate_descriptors,
    match_descriptors,
    predict_bias,
)
from .model import (
    AnalysisReport,
    Article,
    BiasPrediction,
    Descriptor,
    DescriptorMatchSet,
    Note,
    SpanMapping,
    canonical_json,
    make_report_id,
    utc_now_iso,
)
from .spans import locate_phrase, map_descriptor_to_spans, merge_spans, parse_bracket_phrases

__all__ = [
    "AnalysisReport",
    "AnalysisStageError",
    "Article",
    "BiasPrediction",
    "DEFAULT_TOP_M",
    "Descriptor",
    "DescriptorMatchSet",
    "NoMatchesError",
    "Note",
    "SpanMapping",
    "analyze_article",
    "canonical_json",
    "generate_descriptors",
    "locate_phrase",
    "make_report_id",
    "map_descriptor_to_spans",
    "match_descriptors",
    "merge_spans",
    "parse_bracket_phrases",
    "predict_bias",
    "utc_now_iso",
]
