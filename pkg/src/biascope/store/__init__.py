"""Indicator vector database: exact cosine top-M retrieval with persistence."""

from .similarity import cosine_similarity
from .vector_store import (
    EmptyStoreError,
    FORMAT_VERSION,
    IndicatorEntry,
    MatchResult,
    StoreChecksumError,
    StoreError,
    StoreFormatError,
    StoreHeader,
    VectorStore,
)

__all__ = [
    "EmptyStoreError",
    "FORMAT_VERSION",
    "IndicatorEntry",
    "MatchResult",
    "StoreChecksumError",
    "StoreError",
    "StoreFormatError",
    "StoreHeader",
    "VectorStore",
    "cosine_similarity",
]
