"""Shared label vocabulary: political leanings and indicator categories.

Every module trades in these two closed enums. Normalization helpers accept
the loose spellings that chat models and third-party datasets produce and map
them onto the canonical members (or return None when no match is defensible).
"""

from __future__ import annotations

import re
from enum import Enum


class Leaning(str, Enum):
    LEFT = "left"
    NEUTRAL = "neutral"
    RIGHT = "right"


class Category(str, Enum):
    TONE_AND_LANGUAGE = "Tone and Language"
    SOURCES_AND_CITATIONS = "Sources and Citations"
    COVERAGE_AND_BALANCE = "Coverage and Balance"
    AGENDA_AND_FRAMING = "Agenda and Framing"
    EXAMPLES_AND_ANALOGIES = "Examples and Analogies"


_LEANING_ALIASES = {
    "left": Leaning.LEFT,
    "right": Leaning.RIGHT,
    "neutral": Leaning.NEUTRAL,
    "center": Leaning.NEUTRAL,
    "centre": Leaning.NEUTRAL,
}

# Keywords that identify a category even when the model rephrases it
# ("Framing", "Tone & Language", "3. Sources and citations", ...).
_CATEGORY_KEYWORDS = [
    (Category.TONE_AND_LANGUAGE, ("tone", "language")),
    (Category.SOURCES_AND_CITATIONS, ("source", "citation")),
    (Category.COVERAGE_AND_BALANCE, ("coverage", "balance")),
    (Category.AGENDA_AND_FRAMING, ("agenda", "framing", "frame")),
    (Category.EXAMPLES_AND_ANALOGIES, ("example", "analog")),
]


def _letters(text: str) -> str:
    """Lowercase and keep only letters and single spaces."""
    cleaned = re.sub(r"[^a-z]+", " ", text.lower())
    return re.sub(r"\s+", " ", cleaned).strip()


def normalize_leaning(raw: str) -> Leaning | None:
    token = _letters(raw)
    return _LEANING_ALIASES.get(token)


def normalize_category(raw: str) -> Category | None:
    """Case-insensitive fuzzy match onto the five canonical categories."""
    token = _letters(raw)
    if not token:
        return None
    for category in Category:
        if token == _letters(category.value):
            return category
    for category, keywords in _CATEGORY_KEYWORDS:
        if any(kw in token for kw in keywords):
            return category
    return None
