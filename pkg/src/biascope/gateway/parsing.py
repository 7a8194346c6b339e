"""Parse model responses in the ``category - text - leaning`` line format.

The parser is deliberately unkillable: malformed lines are skipped and
counted, never raised. For every response, parsed + skipped equals the number
of non-blank lines.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..labels import Category, Leaning, normalize_category, normalize_leaning

logger = logging.getLogger(__name__)

MAX_INDICATOR_WORDS = 30


@dataclass(frozen=True)
class TaggedLine:
    category: Category
    text: str
    leaning: Leaning


def parse_tagged_lines(response: str) -> tuple[list[TaggedLine], int]:
    """Extract well-formed tagged lines; return (parsed, skipped count).

    Fields are split on " - " from the left into at most three parts, so the
    indicator text may contain unpadded hyphens. Numbering prefixes and loose
    category/leaning spellings are tolerated via the label normalizers.
    Indicator text longer than 30 words is truncated with a warning.
    """
    parsed: list[TaggedLine] = []
    skipped = 0
    for raw_line in response.splitlines():
        line = raw_line.strip()
        if not line:
            continue
        tagged = _parse_line(line)
        if tagged is None:
            skipped += 1
        else:
            parsed.append(tagged)
    return parsed, skipped


def _parse_line(line: str) -> TaggedLine | None:
    fields = line.split(" - ", 2)
    if len(fields) != 3:
        return None
    category = normalize_category(fields[0])
    leaning = normalize_leaning(fields[2])
    text = fields[1].strip()
    if category is None or leaning is None or not text:
        return None
    words = text.split()
    if len(words) > MAX_INDICATOR_WORDS:
        logger.warning(
            "indicator text over %d words (%d), truncating: %.60s...",
            MAX_INDICATOR_WORDS,
            len(words),
            text,
        )
        text = " ".join(words[:MAX_INDICATOR_WORDS])
    return TaggedLine(category=category, text=text, leaning=leaning)
