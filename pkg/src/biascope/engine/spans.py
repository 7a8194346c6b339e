"""Descriptor-to-text mapping: bracket-phrase extraction and span location.

The mapping prompt asks the model to return verbatim phrases in square
brackets, so locating them is surface-level substring search (case- and
whitespace-insensitive), not semantic alignment.
"""

from __future__ import annotations

import re

from ..gateway import LlmGateway, PromptKind
from .model import Article, SpanMapping

_BRACKET_RE = re.compile(r"\[([^\[\]]*)\]")


def parse_bracket_phrases(response: str) -> list[str]:
    """Non-empty bracketed phrases, in order, exact duplicates dropped."""
    phrases: list[str] = []
    seen: set[str] = set()
    for match in _BRACKET_RE.finditer(response):
        phrase = match.group(1).strip()
        if phrase and phrase not in seen:
            phrases.append(phrase)
            seen.add(phrase)
    return phrases


def locate_phrase(phrase: str, body: str) -> tuple[int, int] | None:
    """First occurrence of the phrase in the body as a character span.

    Matching ignores case and treats any whitespace run as equivalent.
    """
    words = phrase.split()
    if not words:
        return None
    pattern = r"\s+".join(re.escape(word) for word in words)
    found = re.search(pattern, body, re.IGNORECASE)
    if found is None:
        return None
    return found.start(), found.end()


def merge_spans(spans: list[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Merge overlapping or touching spans; result is sorted and disjoint."""
    merged: list[tuple[int, int]] = []
    for start, end in sorted(spans):
        if merged and start <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], end))
        else:
            merged.append((start, end))
    return tuple(merged)


def map_descriptor_to_spans(
    gateway: LlmGateway,
    descriptor_text: str,
    article: Article,
    descriptor_id: str = "custom",
) -> SpanMapping:
    """Ask which phrases reflect the descriptor and map them into the body."""
    if not descriptor_text.strip():
        raise ValueError("descriptor text must be non-empty")
    response = gateway.complete_chat(
        PromptKind.DESCRIPTOR_MAPPING,
        {"TEXT": article.body, "DEP": descriptor_text},
    )
    located: list[tuple[int, int]] = []
    unmatched: list[str] = []
    for phrase in parse_bracket_phrases(response):
        span = locate_phrase(phrase, article.body)
        if span is None:
            unmatched.append(phrase)
        else:
            located.append(span)
    return SpanMapping(
        descriptor_id=descriptor_id,
        spans=merge_spans(located),
        unmatched_phrases=tuple(unmatched),
    )
