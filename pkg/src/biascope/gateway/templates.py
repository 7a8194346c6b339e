"""Prompt templates: plain-text assets with ``{{SLOT}}`` placeholders.

One asset file per prompt kind. Rendering is strict: every placeholder that
appears in the template must be supplied, non-empty after trimming.
"""

from __future__ import annotations

import re
from enum import Enum
from importlib import resources

from .errors import MissingSlotError

_SLOT_RE = re.compile(r"\{\{([^{}]+)\}\}")


class PromptKind(str, Enum):
    INDICATOR_GENERATION = "indicator-generation"
    DESCRIPTOR_GENERATION = "descriptor-generation"
    DESCRIPTOR_MAPPING = "descriptor-mapping"
    CONFIDENCE_SCORING = "confidence-scoring"


_ASSET_FILES = {
    PromptKind.INDICATOR_GENERATION: "indicator_generation.txt",
    PromptKind.DESCRIPTOR_GENERATION: "descriptor_generation.txt",
    PromptKind.DESCRIPTOR_MAPPING: "descriptor_mapping.txt",
    PromptKind.CONFIDENCE_SCORING: "confidence_scoring.txt",
}

# Demonstration blocks are operator-editable assets, seeded with placeholders
# in the house style; swap the files to tune generation quality.
DEMONSTRATION_ASSETS = {
    "DESC&EX": "desc_ex.txt",
    "EXAMPLES": "examples.txt",
}


def _read_asset(name: str) -> str:
    return resources.files("biascope.gateway").joinpath("assets", name).read_text("utf-8")


def load_template(kind: PromptKind) -> str:
    return _read_asset(_ASSET_FILES[kind])


def load_demonstration(slot: str) -> str:
    """Return the shipped demonstration block for ``DESC&EX`` or ``EXAMPLES``."""
    return _read_asset(DEMONSTRATION_ASSETS[slot]).strip()


def required_slots(kind: PromptKind) -> tuple[str, ...]:
    return tuple(dict.fromkeys(_SLOT_RE.findall(load_template(kind))))


def render(kind: PromptKind, slots: dict[str, str]) -> str:
    """Fill every placeholder of the template for ``kind``.

    Raises MissingSlotError if a required slot is absent or blank; slots not
    used by the template are ignored.
    """
    template = load_template(kind)

    def _fill(match: re.Match) -> str:
        name = match.group(1)
        value = slots.get(name)
        if value is None or not value.strip():
            raise MissingSlotError(f"prompt kind {kind.value!r} requires slot {name!r}")
        return value

    return _SLOT_RE.sub(_fill, template)
