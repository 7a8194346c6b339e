"""Boundary to external chat/embedding providers with record/replay support."""

from .config import GatewayMode, ProviderConfig
from .errors import (
    DimensionMismatchError,
    EmptyInputError,
    GatewayError,
    MissingSlotError,
    ReplayMissError,
    TransportError,
)
from .fixtures import FixtureStore, request_digest
from .gateway import LlmGateway
from .parsing import MAX_INDICATOR_WORDS, TaggedLine, parse_tagged_lines
from .templates import PromptKind, load_demonstration, load_template, render, required_slots

__all__ = [
    "DimensionMismatchError",
    "EmptyInputError",
    "FixtureStore",
    "GatewayError",
    "GatewayMode",
    "LlmGateway",
    "MAX_INDICATOR_WORDS",
    "MissingSlotError",
    "PromptKind",
    "ProviderConfig",
    "ReplayMissError",
    "TaggedLine",
    "TransportError",
    "load_demonstration",
    "load_template",
    "parse_tagged_lines",
    "render",
    "request_digest",
    "required_slots",
]
