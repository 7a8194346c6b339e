"""Shared builders for gateway, store, and record/replay fixtures."""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from biascope.gateway import GatewayMode, LlmGateway, ProviderConfig
from biascope.labels import Category, Leaning
from biascope.records import IndicatorRecord, IndicatorStage
from biascope.store import VectorStore
from biascope.testing import ScriptedChat, hash_embed_transport


def record_gateway(
    fixture_path: Path,
    rules: list[tuple[str, str]],
    dim: int = 8,
    embed=None,
    default: str | None = None,
    max_retries: int = 0,
) -> LlmGateway:
    config = ProviderConfig(
        embedding_dimension=dim,
        mode=GatewayMode.RECORD,
        fixture_path=fixture_path,
        max_retries=max_retries,
    )
    return LlmGateway(
        config,
        chat_transport=ScriptedChat(rules, default=default),
        embed_transport=embed or hash_embed_transport(dim),
        sleep=lambda _: None,
    )


def replay_gateway(fixture_path: Path, dim: int = 8) -> LlmGateway:
    config = ProviderConfig(
        embedding_dimension=dim,
        mode=GatewayMode.REPLAY,
        fixture_path=fixture_path,
    )
    return LlmGateway(config)


def final_record(
    record_id: str,
    leaning: Leaning = Leaning.LEFT,
    text: str | None = None,
    category: Category = Category.TONE_AND_LANGUAGE,
    confidence: int = 8,
) -> IndicatorRecord:
    return IndicatorRecord(
        id=record_id,
        category=category,
        text=text or f"indicator text {record_id}",
        leaning=leaning,
        source_article_id="src",
        stage=IndicatorStage.FINAL,
        confidence=confidence,
    )


def store_from_vectors(
    vectors: dict[str, tuple[Leaning, list[float]]],
    model: str = "test-embedder",
) -> VectorStore:
    """Store built from id -> (leaning, embedding), deterministic entry order."""
    ids = sorted(vectors)
    records = [final_record(i, leaning=vectors[i][0]) for i in ids]
    embeddings = [vectors[i][1] for i in ids]
    return VectorStore.from_records(records, embeddings, model)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)


# --- shared case-study world -------------------------------------------------
#
# The walkthrough article, a left-dominated synthetic store, and scripted
# responses whose descriptor embeddings sit on the store's left axis, so the
# majority vote is forced by construction.

CASE_TEXT = (
    "A Joe Biden presidency could reset ties with top US trade partner Mexico that have "
    "suffered since Donald Trump made his first White House bid, tarring Mexican migrants "
    "as rapists and gun runners and vowing to keep them out with a border wall."
)

CASE_DESCRIPTOR_1 = "Describes Trump's actions negatively and emphasizes negative impact on US-Mexico relations"
CASE_DESCRIPTOR_2 = "Focuses on negative aspects of Trump's actions without presenting counterarguments"

CASE_DIM = 6

_LEFT_AXIS = [1.0, 0.0, 0.0, 0.0, 0.0, 0.0]
_NEUTRAL_AXIS = [0.0, 1.0, 0.0, 0.0, 0.0, 0.0]
_RIGHT_AXIS = [0.0, 0.0, 1.0, 0.0, 0.0, 0.0]

CASE_EMBED_TABLE = {
    CASE_DESCRIPTOR_1: [0.99, 0.05, 0.01, 0.0, 0.0, 0.0],
    CASE_DESCRIPTOR_2: [0.98, 0.02, 0.05, 0.0, 0.0, 0.0],
}

# Mapping rules are keyed on "DESCRIPTOR: ..." and must precede the rule
# keyed on the article text: the mapping prompt embeds the article too.
CASE_CHAT_RULES = [
    (
        f"DESCRIPTOR: {CASE_DESCRIPTOR_1}",
        "[tarring Mexican migrants as rapists]",
    ),
    (
        f"DESCRIPTOR: {CASE_DESCRIPTOR_2}",
        "[vowing to keep them out with a border wall]",
    ),
    (
        "could reset ties",
        f"Tone and Language - {CASE_DESCRIPTOR_1} - left\n"
        f"Coverage and Balance - {CASE_DESCRIPTOR_2} - left",
    ),
]


def case_store() -> VectorStore:
    vectors: dict[str, tuple[Leaning, list[float]]] = {}
    for i in range(5):
        axis = list(_LEFT_AXIS)
        axis[3] = 0.02 * (i + 1)
        vectors[f"left{i}"] = (Leaning.LEFT, axis)
    vectors["neutral0"] = (Leaning.NEUTRAL, _NEUTRAL_AXIS)
    vectors["right0"] = (Leaning.RIGHT, _RIGHT_AXIS)
    return store_from_vectors(vectors)


def case_gateway(fixture_path: Path, mode: str = "record", extra_rules=(), default=None) -> LlmGateway:
    """Record-mode gateway for the case world; replay after recording."""
    if mode == "replay":
        return replay_gateway(fixture_path, dim=CASE_DIM)
    from biascope.testing import hash_embed_transport as _hash, lookup_embed_transport

    return record_gateway(
        fixture_path,
        CASE_CHAT_RULES + list(extra_rules),
        dim=CASE_DIM,
        embed=lookup_embed_transport(CASE_EMBED_TABLE, fallback=_hash(CASE_DIM)),
        default=default,
    )
