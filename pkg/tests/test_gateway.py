"""Gateway contract: slots, retries, record/replay determinism, embeddings."""

from __future__ import annotations

import hashlib
import json

import pytest

from biascope.gateway import (
    DimensionMismatchError,
    EmptyInputError,
    FixtureStore,
    GatewayMode,
    LlmGateway,
    MissingSlotError,
    PromptKind,
    ProviderConfig,
    ReplayMissError,
    TransportError,
    render,
    request_digest,
)
from biascope.testing import FlakyTransport, ScriptedChat, hash_embed_transport

from conftest import record_gateway, replay_gateway

CASE_TEXT = (
    "A Joe Biden presidency could reset ties with top US trade partner Mexico that have "
    "suffered since Donald Trump made his first White House bid, tarring Mexican migrants "
    "as rapists and gun runners and vowing to keep them out with a border wall."
)
CASE_DESCRIPTORS = (
    "Tone and Language - Describes Trump's actions negatively and emphasizes negative impact on US-Mexico relations - left\n"
    "Coverage and Balance - Focuses on negative aspects of Trump's actions without presenting counterarguments - left"
)


def test_missing_slot_raises():
    with pytest.raises(MissingSlotError):
        render(PromptKind.INDICATOR_GENERATION, {"TEXT INPUT": "body", "DESC&EX": "demo"})
    with pytest.raises(MissingSlotError):
        render(PromptKind.DESCRIPTOR_MAPPING, {"TEXT": "body", "DEP": "   "})


def test_descriptor_generation_roundtrip(tmp_path):
    gateway = record_gateway(
        tmp_path / "fx.jsonl", [("could reset ties", CASE_DESCRIPTORS)]
    )
    response = gateway.complete_chat(
        PromptKind.DESCRIPTOR_GENERATION, {"TEXT": CASE_TEXT, "EXAMPLES": "demo"}
    )
    assert "Describes Trump's actions negatively" in response


def test_replay_returns_recorded_bytes(tmp_path):
    fixture = tmp_path / "fx.jsonl"
    recorded = record_gateway(fixture, [("point out the phrases", "[a phrase]\n[more]")])
    original = recorded.complete_chat(
        PromptKind.DESCRIPTOR_MAPPING, {"TEXT": "text", "DEP": "descriptor"}
    )
    replayed = replay_gateway(fixture).complete_chat(
        PromptKind.DESCRIPTOR_MAPPING, {"TEXT": "text", "DEP": "descriptor"}
    )
    assert replayed == original


def test_replay_miss_raises(tmp_path):
    fixture = tmp_path / "fx.jsonl"
    fixture.write_text("", encoding="utf-8")
    gateway = replay_gateway(fixture)
    with pytest.raises(ReplayMissError):
        gateway.complete_chat(PromptKind.DESCRIPTOR_MAPPING, {"TEXT": "t", "DEP": "d"})
    with pytest.raises(ReplayMissError):
        gateway.embed_texts(["never recorded"])


def test_replay_mode_requires_fixture_path():
    with pytest.raises(ValueError):
        ProviderConfig(mode=GatewayMode.REPLAY)


def test_embed_contract(tmp_path):
    gateway = record_gateway(tmp_path / "fx.jsonl", [], dim=16)
    with pytest.raises(EmptyInputError):
        gateway.embed_texts([])
    with pytest.raises(EmptyInputError):
        gateway.embed_texts(["ok", "   "])
    vectors = gateway.embed_texts(["a", "b"])
    assert [len(v) for v in vectors] == [16, 16]
    assert vectors[0] != vectors[1]


def test_embed_preserves_order_and_determinism(tmp_path):
    fixture = tmp_path / "fx.jsonl"
    record_gateway(fixture, [], dim=8).embed_texts(["first", "second", "third"])
    replay = replay_gateway(fixture)
    once = replay.embed_texts(["first", "second", "third"])
    permuted = replay.embed_texts(["third", "first", "second"])
    assert once[0] == permuted[1] and once[1] == permuted[2] and once[2] == permuted[0]
    digest = hashlib.sha256(json.dumps(once).encode()).hexdigest()
    again = hashlib.sha256(json.dumps(replay.embed_texts(["first", "second", "third"])).encode()).hexdigest()
    assert digest == again


def test_embed_dimension_mismatch(tmp_path):
    def short_embed(texts, model):
        return [[1.0, 2.0] for _ in texts]

    config = ProviderConfig(
        embedding_dimension=8, mode=GatewayMode.RECORD, fixture_path=tmp_path / "fx.jsonl"
    )
    gateway = LlmGateway(config, chat_transport=ScriptedChat([]), embed_transport=short_embed)
    with pytest.raises(DimensionMismatchError):
        gateway.embed_texts(["a"])


def test_retries_then_success(tmp_path):
    inner = ScriptedChat([], default="recovered")
    flaky = FlakyTransport(inner, failures=2)
    config = ProviderConfig(
        embedding_dimension=4,
        mode=GatewayMode.RECORD,
        fixture_path=tmp_path / "fx.jsonl",
        max_retries=2,
    )
    gateway = LlmGateway(
        config, chat_transport=flaky, embed_transport=hash_embed_transport(4), sleep=lambda _: None
    )
    assert gateway.complete_prompt("probe", "hello") == "recovered"
    assert flaky.attempts == 3


def test_retries_exhausted(tmp_path):
    flaky = FlakyTransport(ScriptedChat([], default="never"), failures=5)
    config = ProviderConfig(
        embedding_dimension=4,
        mode=GatewayMode.RECORD,
        fixture_path=tmp_path / "fx.jsonl",
        max_retries=1,
    )
    gateway = LlmGateway(
        config, chat_transport=flaky, embed_transport=hash_embed_transport(4), sleep=lambda _: None
    )
    with pytest.raises(TransportError):
        gateway.complete_prompt("probe", "hello")
    assert flaky.attempts == 2


def test_fixture_file_format_is_line_oriented(tmp_path):
    fixture = tmp_path / "fx.jsonl"
    gateway = record_gateway(fixture, [("multi", "line one\nline two")])
    gateway.complete_prompt("multi", "multi-line request")
    lines = fixture.read_text("utf-8").splitlines()
    assert len(lines) == 1
    digest, _, escaped = lines[0].partition("\t")
    assert digest == request_digest("multi", "multi-line request", gateway.config.model)
    assert json.loads(escaped) == "line one\nline two"


def test_digest_depends_on_kind_prompt_and_model():
    base = request_digest("kind", "prompt", "model")
    assert request_digest("kind2", "prompt", "model") != base
    assert request_digest("kind", "prompt2", "model") != base
    assert request_digest("kind", "prompt", "model2") != base
    assert request_digest("kind", "prompt", "model") == base


def test_fixture_store_rejects_malformed_lines(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text("deadbeef no-tab-separator\n".replace(" ", "_"), encoding="utf-8")
    with pytest.raises(ValueError):
        FixtureStore(path)
