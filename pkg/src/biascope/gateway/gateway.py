"""Uniform boundary to the chat-completion and embedding provider.

All outbound model traffic flows through :class:`LlmGateway`. Calls are keyed
by a content digest of (kind, rendered prompt, model); in record mode every
live response is persisted under its digest, and in replay mode responses come
exclusively from the fixture file, making whole pipelines byte-deterministic.
"""

from __future__ import annotations

import json
import logging
import time
from typing import Sequence

from .config import GatewayMode, ProviderConfig
from .errors import (
    DimensionMismatchError,
    EmptyInputError,
    ReplayMissError,
    TransportError,
)
from .fixtures import FixtureStore, request_digest
from .templates import PromptKind, render
from .transports import ChatTransport, EmbedTransport, http_chat_transport, http_embed_transport

logger = logging.getLogger(__name__)

_EMBEDDING_KIND = "embedding"


class LlmGateway:
    """Chat + embedding access with retries and record/replay fixtures.

    Safe for concurrent use: configuration is immutable, the fixture store
    serializes its writes, and transports are stateless callables.
    """

    def __init__(
        self,
        config: ProviderConfig,
        chat_transport: ChatTransport | None = None,
        embed_transport: EmbedTransport | None = None,
        sleep=time.sleep,
    ):
        self.config = config
        self.fixtures: FixtureStore | None = None
        if config.fixture_path is not None:
            self.fixtures = FixtureStore(config.fixture_path)
        if config.mode is GatewayMode.RECORD and self.fixtures is None:
            raise ValueError("record mode requires a fixture path")
        if config.mode is not GatewayMode.REPLAY:
            self._chat = chat_transport or http_chat_transport(config)
            self._embed = embed_transport or http_embed_transport(config)
        else:
            self._chat = chat_transport
            self._embed = embed_transport
        self._sleep = sleep

    # -- chat ---------------------------------------------------------------

    def complete_chat(self, kind: PromptKind, slots: dict[str, str]) -> str:
        """Render the template for ``kind`` and return the provider response."""
        prompt = render(kind, slots)
        return self._complete(kind.value, prompt)

    def complete_prompt(self, kind_label: str, prompt: str) -> str:
        """Completion for a caller-owned prompt (e.g. baseline classification).

        Uses the same digest/fixture machinery as the templated prompts;
        ``kind_label`` namespaces the digest.
        """
        return self._complete(kind_label, prompt)

    def _complete(self, kind_label: str, prompt: str) -> str:
        digest = request_digest(kind_label, prompt, self.config.model)
        if self.config.mode is GatewayMode.REPLAY:
            return self._replay(digest, kind_label)
        if self.fixtures is not None:
            recorded = self.fixtures.get(digest)
            if recorded is not None:
                return recorded
        response = self._call_with_retries(lambda: self._chat(prompt, self.config.model))
        if self.config.mode is GatewayMode.RECORD:
            self.fixtures.put(digest, response)
        return response

    # -- embeddings ---------------------------------------------------------

    def embed_texts(self, texts: Sequence[str]) -> list[list[float]]:
        """Embed ``texts`` in order; each vector has the configured dimension."""
        if not texts:
            raise EmptyInputError("embed_texts requires at least one text")
        for i, text in enumerate(texts):
            if not text.strip():
                raise EmptyInputError(f"text at position {i} is empty")

        digests = [
            request_digest(_EMBEDDING_KIND, text, self.config.embedding_model)
            for text in texts
        ]
        vectors: list[list[float] | None] = [None] * len(texts)
        missing: list[int] = []
        for i, digest in enumerate(digests):
            recorded = self.fixtures.get(digest) if self.fixtures is not None else None
            if recorded is not None:
                vectors[i] = self._decode_vector(recorded)
            else:
                missing.append(i)

        if missing:
            if self.config.mode is GatewayMode.REPLAY:
                raise ReplayMissError(
                    f"no recorded embedding for {len(missing)} text(s), "
                    f"first digest {digests[missing[0]]}"
                )
            fetched = self._call_with_retries(
                lambda: self._embed([texts[i] for i in missing], self.config.embedding_model)
            )
            if len(fetched) != len(missing):
                raise TransportError(
                    f"provider returned {len(fetched)} embeddings for {len(missing)} texts"
                )
            for i, vector in zip(missing, fetched):
                self._check_dimension(vector)
                if self.config.mode is GatewayMode.RECORD:
                    self.fixtures.put(digests[i], json.dumps(vector))
                vectors[i] = list(vector)

        for vector in vectors:
            self._check_dimension(vector)
        return vectors  # type: ignore[return-value]

    def _decode_vector(self, recorded: str) -> list[float]:
        vector = json.loads(recorded)
        self._check_dimension(vector)
        return vector

    def _check_dimension(self, vector) -> None:
        if vector is None or len(vector) != self.config.embedding_dimension:
            got = "none" if vector is None else str(len(vector))
            raise DimensionMismatchError(
                f"expected dimension {self.config.embedding_dimension}, got {got}"
            )

    # -- plumbing -----------------------------------------------------------

    def _replay(self, digest: str, kind_label: str) -> str:
        recorded = self.fixtures.get(digest)
        if recorded is None:
            raise ReplayMissError(f"{kind_label}: digest {digest} not in fixture")
        return recorded

    def _call_with_retries(self, call):
        delay = 1.0
        for attempt in range(self.config.max_retries + 1):
            try:
                return call()
            except Exception as exc:  # noqa: BLE001 - transport errors are provider-specific
                if attempt == self.config.max_retries:
                    raise TransportError(
                        f"provider call failed after {attempt + 1} attempt(s): {exc}"
                    ) from exc
                logger.warning("provider call failed (attempt %d): %s", attempt + 1, exc)
                self._sleep(delay)
                delay *= 2
