"""Provider transports: thin callables the gateway drives.

A chat transport maps ``(prompt, model) -> response text``; an embedding
transport maps ``(texts, model) -> list of float vectors``. The default
implementations speak the OpenAI-compatible HTTP API; tests and demos inject
scripted callables instead (see ``biascope.testing``).
"""

from __future__ import annotations

import os
from typing import Callable, Protocol, Sequence

import httpx

from .config import ProviderConfig

ChatTransport = Callable[[str, str], str]


class EmbedTransport(Protocol):
    def __call__(self, texts: Sequence[str], model: str) -> list[list[float]]: ...


def _auth_headers(config: ProviderConfig) -> dict[str, str]:
    # Credentials stay in the environment; they are never logged or recorded.
    key = os.environ.get(config.api_key_env) or os.environ.get("OPENAI_API_KEY", "")
    headers = {"Content-Type": "application/json"}
    if key:
        headers["Authorization"] = f"Bearer {key}"
    return headers


def http_chat_transport(config: ProviderConfig) -> ChatTransport:
    """Chat-completions call with temperature pinned to 0 for determinism."""

    def call(prompt: str, model: str) -> str:
        response = httpx.post(
            f"{config.endpoint.rstrip('/')}/chat/completions",
            headers=_auth_headers(config),
            json={
                "model": model,
                "messages": [{"role": "user", "content": prompt}],
                "temperature": 0,
            },
            timeout=config.request_timeout,
        )
        response.raise_for_status()
        return response.json()["choices"][0]["message"]["content"]

    return call


def http_embed_transport(config: ProviderConfig) -> EmbedTransport:
    def call(texts: Sequence[str], model: str) -> list[list[float]]:
        response = httpx.post(
            f"{config.endpoint.rstrip('/')}/embeddings",
            headers=_auth_headers(config),
            json={"model": model, "input": list(texts)},
            timeout=config.request_timeout,
        )
        response.raise_for_status()
        data = sorted(response.json()["data"], key=lambda item: item["index"])
        return [item["embedding"] for item in data]

    return call
