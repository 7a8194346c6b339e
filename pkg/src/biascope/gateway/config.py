"""Provider configuration for the chat/embedding gateway."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path


class GatewayMode(str, Enum):
    LIVE = "live"
    RECORD = "record"
    REPLAY = "replay"


@dataclass(frozen=True)
class ProviderConfig:
    """Where and how to reach the chat-completion and embedding provider.

    Concrete model names and endpoints are configuration, not code. Credentials
    come from the environment (see ``api_key_env``) and are never persisted.
    """

    endpoint: str = "https://api.openai.com/v1"
    model: str = "gpt-3.5-turbo-16k"
    embedding_model: str = "text-embedding-ada-002"
    embedding_dimension: int = 1536
    request_timeout: float = 60.0
    max_retries: int = 2
    mode: GatewayMode = GatewayMode.LIVE
    fixture_path: Path | None = None
    api_key_env: str = "BIASCOPE_API_KEY"
    extra: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.embedding_dimension <= 0:
            raise ValueError("embedding_dimension must be positive")
        if self.max_retries < 0:
            raise ValueError("max_retries must be >= 0")
        if self.request_timeout <= 0:
            raise ValueError("request_timeout must be positive")
        if self.mode is GatewayMode.REPLAY and self.fixture_path is None:
            raise ValueError("replay mode requires a fixture path")
