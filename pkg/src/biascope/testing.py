"""Deterministic fake transports for offline runs, demos, and tests.

Nothing here talks to a network. The hash embedder derives a reproducible
pseudo-embedding from each text's digest; the scripted chat transport returns
canned responses selected by substring. Recording a run against these fakes
produces a fixture file that replays byte-identically anywhere.
"""

from __future__ import annotations

import hashlib
from typing import Sequence

import numpy as np


def hash_embed_transport(dimension: int):
    """Embedding transport: unit vector seeded by the text's SHA-256.

    Distinct texts get distinct (near-orthogonal in high dimensions) vectors;
    the same text always gets the same vector, on any platform.
    """

    def embed(texts: Sequence[str], model: str) -> list[list[float]]:
        vectors = []
        for text in texts:
            seed = int.from_bytes(hashlib.sha256(text.encode("utf-8")).digest()[:8], "big")
            rng = np.random.default_rng(seed)
            vector = rng.standard_normal(dimension)
            vector /= np.linalg.norm(vector)
            vectors.append([float(x) for x in vector])
        return vectors

    return embed


def lookup_embed_transport(table: dict[str, Sequence[float]], fallback=None):
    """Embedding transport answering from an explicit text -> vector table.

    Texts absent from the table go to ``fallback`` (another transport) when
    given, otherwise they are an error.
    """

    def embed(texts: Sequence[str], model: str) -> list[list[float]]:
        missing = [text for text in texts if text not in table]
        if missing and fallback is None:
            raise KeyError(f"no scripted embedding for: {missing[:3]}")
        filled = dict(table)
        if missing:
            for text, vector in zip(missing, fallback(missing, model)):
                filled[text] = vector
        return [[float(x) for x in filled[text]] for text in texts]

    return embed


class ScriptedChat:
    """Chat transport answering by first matching substring, else a default.

    Rules are checked in insertion order; a rule is a (substring, response)
    pair matched against the rendered prompt.
    """

    def __init__(self, rules: list[tuple[str, str]], default: str | None = None):
        self.rules = list(rules)
        self.default = default
        self.calls: list[str] = []

    def __call__(self, prompt: str, model: str) -> str:
        self.calls.append(prompt)
        for needle, response in self.rules:
            if needle in prompt:
                return response
        if self.default is not None:
            return self.default
        raise KeyError(f"no scripted response matches prompt: {prompt[:80]!r}...")


class FlakyTransport:
    """Wraps a transport, failing the first ``failures`` calls."""

    def __init__(self, inner, failures: int):
        self._inner = inner
        self.remaining_failures = failures
        self.attempts = 0

    def __call__(self, *args, **kwargs):
        self.attempts += 1
        if self.remaining_failures > 0:
            self.remaining_failures -= 1
            raise ConnectionError("scripted transport failure")
        return self._inner(*args, **kwargs)
