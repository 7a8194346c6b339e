"""Record/replay fixture store for deterministic, offline gateway calls.

File format: one record per line, ``<digest-hex>\\t<json-escaped response>``,
UTF-8. The JSON string escaping keeps multi-line responses on one line and the
file diff-able. Writes in record mode are flushed before the response is
returned to the caller, so an interrupted run never claims an unrecorded
response.
"""

from __future__ import annotations

import hashlib
import json
import threading
from pathlib import Path


def request_digest(kind: str, rendered_prompt: str, model: str) -> str:
    """Stable content hash identifying one provider request."""
    payload = "\x1f".join((kind, rendered_prompt, model)).encode("utf-8")
    return hashlib.sha256(payload).hexdigest()


class FixtureStore:
    """Append-only digest -> response-text map backed by a flat file.

    Thread-safe for concurrent writes; reads are lock-free after load.
    """

    def __init__(self, path: Path | str):
        self.path = Path(path)
        self._entries: dict[str, str] = {}
        self._lock = threading.Lock()
        if self.path.exists():
            self._load()

    def _load(self) -> None:
        with self.path.open("r", encoding="utf-8") as fh:
            for line_no, line in enumerate(fh, start=1):
                line = line.rstrip("\n")
                if not line:
                    continue
                digest, sep, escaped = line.partition("\t")
                if not sep:
                    raise ValueError(f"{self.path}:{line_no}: malformed fixture record")
                self._entries[digest] = json.loads(escaped)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, digest: str) -> bool:
        return digest in self._entries

    def get(self, digest: str) -> str | None:
        return self._entries.get(digest)

    def put(self, digest: str, response: str) -> None:
        """Persist a recorded response; durable before control returns."""
        with self._lock:
            if self._entries.get(digest) == response:
                return
            self._entries[digest] = response
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(f"{digest}\t{json.dumps(response, ensure_ascii=False)}\n")
                fh.flush()
