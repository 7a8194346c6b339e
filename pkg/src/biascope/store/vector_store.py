"""Persisted indicator vector database with exact top-M cosine retrieval.

The store is an exact linear scan, not an approximate index: the databases it
serves are at most tens of thousands of entries, and exactness plus
determinism are worth more than query speed here. Ranking ties are broken by
lowest indicator id so results are reproducible. Queries are ranked by cosine
similarity, where HIGHER means closer; callers wanting a distance should use
(1 - similarity).

File layout (all integers little-endian):

    magic "BSVSTORE" | u32 version | u32 dim | u64 count
    | str model-id | str params-digest
    | per entry: str id, category, text, leaning, source-article-id
                 u8 confidence | dim * float32
    | sha256 of all preceding bytes

where ``str`` is a u32 byte length followed by UTF-8 bytes. Embeddings are
stored unnormalized; norms are precomputed at load time.
"""

from __future__ import annotations

import hashlib
import os
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from ..labels import Category, Leaning
from ..records import IndicatorRecord, IndicatorStage

MAGIC = b"BSVSTORE"
FORMAT_VERSION = 1
_CHECKSUM_BYTES = 32


class StoreError(Exception):
    """Base class for vector-store failures."""


class StoreFormatError(StoreError):
    """Bad magic, unsupported format version, or structural damage."""


class StoreChecksumError(StoreError):
    """File content does not match its trailing checksum."""


class EmptyStoreError(StoreError):
    """Query against a store with no entries."""


@dataclass(frozen=True)
class StoreHeader:
    format_version: int
    embedding_dimension: int
    entry_count: int
    embedding_model: str
    build_params_digest: str


@dataclass(frozen=True)
class IndicatorEntry:
    record: IndicatorRecord
    embedding: np.ndarray


@dataclass(frozen=True)
class MatchResult:
    indicator_id: str
    similarity: float
    leaning: Leaning


class VectorStore:
    """Immutable after construction; concurrent queries need no locking."""

    def __init__(self, header: StoreHeader, entries: list[IndicatorEntry]):
        self.header = header
        self.entries = entries
        self._ids = [entry.record.id for entry in entries]
        self._leanings = [entry.record.leaning for entry in entries]
        if entries:
            self._matrix = np.stack([entry.embedding for entry in entries]).astype(np.float64)
            self._norms = np.linalg.norm(self._matrix, axis=1)
        else:
            dim = header.embedding_dimension
            self._matrix = np.zeros((0, dim), dtype=np.float64)
            self._norms = np.zeros(0, dtype=np.float64)

    # -- construction ---------------------------------------------------------

    @classmethod
    def from_records(
        cls,
        records: Sequence[IndicatorRecord],
        embeddings: Sequence[Sequence[float]],
        embedding_model: str,
        build_params_digest: str = "",
        embedding_dimension: int | None = None,
    ) -> "VectorStore":
        """Build a store from final-stage records and their aligned embeddings.

        Embeddings are cast to float32 once here, so in-memory query results
        match what a save/load round trip produces bit for bit.
        ``embedding_dimension`` only matters for an empty store, where it
        cannot be inferred from the entries.
        """
        if len(records) != len(embeddings):
            raise ValueError("records and embeddings must be aligned")
        entries: list[IndicatorEntry] = []
        dim: int | None = embedding_dimension
        for record, vector in zip(records, embeddings):
            if record.stage is not IndicatorStage.FINAL:
                raise ValueError(f"record {record.id!r} is not final-stage")
            arr = np.asarray(vector, dtype=np.float32)
            if arr.ndim != 1:
                raise ValueError(f"embedding for {record.id!r} is not a vector")
            if dim is None:
                dim = int(arr.shape[0])
            elif arr.shape[0] != dim:
                raise ValueError(
                    f"embedding dimension mismatch: {arr.shape[0]} vs {dim}"
                )
            if not np.linalg.norm(arr):
                raise ValueError(f"embedding for {record.id!r} has zero norm")
            entries.append(IndicatorEntry(record=record, embedding=arr))
        header = StoreHeader(
            format_version=FORMAT_VERSION,
            embedding_dimension=dim if dim is not None else 0,
            entry_count=len(entries),
            embedding_model=embedding_model,
            build_params_digest=build_params_digest,
        )
        return cls(header, entries)

    # -- queries ----------------------------------------------------------------

    def top_m_query(self, query: Sequence[float], m: int) -> list[MatchResult]:
        """Exact scan returning min(m, entries) results, best first.

        Sorted by similarity descending; equal similarities are ordered by
        lowest indicator id.
        """
        if m < 1:
            raise ValueError("m must be >= 1")
        if not self.entries:
            raise EmptyStoreError("store has no entries")
        q = np.asarray(query, dtype=np.float64)
        if q.shape != (self.header.embedding_dimension,):
            raise ValueError(
                f"query dimension {q.shape} does not match store "
                f"({self.header.embedding_dimension},)"
            )
        q_norm = float(np.linalg.norm(q))
        if q_norm == 0.0:
            raise ValueError("query vector has zero norm")
        sims = (self._matrix @ q) / (self._norms * q_norm)
        order = sorted(range(len(self.entries)), key=lambda i: (-sims[i], self._ids[i]))
        return [
            MatchResult(
                indicator_id=self._ids[i],
                similarity=float(sims[i]),
                leaning=self._leanings[i],
            )
            for i in order[:m]
        ]

    def leaning_counts(self) -> dict[Leaning, int]:
        counts = {leaning: 0 for leaning in Leaning}
        for leaning in self._leanings:
            counts[leaning] += 1
        return counts

    # -- persistence --------------------------------------------------------------

    def save(self, path: Path | str) -> None:
        path = Path(path)
        blob = bytearray()
        blob += MAGIC
        blob += struct.pack("<II", FORMAT_VERSION, self.header.embedding_dimension)
        blob += struct.pack("<Q", len(self.entries))
        _put_str(blob, self.header.embedding_model)
        _put_str(blob, self.header.build_params_digest)
        for entry in self.entries:
            record = entry.record
            _put_str(blob, record.id)
            _put_str(blob, record.category.value)
            _put_str(blob, record.text)
            _put_str(blob, record.leaning.value)
            _put_str(blob, record.source_article_id)
            blob.append(record.confidence or 0)
            blob += entry.embedding.astype("<f4").tobytes()
        blob += hashlib.sha256(bytes(blob)).digest()
        tmp = path.with_suffix(path.suffix + ".tmp")
        tmp.write_bytes(bytes(blob))
        os.replace(tmp, path)

    @classmethod
    def load(cls, path: Path | str) -> "VectorStore":
        data = Path(path).read_bytes()
        if len(data) < len(MAGIC) + _CHECKSUM_BYTES:
            raise StoreFormatError("file too short to be a vector store")
        body, checksum = data[:-_CHECKSUM_BYTES], data[-_CHECKSUM_BYTES:]
        if hashlib.sha256(body).digest() != checksum:
            raise StoreChecksumError("checksum mismatch: file is corrupt or truncated")
        reader = _Reader(body)
        if reader.take(len(MAGIC)) != MAGIC:
            raise StoreFormatError("not a vector store file (bad magic)")
        version, dim = struct.unpack("<II", reader.take(8))
        if version != FORMAT_VERSION:
            raise StoreFormatError(
                f"unsupported format version {version} (expected {FORMAT_VERSION})"
            )
        (count,) = struct.unpack("<Q", reader.take(8))
        model = reader.take_str()
        params_digest = reader.take_str()
        entries: list[IndicatorEntry] = []
        for _ in range(count):
            record_id = reader.take_str()
            category = Category(reader.take_str())
            text = reader.take_str()
            leaning = Leaning(reader.take_str())
            source = reader.take_str()
            confidence = reader.take(1)[0]
            vector = np.frombuffer(reader.take(4 * dim), dtype="<f4").copy()
            record = IndicatorRecord(
                id=record_id,
                category=category,
                text=text,
                leaning=leaning,
                source_article_id=source,
                stage=IndicatorStage.FINAL,
                confidence=confidence or None,
            )
            entries.append(IndicatorEntry(record=record, embedding=vector))
        if reader.remaining():
            raise StoreFormatError("trailing bytes after last entry")
        header = StoreHeader(
            format_version=version,
            embedding_dimension=dim,
            entry_count=count,
            embedding_model=model,
            build_params_digest=params_digest,
        )
        return cls(header, entries)


class _Reader:
    def __init__(self, data: bytes):
        self._data = data
        self._pos = 0

    def take(self, n: int) -> bytes:
        if self._pos + n > len(self._data):
            raise StoreFormatError("unexpected end of file")
        chunk = self._data[self._pos : self._pos + n]
        self._pos += n
        return chunk

    def take_str(self) -> str:
        (length,) = struct.unpack("<I", self.take(4))
        return self.take(length).decode("utf-8")

    def remaining(self) -> int:
        return len(self._data) - self._pos


def _put_str(blob: bytearray, text: str) -> None:
    raw = text.encode("utf-8")
    blob += struct.pack("<I", len(raw))
    blob += raw
