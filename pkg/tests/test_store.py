"""Vector store: cosine math, exact top-M retrieval, binary persistence."""

from __future__ import annotations

import math

import numpy as np
import pytest

from biascope.labels import Leaning
from biascope.store import (
    EmptyStoreError,
    StoreChecksumError,
    StoreFormatError,
    VectorStore,
    cosine_similarity,
)

from conftest import final_record, store_from_vectors


def test_cosine_identical_direction():
    assert cosine_similarity([1.0, 0.0], [1.0, 0.0]) == pytest.approx(1.0)


def test_cosine_orthogonal():
    assert cosine_similarity([1.0, 0.0], [0.0, 1.0]) == pytest.approx(0.0, abs=1e-15)


def test_cosine_hand_computed():
    expected = 32.0 / math.sqrt(14.0 * 77.0)
    assert cosine_similarity([1, 2, 3], [4, 5, 6]) == pytest.approx(expected, abs=1e-12)
    assert cosine_similarity([1, 2, 3], [4, 5, 6]) == pytest.approx(0.9746318461970762, abs=1e-12)


def test_cosine_errors():
    with pytest.raises(ValueError):
        cosine_similarity([1.0, 0.0], [1.0, 0.0, 0.0])
    with pytest.raises(ValueError):
        cosine_similarity([0.0, 0.0], [1.0, 0.0])


def test_cosine_symmetry(rng: np.random.Generator):
    for _ in range(50):
        a = rng.normal(size=12)
        b = rng.normal(size=12)
        assert abs(cosine_similarity(a, b) - cosine_similarity(b, a)) < 1e-12


def make_store(n: int, dim: int, rng: np.random.Generator) -> VectorStore:
    leanings = [Leaning.LEFT, Leaning.NEUTRAL, Leaning.RIGHT]
    vectors = {
        f"v{i:04d}": (leanings[i % 3], rng.normal(size=dim).tolist()) for i in range(n)
    }
    return store_from_vectors(vectors)


def test_query_matching_stored_embedding_ranks_first(rng: np.random.Generator):
    store = make_store(20, 8, rng)
    target = store.entries[7]
    results = store.top_m_query(target.embedding, 3)
    assert results[0].indicator_id == target.record.id
    assert results[0].similarity == pytest.approx(1.0, abs=1e-6)


def test_m_larger_than_store_returns_all_sorted(rng: np.random.Generator):
    store = make_store(5, 4, rng)
    results = store.top_m_query(rng.normal(size=4), 50)
    assert len(results) == 5
    sims = [r.similarity for r in results]
    assert sims == sorted(sims, reverse=True)


def test_brute_force_oracle_agreement(rng: np.random.Generator):
    store = make_store(200, 16, rng)
    vectors = {entry.record.id: np.array(entry.embedding, dtype=np.float64) for entry in store.entries}
    for _ in range(25):
        query = rng.normal(size=16)
        expected = sorted(
            vectors,
            key=lambda rid: (
                -float(
                    np.dot(vectors[rid], query)
                    / (np.linalg.norm(vectors[rid]) * np.linalg.norm(query))
                ),
                rid,
            ),
        )[:7]
        got = [r.indicator_id for r in store.top_m_query(query, 7)]
        assert got == expected


def test_similarity_tie_broken_by_lowest_id():
    # Two entries share a direction; a and c are identical vectors.
    store = store_from_vectors(
        {
            "c": (Leaning.LEFT, [1.0, 0.0]),
            "a": (Leaning.RIGHT, [1.0, 0.0]),
            "b": (Leaning.NEUTRAL, [0.0, 1.0]),
        }
    )
    results = store.top_m_query([1.0, 0.0], 3)
    assert [r.indicator_id for r in results] == ["a", "c", "b"]


def test_ranking_scale_invariance(rng: np.random.Generator):
    store = make_store(50, 8, rng)
    query = rng.normal(size=8)
    base = [r.indicator_id for r in store.top_m_query(query, 10)]
    for scale in (1e-3, 7.0, 1e4):
        scaled = [r.indicator_id for r in store.top_m_query(query * scale, 10)]
        assert scaled == base


def test_query_error_cases(rng: np.random.Generator):
    store = make_store(3, 4, rng)
    with pytest.raises(ValueError):
        store.top_m_query([1.0, 0.0], 1)
    with pytest.raises(ValueError):
        store.top_m_query([1.0, 0.0, 0.0, 0.0], 0)
    with pytest.raises(ValueError):
        store.top_m_query([0.0, 0.0, 0.0, 0.0], 1)
    empty = VectorStore.from_records([], [], "m", embedding_dimension=4)
    with pytest.raises(EmptyStoreError):
        empty.top_m_query([1.0, 0.0, 0.0, 0.0], 1)


def test_zero_norm_embedding_rejected_at_build():
    with pytest.raises(ValueError):
        store_from_vectors({"a": (Leaning.LEFT, [0.0, 0.0])})


def test_non_final_records_rejected_at_build():
    record = final_record("a")
    raw = type(record)(
        id="b",
        category=record.category,
        text="txt",
        leaning=Leaning.LEFT,
        source_article_id="s",
    )
    with pytest.raises(ValueError):
        VectorStore.from_records([raw], [[1.0, 0.0]], "m")


def test_save_load_roundtrip_preserves_queries(tmp_path, rng: np.random.Generator):
    store = make_store(30, 8, rng)
    path = tmp_path / "db.bsv"
    store.save(path)
    loaded = VectorStore.load(path)
    assert loaded.header == store.header
    for _ in range(10):
        query = rng.normal(size=8)
        assert store.top_m_query(query, 5) == loaded.top_m_query(query, 5)


def test_save_is_byte_stable(tmp_path, rng: np.random.Generator):
    store = make_store(10, 6, rng)
    first = tmp_path / "a.bsv"
    second = tmp_path / "b.bsv"
    store.save(first)
    VectorStore.load(first).save(second)
    assert first.read_bytes() == second.read_bytes()


def test_wrong_version_rejected(tmp_path, rng: np.random.Generator):
    path = tmp_path / "db.bsv"
    make_store(3, 4, rng).save(path)
    data = bytearray(path.read_bytes())
    data[8] = 99  # format-version field follows the 8-byte magic
    body = bytes(data[:-32])
    import hashlib

    path.write_bytes(body + hashlib.sha256(body).digest())
    with pytest.raises(StoreFormatError):
        VectorStore.load(path)


def test_corrupted_byte_fails_checksum(tmp_path, rng: np.random.Generator):
    path = tmp_path / "db.bsv"
    make_store(3, 4, rng).save(path)
    data = bytearray(path.read_bytes())
    data[len(data) // 2] ^= 0xFF
    path.write_bytes(bytes(data))
    with pytest.raises(StoreChecksumError):
        VectorStore.load(path)


def test_truncated_file_fails_checksum(tmp_path, rng: np.random.Generator):
    path = tmp_path / "db.bsv"
    make_store(3, 4, rng).save(path)
    data = path.read_bytes()
    path.write_bytes(data[: len(data) - 10])
    with pytest.raises(StoreChecksumError):
        VectorStore.load(path)


def test_leaning_counts(rng: np.random.Generator):
    store = make_store(9, 4, rng)
    counts = store.leaning_counts()
    assert counts[Leaning.LEFT] == 3
    assert counts[Leaning.NEUTRAL] == 3
    assert counts[Leaning.RIGHT] == 3
