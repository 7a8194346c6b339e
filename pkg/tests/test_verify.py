"""Conflict elimination and backward-verification scoring."""

from __future__ import annotations

import numpy as np
import pytest

from biascope.forge import eliminate_conflicts, normalize_indicator_text, parse_confidence, score_and_filter
from biascope.labels import Category, Leaning
from biascope.records import IndicatorRecord, IndicatorStage

from conftest import record_gateway


def raw(record_id: str, text: str, leaning: Leaning) -> IndicatorRecord:
    return IndicatorRecord(
        id=record_id,
        category=Category.TONE_AND_LANGUAGE,
        text=text,
        leaning=leaning,
        source_article_id="a1",
    )


def test_conflicting_leanings_remove_all():
    records = [
        raw("a", "uses loaded language", Leaning.LEFT),
        raw("b", "Uses loaded language", Leaning.RIGHT),
    ]
    assert eliminate_conflicts(records) == []


def test_duplicates_with_same_leaning_merge_to_lowest_id():
    records = [
        raw("b", "cites only left sources", Leaning.LEFT),
        raw("a", "cites only left sources", Leaning.LEFT),
    ]
    kept = eliminate_conflicts(records)
    assert [record.id for record in kept] == ["a"]


def test_distinct_texts_both_kept_in_id_order():
    records = [raw("z", "B", Leaning.RIGHT), raw("a", "A", Leaning.LEFT)]
    assert [record.id for record in eliminate_conflicts(records)] == ["a", "z"]


def test_normalization_folds_case_whitespace_terminal_punctuation():
    assert normalize_indicator_text("  Uses   LOADED language!!  ") == "uses loaded language"
    assert normalize_indicator_text("plain") == normalize_indicator_text("Plain.")


def test_conflict_elimination_idempotent(rng: np.random.Generator):
    texts = [f"indicator {i}" for i in range(8)]
    records = []
    for n in range(60):
        records.append(
            raw(
                f"r{n:03d}",
                str(rng.choice(texts)),
                Leaning(["left", "neutral", "right"][int(rng.integers(3))]),
            )
        )
    once = eliminate_conflicts(records)
    twice = eliminate_conflicts(once)
    assert once == twice


def test_non_raw_records_rejected():
    verified = raw("a", "text", Leaning.LEFT).verified(7)
    with pytest.raises(ValueError):
        eliminate_conflicts([verified])


def test_parse_confidence_first_in_range_integer():
    assert parse_confidence("8") == 8
    assert parse_confidence("Confidence: 8/10") == 8
    assert parse_confidence("I would say 10 out of 10.") == 10
    assert parse_confidence("0") is None
    assert parse_confidence("eleven: 11, then 42") is None
    assert parse_confidence("no numbers") is None


def test_threshold_boundary_inclusive(tmp_path):
    gateway = record_gateway(tmp_path / "fx.jsonl", [("kept indicator", "6"), ("dropped indicator", "5")])
    records = [raw("a", "kept indicator", Leaning.LEFT), raw("b", "dropped indicator", Leaning.LEFT)]
    survivors = score_and_filter(gateway, records, threshold=6)
    assert [record.id for record in survivors] == ["a"]
    assert survivors[0].stage is IndicatorStage.VERIFIED
    assert survivors[0].confidence == 6


def test_scores_one_through_ten_half_survive_at_six(tmp_path):
    rules = [(f"indicator number {i:02d}", str(i)) for i in range(1, 11)]
    gateway = record_gateway(tmp_path / "fx.jsonl", rules)
    records = [raw(f"r{i:02d}", f"indicator number {i:02d}", Leaning.RIGHT) for i in range(1, 11)]
    survivors = score_and_filter(gateway, records, threshold=6)
    assert len(survivors) == 5
    assert sorted(record.confidence for record in survivors) == [6, 7, 8, 9, 10]


def test_unparseable_score_drops_record(tmp_path):
    gateway = record_gateway(tmp_path / "fx.jsonl", [], default="I cannot rate this.")
    records = [raw("a", "some indicator", Leaning.LEFT)]
    assert score_and_filter(gateway, records, threshold=1) == []
