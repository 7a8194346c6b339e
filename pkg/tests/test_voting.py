"""Majority-vote prediction, including the tie ladders, against an oracle."""

from __future__ import annotations

import numpy as np
import pytest

from biascope.engine import DescriptorMatchSet, NoMatchesError, predict_bias
from biascope.labels import Leaning
from biascope.store import MatchResult


def match_set(descriptor_id: str, labeled_sims: list[tuple[Leaning, float]]) -> DescriptorMatchSet:
    matches = tuple(
        MatchResult(indicator_id=f"{descriptor_id}:{k}", similarity=sim, leaning=leaning)
        for k, (leaning, sim) in enumerate(labeled_sims)
    )
    counts = {leaning: 0 for leaning in Leaning}
    for leaning, _ in labeled_sims:
        counts[leaning] += 1
    distribution = {leaning: counts[leaning] / len(labeled_sims) for leaning in Leaning}
    return DescriptorMatchSet(descriptor_id=descriptor_id, matches=matches, leaning_distribution=distribution)


def test_strict_majority():
    prediction = predict_bias(
        [match_set("d0", [(Leaning.LEFT, 0.9), (Leaning.LEFT, 0.8), (Leaning.RIGHT, 0.95)])]
    )
    assert prediction.label is Leaning.LEFT
    assert prediction.vote_counts[Leaning.LEFT] == 2
    assert prediction.vote_counts[Leaning.RIGHT] == 1
    assert prediction.vote_counts[Leaning.NEUTRAL] == 0
    assert prediction.tie_broken is False


def test_vote_tie_resolved_by_similarity_mass():
    prediction = predict_bias([match_set("d0", [(Leaning.LEFT, 0.9), (Leaning.RIGHT, 0.5)])])
    assert prediction.label is Leaning.LEFT
    assert prediction.tie_broken is True


def test_full_tie_falls_back_to_neutral():
    prediction = predict_bias([match_set("d0", [(Leaning.LEFT, 0.6), (Leaning.RIGHT, 0.6)])])
    assert prediction.label is Leaning.NEUTRAL
    assert prediction.tie_broken is True


def test_votes_pool_across_match_sets():
    prediction = predict_bias(
        [
            match_set("d0", [(Leaning.RIGHT, 0.4), (Leaning.LEFT, 0.2)]),
            match_set("d1", [(Leaning.RIGHT, 0.1)]),
        ]
    )
    assert prediction.label is Leaning.RIGHT
    assert prediction.vote_counts[Leaning.RIGHT] == 2


def test_duplicate_indicator_votes_once_per_occurrence():
    # The same stored indicator matched by two descriptors contributes two votes.
    shared = MatchResult(indicator_id="shared", similarity=0.7, leaning=Leaning.LEFT)
    sets = [
        DescriptorMatchSet("d0", (shared,), {Leaning.LEFT: 1.0, Leaning.NEUTRAL: 0.0, Leaning.RIGHT: 0.0}),
        DescriptorMatchSet("d1", (shared,), {Leaning.LEFT: 1.0, Leaning.NEUTRAL: 0.0, Leaning.RIGHT: 0.0}),
        DescriptorMatchSet("d2", (MatchResult("r", 0.9, Leaning.RIGHT),), {Leaning.LEFT: 0.0, Leaning.NEUTRAL: 0.0, Leaning.RIGHT: 1.0}),
    ]
    prediction = predict_bias(sets)
    assert prediction.label is Leaning.LEFT
    assert prediction.vote_counts[Leaning.LEFT] == 2


def test_masses_are_non_negative_even_for_negative_similarities():
    prediction = predict_bias(
        [match_set("d0", [(Leaning.LEFT, -0.9), (Leaning.RIGHT, -0.2), (Leaning.RIGHT, -0.99)])]
    )
    assert all(mass >= 0.0 for mass in prediction.similarity_mass.values())
    assert prediction.label is Leaning.RIGHT


def test_empty_pool_raises():
    with pytest.raises(NoMatchesError):
        predict_bias([])


def oracle_predict(pool: list[tuple[Leaning, float]]):
    """Blunt counting oracle following the stated decision ladder."""
    votes = {l: 0 for l in Leaning}
    mass = {l: 0.0 for l in Leaning}
    for leaning, sim in pool:
        votes[leaning] += 1
        mass[leaning] += (1.0 + sim) / 2.0
    best = max(votes.values())
    tied = [l for l in Leaning if votes[l] == best]
    if len(tied) == 1:
        return tied[0], False
    top = max(mass[l] for l in tied)
    winners = [l for l in tied if mass[l] == top]
    return (winners[0], True) if len(winners) == 1 else (Leaning.NEUTRAL, True)


def test_oracle_agreement_on_random_pools(rng: np.random.Generator):
    leanings = list(Leaning)
    for trial in range(400):
        size = int(rng.integers(1, 12))
        pool = [
            (leanings[int(rng.integers(3))], float(rng.uniform(-1, 1)))
            for _ in range(size)
        ]
        if trial % 3 == 1 and size >= 2:
            # Force a vote tie between two leanings.
            half = size // 2
            pool = [(Leaning.LEFT, s) for _, s in pool[:half]] + [
                (Leaning.RIGHT, s) for _, s in pool[half : 2 * half]
            ]
        if trial % 7 == 0 and size >= 2:
            # Force a full tie: identical multisets of similarities.
            sims = [float(rng.uniform(-1, 1)) for _ in range(size // 2)]
            pool = [(Leaning.LEFT, s) for s in sims] + [(Leaning.RIGHT, s) for s in sims]
        if not pool:
            continue
        per_descriptor = [match_set("d0", pool[: len(pool) // 2] or pool), match_set("d1", pool[len(pool) // 2 :])] if len(pool) > 1 else [match_set("d0", pool)]
        flat = [(m.leaning, m.similarity) for ms in per_descriptor for m in ms.matches]
        expected_label, expected_tie = oracle_predict(flat)
        prediction = predict_bias(per_descriptor)
        assert prediction.label is expected_label, f"trial {trial}"
        assert prediction.tie_broken is expected_tie, f"trial {trial}"
