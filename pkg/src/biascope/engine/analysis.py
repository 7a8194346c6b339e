"""Online analysis: descriptors -> matches -> majority-vote leaning -> spans."""

from __future__ import annotations

import logging

import numpy as np

from ..gateway import GatewayError, LlmGateway, PromptKind, load_demonstration, parse_tagged_lines
from ..labels import Leaning
from ..store import VectorStore
from .model import (
    AnalysisReport,
    Article,
    BiasPrediction,
    Descriptor,
    DescriptorMatchSet,
    make_report_id,
    utc_now_iso,
)
from .spans import map_descriptor_to_spans

logger = logging.getLogger(__name__)

DEFAULT_TOP_M = 5


class NoMatchesError(Exception):
    """predict_bias received an empty match pool."""


class AnalysisStageError(Exception):
    """Non-gateway failure inside one named analysis stage."""

    def __init__(self, stage: str, cause: Exception):
        self.stage = stage
        super().__init__(f"stage {stage!r} failed: {cause}")


def generate_descriptors(gateway: LlmGateway, article: Article) -> list[Descriptor]:
    """One descriptor-generation call; parsed lines are embedded in order.

    A response that parses to zero lines yields an empty list with a warning,
    not an error: the caller decides how to degrade.
    """
    response = gateway.complete_chat(
        PromptKind.DESCRIPTOR_GENERATION,
        {"TEXT": article.body, "EXAMPLES": load_demonstration("EXAMPLES")},
    )
    lines, skipped = parse_tagged_lines(response)
    if skipped:
        logger.warning("article %s: skipped %d malformed descriptor line(s)", article.id, skipped)
    if not lines:
        logger.warning("article %s: no descriptors parsed", article.id)
        return []
    vectors = gateway.embed_texts([line.text for line in lines])
    return [
        Descriptor(
            id=f"{article.id}:d{seq:03d}",
            category=line.category,
            text=line.text,
            leaning_as_generated=line.leaning,
            embedding=np.asarray(vector, dtype=np.float64),
        )
        for seq, (line, vector) in enumerate(zip(lines, vectors))
    ]


def match_descriptors(
    descriptors: list[Descriptor], store: VectorStore, m: int = DEFAULT_TOP_M
) -> list[DescriptorMatchSet]:
    """Top-M indicator matches per descriptor plus leaning distributions."""
    match_sets: list[DescriptorMatchSet] = []
    for descriptor in descriptors:
        matches = tuple(store.top_m_query(descriptor.embedding, m))
        counts = {leaning: 0 for leaning in Leaning}
        for match in matches:
            counts[match.leaning] += 1
        distribution = {leaning: counts[leaning] / len(matches) for leaning in Leaning}
        match_sets.append(
            DescriptorMatchSet(
                descriptor_id=descriptor.id,
                matches=matches,
                leaning_distribution=distribution,
            )
        )
    return match_sets


def predict_bias(match_sets: list[DescriptorMatchSet]) -> BiasPrediction:
    """Majority vote over all matched indicators, pooled across descriptors.

    Every pooled match contributes one unweighted vote (an indicator matched
    by two descriptors votes twice). Vote ties fall back to similarity mass;
    a remaining mass tie falls back to neutral. Mass accumulates
    (1 + cosine) / 2 per match, which is non-negative for any cosine and ranks
    vote-tied leanings (equal match counts) exactly as raw similarity sums
    would.
    """
    pool = [match for match_set in match_sets for match in match_set.matches]
    if not pool:
        raise NoMatchesError("no matches to vote with")
    votes = {leaning: 0 for leaning in Leaning}
    mass = {leaning: 0.0 for leaning in Leaning}
    for match in pool:
        votes[match.leaning] += 1
        mass[match.leaning] += (1.0 + match.similarity) / 2.0
    top_votes = max(votes.values())
    vote_tied = [leaning for leaning in Leaning if votes[leaning] == top_votes]
    if len(vote_tied) == 1:
        return BiasPrediction(vote_tied[0], votes, mass, tie_broken=False)
    top_mass = max(mass[leaning] for leaning in vote_tied)
    mass_tied = [leaning for leaning in vote_tied if mass[leaning] == top_mass]
    label = mass_tied[0] if len(mass_tied) == 1 else Leaning.NEUTRAL
    return BiasPrediction(label, votes, mass, tie_broken=True)


def analyze_article(
    gateway: LlmGateway,
    store: VectorStore,
    article: Article,
    m: int = DEFAULT_TOP_M,
) -> AnalysisReport:
    """Full online analysis of one article.

    Zero generated descriptors is not an error: the report degrades to a
    neutral prediction with the ``no_descriptors`` flag set. Gateway errors
    propagate as-is; anything else is wrapped with its stage name.
    """
    descriptors = _stage("generate-descriptors", lambda: generate_descriptors(gateway, article))
    if not descriptors:
        created = utc_now_iso()
        return AnalysisReport(
            report_id=make_report_id(article.id, created),
            created_at=created,
            article=article,
            descriptors=[],
            match_sets=[],
            prediction=BiasPrediction(
                label=Leaning.NEUTRAL,
                vote_counts={leaning: 0 for leaning in Leaning},
                similarity_mass={leaning: 0.0 for leaning in Leaning},
                tie_broken=False,
            ),
            mappings=[],
            indicator_texts={},
            no_descriptors=True,
        )

    match_sets = _stage("match-descriptors", lambda: match_descriptors(descriptors, store, m))
    prediction = _stage("predict-bias", lambda: predict_bias(match_sets))
    mappings = _stage(
        "map-spans",
        lambda: [
            map_descriptor_to_spans(gateway, d.text, article, descriptor_id=d.id)
            for d in descriptors
        ],
    )
    matched_ids = {match.indicator_id for ms in match_sets for match in ms.matches}
    texts = {
        entry.record.id: entry.record.text
        for entry in store.entries
        if entry.record.id in matched_ids
    }
    created = utc_now_iso()
    return AnalysisReport(
        report_id=make_report_id(article.id, created),
        created_at=created,
        article=article,
        descriptors=descriptors,
        match_sets=match_sets,
        prediction=prediction,
        mappings=mappings,
        indicator_texts=texts,
    )


def _stage(name: str, thunk):
    try:
        return thunk()
    except GatewayError:
        raise
    except Exception as exc:  # noqa: BLE001 - tagged and re-raised
        raise AnalysisStageError(name, exc) from exc
