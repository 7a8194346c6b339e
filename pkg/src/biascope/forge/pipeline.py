"""Full offline build: corpus -> raw -> verified -> clustered -> vector store."""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import asdict, dataclass
from pathlib import Path

from ..gateway import LlmGateway
from ..records import IndicatorRecord
from ..store import VectorStore
from .clustering import Cluster, ClusterParams, cluster_indicators, select_representatives
from .corpus import load_corpus
from .generate import generate_indicators
from .verify import eliminate_conflicts, score_and_filter

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BuildSummary:
    """Stage counts of one database build; raw >= verified >= final."""

    raw_count: int
    verified_count: int
    cluster_count: int
    final_count: int
    alpha: float
    confidence_threshold: int
    per_leaning: bool
    store_path: str

    def to_json_line(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def _params_digest(gateway: LlmGateway, params: ClusterParams, threshold: int, per_leaning: bool) -> str:
    payload = json.dumps(
        {
            "alpha": params.alpha,
            "linkage": params.linkage,
            "confidence_threshold": threshold,
            "per_leaning": per_leaning,
            "model": gateway.config.model,
            "embedding_model": gateway.config.embedding_model,
        },
        sort_keys=True,
    )
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def _cluster(
    verified: list[IndicatorRecord],
    embeddings: list[list[float]],
    params: ClusterParams,
    per_leaning: bool,
) -> list[Cluster]:
    if not per_leaning:
        return cluster_indicators(verified, embeddings, params)
    clusters: list[Cluster] = []
    for leaning in sorted({record.leaning for record in verified}, key=lambda l: l.value):
        subset = [
            (record, vector)
            for record, vector in zip(verified, embeddings)
            if record.leaning is leaning
        ]
        clusters.extend(
            cluster_indicators([r for r, _ in subset], [v for _, v in subset], params)
        )
    clusters.sort(key=lambda cluster: cluster.member_ids[0])
    return clusters


def build_database(
    gateway: LlmGateway,
    corpus_path: Path | str,
    params: ClusterParams,
    threshold: int,
    output_path: Path | str,
    per_leaning: bool = False,
    parallelism: int = 1,
    unclustered_path: Path | str | None = None,
) -> BuildSummary:
    """Run the offline pipeline and write the vector-store file.

    Embeddings are computed once for the verified set and reused both for
    clustering and for the stored vectors, so the clustering space and the
    query space cannot drift apart. When ``unclustered_path`` is given, a
    second store containing the whole verified set (each indicator its own
    representative) is written for clustering-ablation runs.
    """
    corpus = load_corpus(corpus_path)
    raw = generate_indicators(gateway, corpus, parallelism=parallelism)
    deduped = eliminate_conflicts(raw)
    verified = score_and_filter(gateway, deduped, threshold, parallelism=parallelism)

    digest = _params_digest(gateway, params, threshold, per_leaning)
    dim = gateway.config.embedding_dimension

    if verified:
        embeddings = gateway.embed_texts([record.text for record in verified])
        clusters = _cluster(verified, embeddings, params, per_leaning)
        by_id = {record.id: record for record in verified}
        vectors_by_id = {record.id: vector for record, vector in zip(verified, embeddings)}
        finals = select_representatives(clusters, vectors_by_id, by_id)
        final_vectors = [vectors_by_id[record.id] for record in finals]
    else:
        logger.warning("verified indicator set is empty; writing an empty store")
        embeddings = []
        clusters = []
        finals = []
        final_vectors = []

    store = VectorStore.from_records(
        finals, final_vectors, gateway.config.embedding_model, digest, embedding_dimension=dim
    )
    store.save(output_path)

    if unclustered_path is not None:
        unclustered = VectorStore.from_records(
            [record.finalized() for record in verified],
            embeddings,
            gateway.config.embedding_model,
            digest + ":unclustered",
            embedding_dimension=dim,
        )
        unclustered.save(unclustered_path)

    summary = BuildSummary(
        raw_count=len(raw),
        verified_count=len(verified),
        cluster_count=len(clusters),
        final_count=len(finals),
        alpha=params.alpha,
        confidence_threshold=threshold,
        per_leaning=per_leaning,
        store_path=str(output_path),
    )
    logger.info("build complete: %s", summary.to_json_line())
    return summary
