"""Strict clustering: agglomerative merging under a hard distance ceiling.

Complete linkage is the fixed criterion: a merge happens only while the
maximum pairwise Euclidean distance between the joined members stays within
``alpha``, so every output cluster satisfies that bound by construction.
Representatives are the members nearest each cluster's arithmetic-mean
centroid. Merge-order ties are broken by the lexicographically smallest pair
of cluster minimum ids, which makes the whole procedure deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from ..records import IndicatorRecord

COMPLETE_LINKAGE = "complete"


@dataclass(frozen=True)
class ClusterParams:
    alpha: float
    linkage: str = COMPLETE_LINKAGE

    def __post_init__(self) -> None:
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        if self.linkage != COMPLETE_LINKAGE:
            raise ValueError("only complete linkage is supported")


@dataclass(frozen=True)
class Cluster:
    member_ids: tuple[str, ...]
    centroid: np.ndarray = field(repr=False)
    representative_id: str

    def __post_init__(self) -> None:
        if not self.member_ids:
            raise ValueError("cluster has no members")
        if self.representative_id not in self.member_ids:
            raise ValueError("representative is not a cluster member")


def _pairwise_distances(matrix: np.ndarray) -> np.ndarray:
    n = matrix.shape[0]
    dists = np.zeros((n, n), dtype=np.float64)
    for i in range(n):
        dists[i] = np.linalg.norm(matrix - matrix[i], axis=1)
    return dists


def nearest_to_centroid(
    member_ids: Sequence[str],
    centroid: np.ndarray,
    embeddings: Mapping[str, np.ndarray],
) -> str:
    """Member id with minimal Euclidean distance to the centroid; ties -> lowest id."""
    return min(
        member_ids,
        key=lambda mid: (float(np.linalg.norm(np.asarray(embeddings[mid], dtype=np.float64) - centroid)), mid),
    )


def cluster_indicators(
    records: Sequence[IndicatorRecord],
    embeddings: Sequence[Sequence[float]],
    params: ClusterParams,
) -> list[Cluster]:
    """Partition verified indicators into clusters of diameter <= alpha.

    Starts from singletons and repeatedly merges the pair of clusters with
    the smallest complete-linkage distance while that distance stays within
    alpha. Returns clusters sorted by their minimum member id.
    """
    if not records:
        raise ValueError("no records to cluster")
    if len(records) != len(embeddings):
        raise ValueError("records and embeddings must be aligned")
    matrix = np.asarray(embeddings, dtype=np.float64)
    if matrix.ndim != 2:
        raise ValueError("embeddings have inconsistent dimensions")

    ids = [record.id for record in records]
    n = len(ids)
    # Complete-linkage distances; inf marks the diagonal and retired clusters.
    # The Lance-Williams max update only ever propagates original pairwise
    # values, so exact equality comparisons for tie handling are sound.
    linkage = _pairwise_distances(matrix)
    np.fill_diagonal(linkage, np.inf)
    members: list[list[int]] = [[i] for i in range(n)]
    min_ids: list[str] = list(ids)
    active = n

    while active > 1:
        smallest = linkage.min()
        if not smallest <= params.alpha:
            break
        rows, cols = np.nonzero(linkage == smallest)
        candidates = {(int(r), int(c)) for r, c in zip(rows, cols) if r < c}
        i, j = min(
            candidates,
            key=lambda pair: tuple(sorted((min_ids[pair[0]], min_ids[pair[1]]))),
        )
        merged_row = np.maximum(linkage[i], linkage[j])
        merged_row[i] = np.inf
        merged_row[j] = np.inf
        linkage[i, :] = merged_row
        linkage[:, i] = merged_row
        linkage[j, :] = np.inf
        linkage[:, j] = np.inf
        members[i].extend(members[j])
        members[j] = []
        min_ids[i] = min(min_ids[i], min_ids[j])
        active -= 1

    embeddings_by_id = {ids[i]: matrix[i] for i in range(n)}
    clusters: list[Cluster] = []
    for group in members:
        if not group:
            continue
        member_ids = tuple(sorted(ids[i] for i in group))
        centroid = matrix[group].mean(axis=0)
        clusters.append(
            Cluster(
                member_ids=member_ids,
                centroid=centroid,
                representative_id=nearest_to_centroid(member_ids, centroid, embeddings_by_id),
            )
        )
    clusters.sort(key=lambda cluster: cluster.member_ids[0])
    return clusters


def select_representatives(
    clusters: Sequence[Cluster],
    embeddings: Mapping[str, np.ndarray],
    records: Mapping[str, IndicatorRecord],
) -> list[IndicatorRecord]:
    """One final-stage record per cluster: the member nearest the centroid.

    The representative's category, text, leaning, and confidence carry over
    unchanged; only the stage advances.
    """
    finals: list[IndicatorRecord] = []
    for cluster in clusters:
        rep_id = nearest_to_centroid(cluster.member_ids, cluster.centroid, embeddings)
        finals.append(records[rep_id].finalized())
    return finals
