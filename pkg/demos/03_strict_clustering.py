"""Strict clustering: the distance ceiling alpha controls cluster granularity.

Clusters 2-D synthetic indicator embeddings at several alpha values and
verifies the complete-linkage promise: no cluster's diameter ever exceeds
alpha. Also shows representative selection (member nearest the centroid).
"""

import numpy as np

from biascope.forge import ClusterParams, cluster_indicators
from biascope.labels import Category, Leaning
from biascope.records import IndicatorRecord

rng = np.random.default_rng(7)

# Three blobs of "semantically close" indicators plus one outlier.
blob_a = rng.normal([0, 0], 0.15, size=(6, 2))
blob_b = rng.normal([3, 0], 0.15, size=(5, 2))
blob_c = rng.normal([0, 3], 0.15, size=(4, 2))
outlier = np.array([[8.0, 8.0]])
points = np.vstack([blob_a, blob_b, blob_c, outlier])

records = [
    IndicatorRecord(
        id=f"p{k:02d}",
        category=Category.TONE_AND_LANGUAGE,
        text=f"synthetic indicator {k}",
        leaning=Leaning.LEFT,
        source_article_id="demo",
    )
    for k in range(len(points))
]


def diameter(member_ids, lookup):
    pts = np.stack([lookup[mid] for mid in member_ids])
    diffs = pts[:, None, :] - pts[None, :, :]
    return float(np.sqrt((diffs**2).sum(-1)).max())


lookup = {f"p{k:02d}": points[k] for k in range(len(points))}

for alpha in (0.3, 1.0, 5.0, 20.0):
    clusters = cluster_indicators(records, points.tolist(), ClusterParams(alpha=alpha))
    sizes = sorted((len(c.member_ids) for c in clusters), reverse=True)
    widest = max(diameter(c.member_ids, lookup) for c in clusters)
    print(f"alpha={alpha:<5}  clusters={len(clusters):<3} sizes={sizes}  max diameter={widest:.3f}")
    assert widest <= alpha, "complete-linkage ceiling violated"

print("\nrepresentatives at alpha=1.0 (member closest to each centroid):")
for cluster in cluster_indicators(records, points.tolist(), ClusterParams(alpha=1.0)):
    centroid = ", ".join(f"{x:+.2f}" for x in cluster.centroid)
    print(
        f"  {cluster.representative_id} represents {len(cluster.member_ids)} member(s)"
        f"  centroid=({centroid})"
    )

print("\nalpha -> 0 keeps every indicator; alpha -> infinity keeps one:")
for alpha in (1e-9, 1e9):
    count = len(cluster_indicators(records, points.tolist(), ClusterParams(alpha=alpha)))
    print(f"  alpha={alpha:<8g} clusters={count}")
