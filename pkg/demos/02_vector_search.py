"""Exact top-M cosine retrieval over the indicator store.

Shows the ranking contract on hand-placed vectors: exact matches rank first,
ties break by indicator id, ranking is invariant to positive query scaling,
and a saved/loaded store answers identically.
"""

import tempfile
from pathlib import Path

import numpy as np

from biascope.labels import Category, Leaning
from biascope.records import IndicatorRecord, IndicatorStage
from biascope.store import VectorStore, cosine_similarity


def indicator(record_id: str, text: str, leaning: Leaning) -> IndicatorRecord:
    return IndicatorRecord(
        id=record_id,
        category=Category.TONE_AND_LANGUAGE,
        text=text,
        leaning=leaning,
        source_article_id="demo",
        stage=IndicatorStage.FINAL,
        confidence=8,
    )


records = [
    indicator("i1", "celebrates one side's wins", Leaning.LEFT),
    indicator("i2", "mocks the opposing candidate", Leaning.LEFT),
    indicator("i3", "quotes both parties evenly", Leaning.NEUTRAL),
    indicator("i4", "frames taxes as theft", Leaning.RIGHT),
    indicator("i5", "copies i4 direction exactly", Leaning.RIGHT),
]
embeddings = [
    [0.95, 0.05, 0.00],
    [0.90, 0.10, 0.05],
    [0.00, 1.00, 0.00],
    [0.00, 0.10, 0.99],
    [0.00, 0.20, 1.98],  # same direction as i4, double length
]

store = VectorStore.from_records(records, embeddings, "demo-embedder")

print("cosine similarity basics")
print(f"  aligned   {cosine_similarity([1, 0], [2, 0]):.3f}")
print(f"  orthogonal{cosine_similarity([1, 0], [0, 3]):>7.3f}")
print(f"  [1,2,3]x[4,5,6] = {cosine_similarity([1, 2, 3], [4, 5, 6]):.6f}\n")

query = np.array([1.0, 0.08, 0.02])
print(f"query near the 'left tone' direction, top 3:")
for match in store.top_m_query(query, 3):
    print(f"  {match.indicator_id}  sim={match.similarity:+.4f}  [{match.leaning.value}]")

print("\nscale invariance: query * 1000 gives the same order")
scaled = [m.indicator_id for m in store.top_m_query(query * 1000.0, 3)]
print(f"  {scaled}")

print("\nties break by id: i4 and i5 share a direction; query on it:")
for match in store.top_m_query(np.array([0.0, 0.1, 0.99]), 2):
    print(f"  {match.indicator_id}  sim={match.similarity:+.6f}")

path = Path(tempfile.mkdtemp(prefix="biascope-demo-")) / "search.bsv"
store.save(path)
loaded = VectorStore.load(path)
same = loaded.top_m_query(query, 5) == store.top_m_query(query, 5)
print(f"\nsave/load roundtrip preserves results: {same}")
print(f"store file: {path}")
