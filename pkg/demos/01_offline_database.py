"""Build a bias-indicator vector database from a tiny labeled corpus.

Walks the whole offline pipeline with scripted (offline) model transports:
raw indicator generation, conflict elimination, backward-verification
scoring, strict clustering, and representative selection, ending in a
persisted vector-store file. Every call is recorded into a fixture file, so
re-running this script replays byte-identically.
"""

import json
import tempfile
from pathlib import Path

from biascope.forge import ClusterParams, build_database
from biascope.gateway import GatewayMode, LlmGateway, ProviderConfig
from biascope.store import VectorStore
from biascope.testing import ScriptedChat, hash_embed_transport

workdir = Path(tempfile.mkdtemp(prefix="biascope-demo-"))
print(f"working in {workdir}\n")

# A six-article corpus, two per leaning.
corpus_rows = [
    {"id": "a1", "body": "Op-ed cheering the new climate bill.", "leaning": "left"},
    {"id": "a2", "body": "Column mocking the climate bill as a job killer.", "leaning": "right"},
    {"id": "a3", "body": "Wire report quoting both campaigns.", "leaning": "neutral"},
    {"id": "a4", "body": "Feature lionizing striking union workers.", "leaning": "left"},
    {"id": "a5", "body": "Editorial blaming regulation for inflation.", "leaning": "right"},
    {"id": "a6", "body": "Explainer comparing both tax plans.", "leaning": "neutral"},
]
corpus_path = workdir / "corpus.jsonl"
corpus_path.write_text("\n".join(json.dumps(r) for r in corpus_rows), encoding="utf-8")

# Scripted generation: the left articles produce one shared (duplicate)
# indicator plus extras; one text appears with BOTH leanings so the
# conflict-elimination step has something to remove.
chat = ScriptedChat(
    [
        (
            "cheering the new climate bill",
            "Tone and Language - Celebratory language for one party's bill - left\n"
            "Coverage and Balance - Quotes only bill supporters - left",
        ),
        (
            "mocking the climate bill",
            "Tone and Language - Mocking language for the climate bill - right\n"
            "Coverage and Balance - Quotes only bill supporters - right",  # conflict with a1
        ),
        ("quoting both campaigns", "Coverage and Balance - Balanced sourcing across campaigns - neutral"),
        (
            "lionizing striking union workers",
            "Tone and Language - Celebratory language for one party's bill - left\n"  # duplicate of a1
            "Agenda and Framing - Frames the strike as a moral crusade - left",
        ),
        ("blaming regulation", "Agenda and Framing - Frames regulation as the root of inflation - right"),
        ("comparing both tax plans", "Examples and Analogies - Evenhanded historical comparisons - neutral"),
        ("confidence score", "8"),
    ]
)

config = ProviderConfig(
    embedding_dimension=32,
    mode=GatewayMode.RECORD,
    fixture_path=workdir / "fixtures.jsonl",
)
gateway = LlmGateway(config, chat_transport=chat, embed_transport=hash_embed_transport(32))

summary = build_database(
    gateway,
    corpus_path,
    ClusterParams(alpha=0.9),
    threshold=6,
    output_path=workdir / "indicators.bsv",
)

print("stage counts")
print(f"  raw generated   {summary.raw_count}")
print(f"  verified        {summary.verified_count}   (conflicts and low-confidence removed)")
print(f"  clusters        {summary.cluster_count}")
print(f"  final stored    {summary.final_count}\n")

store = VectorStore.load(workdir / "indicators.bsv")
print("stored indicators")
for entry in store.entries:
    record = entry.record
    print(f"  [{record.leaning.value:>7}] {record.category.value:<24} {record.text}")
print(f"\nstore file: {workdir / 'indicators.bsv'} ({(workdir / 'indicators.bsv').stat().st_size} bytes)")
print("same build again would be byte-identical; try the CLI:")
print(f"  biascope store inspect {workdir / 'indicators.bsv'}")
