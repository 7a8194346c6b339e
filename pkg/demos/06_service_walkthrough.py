"""Drive the HTTP service in-process: analyze, batch, notes, download, mapping.

Uses the FastAPI test client, so no port is opened; the same app serves real
traffic via `biascope serve --store ... --mode replay --fixtures ...`.
"""

import json
import tempfile
import time
from pathlib import Path

from fastapi.testclient import TestClient

from biascope.gateway import GatewayMode, LlmGateway, ProviderConfig
from biascope.labels import Category, Leaning
from biascope.records import IndicatorRecord, IndicatorStage
from biascope.service import create_app
from biascope.store import VectorStore
from biascope.testing import ScriptedChat, hash_embed_transport, lookup_embed_transport

ARTICLE = (
    "A Joe Biden presidency could reset ties with top US trade partner Mexico that have "
    "suffered since Donald Trump made his first White House bid, tarring Mexican migrants "
    "as rapists and gun runners and vowing to keep them out with a border wall."
)
DESC = "Describes Trump's actions negatively and emphasizes negative impact on US-Mexico relations"

workdir = Path(tempfile.mkdtemp(prefix="biascope-demo-"))

store = VectorStore.from_records(
    [
        IndicatorRecord(
            id=f"L{i}", category=Category.TONE_AND_LANGUAGE,
            text=f"negative framing of a politician, variant {i}",
            leaning=Leaning.LEFT, source_article_id="seed",
            stage=IndicatorStage.FINAL, confidence=9,
        )
        for i in range(3)
    ]
    + [
        IndicatorRecord(
            id="R0", category=Category.AGENDA_AND_FRAMING, text="praises border enforcement",
            leaning=Leaning.RIGHT, source_article_id="seed",
            stage=IndicatorStage.FINAL, confidence=9,
        )
    ],
    [[1.0, 0.0, 0.01 * i, 0.0] for i in range(3)] + [[0.0, 1.0, 0.0, 0.0]],
    "demo-embedder",
)

gateway = LlmGateway(
    ProviderConfig(embedding_dimension=4, mode=GatewayMode.RECORD, fixture_path=workdir / "fx.jsonl"),
    chat_transport=ScriptedChat(
        [
            (f"DESCRIPTOR: {DESC}", "[tarring Mexican migrants as rapists]"),
            ("could reset ties", f"Tone and Language - {DESC} - left"),
            ("batch piece one", "Tone and Language - Batch summary one - left"),
            ("batch piece two", "Coverage and Balance - Batch summary two - right"),
        ],
        default="[nothing found]",
    ),
    embed_transport=lookup_embed_transport(
        {DESC: [0.99, 0.01, 0.0, 0.0]}, fallback=hash_embed_transport(4)
    ),
)

client = TestClient(create_app(gateway, store, workdir / "reports", m=2))

print("health:", client.get("/health").json()["store"]["leaning_counts"])

analysis = client.post("/analyze", json={"body": ARTICLE}).json()
report_id = analysis["report_id"]
print(f"\nanalyze -> report {report_id}")
print("  prediction:", analysis["report"]["prediction"]["label"])
print("  descriptors:", [d["text"][:40] + "..." for d in analysis["report"]["descriptors"]])

batch_content = "\n".join(
    [json.dumps({"body": "batch piece one"}), "oops not json", json.dumps({"body": "batch piece two"})]
)
job = client.post("/analyze/batch", content=batch_content).json()
while True:
    status = client.get(f"/analyze/batch/{job['job_id']}").json()
    if status["completed"] == status["total"]:
        break
    time.sleep(0.02)
print(f"\nbatch job {status['job_id']}: {status['completed']}/{status['total']} done")
for rid in status["report_ids"]:
    print(f"  {rid}: {status['reports'][rid]}")

client.post(f"/report/{report_id}/notes", json={"note": "verify the migrant quote", "author": "reader"})
document = client.get(f"/report/{report_id}/download").content
print(f"\ndownloaded document: {len(document)} bytes; note included:",
      b"verify the migrant quote" in document)

mapping = client.post("/mapping", json={"descriptor": DESC, "article": ARTICLE}).json()
start, end = mapping["spans"][0]
print(f"\ncustom mapping span: {ARTICLE[start:end]!r}")
