"""Metrics and an offline benchmark producing the fixed-column report table.

First computes the biased-class and both-classes metrics from raw confusion
counts, then runs a benchmark over a synthetic dataset engineered so every
item's top matches carry its gold label (all metrics land at 100%), plus the
indicator-database ablation that answers from replayed zero-shot labels.
"""

import json
import tempfile
from pathlib import Path

import numpy as np

from biascope.engine import Article
from biascope.evalbench import (
    AblationConfig,
    ConfusionCounts,
    check_reference_consistency,
    compute_metrics,
    load_dataset,
    run_benchmark,
)
from biascope.gateway import GatewayMode, LlmGateway, ProviderConfig
from biascope.labels import Category, Leaning
from biascope.records import IndicatorRecord, IndicatorStage
from biascope.store import VectorStore
from biascope.testing import ScriptedChat, lookup_embed_transport

print("metrics from a confusion matrix (tp=2 fp=1 fn=0 tn=1)")
row = compute_metrics(ConfusionCounts(tp=2, fp=1, fn=0, tn=1))
print(
    f"  precision={row.precision:.4f} recall={row.recall:.4f} f1={row.f1:.4f} "
    f"micro={row.micro_f1:.4f} macro={row.macro_f1:.4f}"
)

print("\nreference-row self check (printed F1 equals harmonic mean of P and R):")
for name, value in check_reference_consistency().items():
    print(f"  {name:<9} derived F1 = {value:.2f}%")

# ---- aligned benchmark world ------------------------------------------------

workdir = Path(tempfile.mkdtemp(prefix="biascope-demo-"))
AXES = {
    Leaning.LEFT: [1.0, 0.0, 0.0],
    Leaning.NEUTRAL: [0.0, 1.0, 0.0],
    Leaning.RIGHT: [0.0, 0.0, 1.0],
}

rows, rules, table = [], [], {}
for k in range(12):
    leaning = [Leaning.LEFT, Leaning.RIGHT, Leaning.NEUTRAL][k % 3]
    body = f"benchmark article number {k:02d}"
    descriptor = f"Distinct summary for article {k:02d}"
    rows.append({"body": body, "label": leaning.value})
    rules.append((body, f"Tone and Language - {descriptor} - {leaning.value}"))
    table[descriptor] = AXES[leaning]
dataset_path = workdir / "bench.jsonl"
dataset_path.write_text("\n".join(json.dumps(r) for r in rows), encoding="utf-8")
dataset = load_dataset(dataset_path, "aligned-demo")

store = VectorStore.from_records(
    [
        IndicatorRecord(
            id=f"{leaning.value}{i}",
            category=Category.TONE_AND_LANGUAGE,
            text=f"seed indicator {leaning.value} {i}",
            leaning=leaning,
            source_article_id="seed",
            stage=IndicatorStage.FINAL,
            confidence=9,
        )
        for leaning in AXES
        for i in range(2)
    ],
    [list(np.array(AXES[leaning]) * (1.0 + 0.1 * i)) for leaning in AXES for i in range(2)],
    "demo-embedder",
)

config = ProviderConfig(
    embedding_dimension=3, mode=GatewayMode.RECORD, fixture_path=workdir / "fx.jsonl"
)
gateway = LlmGateway(
    config,
    chat_transport=ScriptedChat(rules),
    embed_transport=lookup_embed_transport(table),
)

report = run_benchmark([dataset], gateway, store=store, m=2)
print("\nfull-pipeline benchmark on the aligned dataset:")
print(report.to_table())

# Ablation: no indicator database, direct zero-shot classification instead.
zs_rules = [(row["body"], f"I judge this text to be {row['label']}.") for row in rows]
zs_gateway = LlmGateway(
    ProviderConfig(embedding_dimension=3, mode=GatewayMode.RECORD, fixture_path=workdir / "zs.jsonl"),
    chat_transport=ScriptedChat(zs_rules),
    embed_transport=lookup_embed_transport(table),
)
ablated = run_benchmark(
    [dataset],
    zs_gateway,
    ablation=AblationConfig(use_indicator_database=False, use_strict_clustering=False),
)
print("\nindicator-database ablation (zero-shot route):")
print(ablated.to_table())
