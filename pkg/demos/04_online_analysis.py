"""Analyze one article end to end: descriptors, matches, vote, highlighted spans.

Uses scripted transports and a hand-built left-dominated store so the whole
walkthrough runs offline and reproducibly. The final section prints the
article with the located descriptor spans marked inline.
"""

import tempfile
from pathlib import Path

from biascope.engine import Article, analyze_article
from biascope.gateway import GatewayMode, LlmGateway, ProviderConfig
from biascope.labels import Category, Leaning
from biascope.records import IndicatorRecord, IndicatorStage
from biascope.store import VectorStore
from biascope.testing import ScriptedChat, hash_embed_transport, lookup_embed_transport

ARTICLE = (
    "A Joe Biden presidency could reset ties with top US trade partner Mexico that have "
    "suffered since Donald Trump made his first White House bid, tarring Mexican migrants "
    "as rapists and gun runners and vowing to keep them out with a border wall."
)

DESC_1 = "Describes Trump's actions negatively and emphasizes negative impact on US-Mexico relations"
DESC_2 = "Focuses on negative aspects of Trump's actions without presenting counterarguments"

DIM = 6
LEFT = [1.0, 0.0, 0.0, 0.0, 0.0, 0.0]
NEUTRAL = [0.0, 1.0, 0.0, 0.0, 0.0, 0.0]
RIGHT = [0.0, 0.0, 1.0, 0.0, 0.0, 0.0]


def stored(record_id, text, leaning):
    return IndicatorRecord(
        id=record_id,
        category=Category.TONE_AND_LANGUAGE,
        text=text,
        leaning=leaning,
        source_article_id="seed",
        stage=IndicatorStage.FINAL,
        confidence=9,
    )


store = VectorStore.from_records(
    [
        stored("L1", "Using negative language to describe Donald Trump's actions and behavior", Leaning.LEFT),
        stored("L2", "Highlights harm to foreign relations caused by one politician", Leaning.LEFT),
        stored("L3", "Presents one side's criticisms without rebuttal", Leaning.LEFT),
        stored("N1", "Quotes both governments at equal length", Leaning.NEUTRAL),
        stored("R1", "Frames border enforcement as overdue", Leaning.RIGHT),
    ],
    [
        [0.99, 0.02, 0.0, 0.01, 0.0, 0.0],
        [0.97, 0.05, 0.0, 0.02, 0.0, 0.0],
        [0.95, 0.01, 0.02, 0.03, 0.0, 0.0],
        NEUTRAL,
        RIGHT,
    ],
    "demo-embedder",
)

chat = ScriptedChat(
    [
        (f"DESCRIPTOR: {DESC_1}", "[tarring Mexican migrants as rapists]"),
        (f"DESCRIPTOR: {DESC_2}", "[vowing to keep them out with a border wall]"),
        (
            "could reset ties",
            f"Tone and Language - {DESC_1} - left\nCoverage and Balance - {DESC_2} - left",
        ),
    ]
)
embed = lookup_embed_transport(
    {DESC_1: [0.99, 0.05, 0.01, 0.0, 0.0, 0.0], DESC_2: [0.98, 0.02, 0.05, 0.0, 0.0, 0.0]},
    fallback=hash_embed_transport(DIM),
)

config = ProviderConfig(
    embedding_dimension=DIM,
    mode=GatewayMode.RECORD,
    fixture_path=Path(tempfile.mkdtemp(prefix="biascope-demo-")) / "fixtures.jsonl",
)
gateway = LlmGateway(config, chat_transport=chat, embed_transport=embed)

report = analyze_article(gateway, store, Article(id="walkthrough", body=ARTICLE), m=3)

print("descriptors and their match-derived leaning distributions")
for descriptor, match_set in zip(report.descriptors, report.match_sets):
    dist = match_set.leaning_distribution
    bar = "".join(
        symbol * round(dist[leaning] * 10)
        for symbol, leaning in (("L", Leaning.LEFT), ("n", Leaning.NEUTRAL), ("R", Leaning.RIGHT))
    )
    print(f"\n  [{descriptor.category.value}] {descriptor.text}")
    print(f"    distribution |{bar:<10}|")
    for match in match_set.matches:
        text = report.indicator_texts[match.indicator_id]
        print(f"    {match.similarity:+.3f} [{match.leaning.value:>7}] {text}")

prediction = report.prediction
votes = ", ".join(f"{l.value}={prediction.vote_counts[l]}" for l in Leaning)
print(f"\npredicted leaning: {prediction.label.value.upper()}  (votes: {votes})")

print("\narticle with located spans marked:")
marks = sorted(span for mapping in report.mappings for span in mapping.spans)
cursor, rendered = 0, []
for start, end in marks:
    rendered.append(ARTICLE[cursor:start])
    rendered.append(">>>" + ARTICLE[start:end] + "<<<")
    cursor = end
rendered.append(ARTICLE[cursor:])
print("  " + "".join(rendered))
