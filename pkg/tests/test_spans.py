"""Descriptor-to-text mapping: bracket parsing, location, merging, bounds."""

from __future__ import annotations

from biascope.engine import Article, locate_phrase, map_descriptor_to_spans, merge_spans, parse_bracket_phrases

from conftest import record_gateway

CASE_TEXT = (
    "A Joe Biden presidency could reset ties with top US trade partner Mexico that have "
    "suffered since Donald Trump made his first White House bid, tarring Mexican migrants "
    "as rapists and gun runners and vowing to keep them out with a border wall."
)


def test_parse_bracket_phrases():
    assert parse_bracket_phrases("[one], [two] and [ three ]") == ["one", "two", "three"]
    assert parse_bracket_phrases("[ ], [], nothing") == []
    assert parse_bracket_phrases("[dup], [dup]") == ["dup"]
    assert parse_bracket_phrases("no brackets at all") == []


def test_locate_phrase_case_and_whitespace_insensitive():
    body = "The Quick   brown\nfox jumps."
    assert locate_phrase("quick brown fox", body) == (4, 21)
    assert body[4:21] == "Quick   brown\nfox"
    assert locate_phrase("missing phrase", body) is None
    assert locate_phrase("   ", body) is None


def test_merge_spans_overlapping_and_touching():
    assert merge_spans([(0, 5), (3, 9)]) == ((0, 9),)
    assert merge_spans([(0, 5), (5, 9)]) == ((0, 9),)
    assert merge_spans([(0, 2), (4, 6)]) == ((0, 2), (4, 6))
    assert merge_spans([(4, 6), (0, 2), (1, 5)]) == ((0, 6),)
    assert merge_spans([]) == ()


def test_mapping_locates_cited_phrase(tmp_path):
    gateway = record_gateway(
        tmp_path / "fx.jsonl",
        [("point out the phrases", "[tarring Mexican migrants as rapists]")],
    )
    article = Article(id="case", body=CASE_TEXT)
    mapping = map_descriptor_to_spans(gateway, "negative portrayal of Trump", article)
    assert len(mapping.spans) == 1
    start, end = mapping.spans[0]
    assert CASE_TEXT[start:end] == "tarring Mexican migrants as rapists"
    assert mapping.unmatched_phrases == ()


def test_mapping_absent_phrase_reported_unmatched(tmp_path):
    gateway = record_gateway(
        tmp_path / "fx.jsonl", [("point out the phrases", "[phrase that is not present]")]
    )
    article = Article(id="case", body=CASE_TEXT)
    mapping = map_descriptor_to_spans(gateway, "anything", article)
    assert mapping.spans == ()
    assert mapping.unmatched_phrases == ("phrase that is not present",)


def test_mapping_merges_adjacent_overlapping_phrases(tmp_path):
    gateway = record_gateway(
        tmp_path / "fx.jsonl",
        [("point out the phrases", "[tarring Mexican migrants], [Mexican migrants as rapists]")],
    )
    article = Article(id="case", body=CASE_TEXT)
    mapping = map_descriptor_to_spans(gateway, "migrants", article)
    assert len(mapping.spans) == 1
    start, end = mapping.spans[0]
    assert CASE_TEXT[start:end] == "tarring Mexican migrants as rapists"


def test_spans_lie_within_body_bounds(tmp_path):
    gateway = record_gateway(
        tmp_path / "fx.jsonl",
        [("point out the phrases", "[border wall.], [A Joe Biden presidency]")],
    )
    article = Article(id="case", body=CASE_TEXT)
    mapping = map_descriptor_to_spans(gateway, "framing", article)
    for start, end in mapping.spans:
        assert 0 <= start < end <= len(CASE_TEXT)
    starts = [s for s, _ in mapping.spans]
    assert starts == sorted(starts)
