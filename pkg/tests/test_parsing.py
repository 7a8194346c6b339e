"""Tagged-line parser: format tolerance, normalization, skip accounting."""

from __future__ import annotations

import numpy as np

from biascope.gateway import MAX_INDICATOR_WORDS, parse_tagged_lines
from biascope.labels import Category, Leaning, normalize_category, normalize_leaning


def test_well_formed_line():
    lines, skipped = parse_tagged_lines(
        "Tone and Language - Using negative language to describe Donald Trump's actions and behavior - left"
    )
    assert skipped == 0
    assert len(lines) == 1
    assert lines[0].category is Category.TONE_AND_LANGUAGE
    assert lines[0].text == "Using negative language to describe Donald Trump's actions and behavior"
    assert lines[0].leaning is Leaning.LEFT


def test_no_dashes_is_skipped():
    lines, skipped = parse_tagged_lines("no dashes here")
    assert lines == []
    assert skipped == 1


def test_numbering_prefix_stripped_by_category_normalizer():
    lines, skipped = parse_tagged_lines(
        "1. Agenda and Framing - Frames policy as reset - Neutral"
    )
    assert skipped == 0
    assert lines[0].category is Category.AGENDA_AND_FRAMING
    assert lines[0].leaning is Leaning.NEUTRAL


def test_mixed_fixture_of_real_and_corrupted_lines():
    # Hand-labeled 20-line fixture: which lines must parse and to what.
    response = "\n".join(
        [
            "Tone and Language - Uses loaded adjectives - left",                      # ok
            "2) Sources and Citations - Quotes one side only - right",                # ok (numbered)
            "- Coverage and Balance - Ignores the other campaign - left",             # ok (bullet)
            "Framing - Casts the bill as a power grab - right",                       # ok (fuzzy category)
            "Examples and Analogies - Compares leader to historical villains - Left", # ok (case)
            "Tone and Language - Neutral wording throughout - center",                # ok (center->neutral)
            "",                                                                       # blank, ignored
            "Tone and Language - Missing leaning field",                              # bad: 2 fields
            "Unknown Category - Some text - left",                                    # bad: category
            "Tone and Language - Some text - upward",                                 # bad: leaning
            "Tone and Language -  - left",                                            # bad: empty text
            "free text with no structure",                                            # bad
            "Tone and Language - Text with an en-dash in-word like well-known - right",  # ok
            "TONE AND LANGUAGE - shouty category - left",                             # ok (case)
            "3. coverage and balance - lowercase category - right",                   # ok
            "[] - [] - []",                                                           # bad
            "Tone and Language - A - B - left",                                       # bad: leaning field "B - left"
            "Sources and Citations - cites think tanks - Right",                      # ok
            "Agenda and framing - frames as crisis - LEFT",                           # ok
            "tone&language - ampersand category - left",                              # ok (keywords)
        ]
    )
    lines, skipped = parse_tagged_lines(response)
    assert len(lines) == 12
    assert skipped == 7
    non_blank = sum(1 for raw in response.splitlines() if raw.strip())
    assert len(lines) + skipped == non_blank


def test_overlong_text_truncated_to_word_limit():
    text = " ".join(f"w{i}" for i in range(40))
    lines, skipped = parse_tagged_lines(f"Tone and Language - {text} - left")
    assert skipped == 0
    assert len(lines[0].text.split()) == MAX_INDICATOR_WORDS
    assert lines[0].text.split()[-1] == f"w{MAX_INDICATOR_WORDS - 1}"


def test_parser_never_throws_on_random_junk(rng: np.random.Generator):
    alphabet = list("abc -[]{}\n\t0123.é中")
    for _ in range(200):
        length = int(rng.integers(0, 200))
        junk = "".join(rng.choice(alphabet) for _ in range(length))
        lines, skipped = parse_tagged_lines(junk)
        non_blank = sum(1 for raw in junk.splitlines() if raw.strip())
        assert len(lines) + skipped == non_blank


def test_category_fuzzy_matching():
    assert normalize_category("Framing") is Category.AGENDA_AND_FRAMING
    assert normalize_category("  sources & citations ") is Category.SOURCES_AND_CITATIONS
    assert normalize_category("Tone/Language") is Category.TONE_AND_LANGUAGE
    assert normalize_category("balance of coverage") is Category.COVERAGE_AND_BALANCE
    assert normalize_category("analogies") is Category.EXAMPLES_AND_ANALOGIES
    assert normalize_category("totally unrelated") is None
    assert normalize_category("") is None


def test_leaning_normalization():
    assert normalize_leaning("Left") is Leaning.LEFT
    assert normalize_leaning("RIGHT") is Leaning.RIGHT
    assert normalize_leaning("center") is Leaning.NEUTRAL
    assert normalize_leaning("Neutral") is Leaning.NEUTRAL
    assert normalize_leaning("sideways") is None
