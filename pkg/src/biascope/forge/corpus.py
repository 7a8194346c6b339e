"""Labeled article corpus for offline indicator generation.

Corpus file format: one JSON record per line, UTF-8, fields ``id``, ``body``,
``leaning``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from ..labels import Leaning, normalize_leaning


class CorpusError(Exception):
    pass


@dataclass(frozen=True)
class LabeledArticle:
    id: str
    body: str
    leaning: Leaning

    def __post_init__(self) -> None:
        if not self.body.strip():
            raise ValueError(f"article {self.id!r} has an empty body")


def load_corpus(path: Path | str) -> list[LabeledArticle]:
    """Load, validate, and return the corpus; any malformed line is fatal."""
    path = Path(path)
    articles: list[LabeledArticle] = []
    seen: set[str] = set()
    with path.open("r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                raw = json.loads(line)
                article_id = str(raw["id"])
                body = str(raw["body"])
                leaning = normalize_leaning(str(raw["leaning"]))
                if leaning is None:
                    raise ValueError(f"unknown leaning {raw['leaning']!r}")
                article = LabeledArticle(id=article_id, body=body, leaning=leaning)
            except (KeyError, ValueError, TypeError) as exc:
                raise CorpusError(f"{path}:{line_no}: {exc}") from exc
            if article.id in seen:
                raise CorpusError(f"{path}:{line_no}: duplicate article id {article.id!r}")
            seen.add(article.id)
            articles.append(article)
    if not articles:
        raise CorpusError(f"{path}: corpus is empty")
    return articles
