"""Positivity scoring of comments against a bonus/penalty opinion lexicon.

Matching is exact, case-insensitive, and over surface tokens: lexicon entries
are surface word forms, so stem-matching would create false hits. Negation
("not great") is intentionally not handled.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .textprep import TokenizedDoc


class LexiconError(Exception):
    """Unreadable lexicon file or a word listed as both bonus and penalty."""


@dataclass(frozen=True)
class OpinionLexicon:
    positive: frozenset[str]
    negative: frozenset[str]


@dataclass(frozen=True)
class SentimentScore:
    raw: float
    positive_hits: int
    negative_hits: int


def _read_word_file(path: str | Path) -> frozenset[str]:
    words = set()
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            word = line.strip()
            if not word or word.startswith((";", "#")):
                continue
            words.add(word.lower())
    return frozenset(words)


def load_lexicon(pos_path: str | Path, neg_path: str | Path) -> OpinionLexicon:
    """Load bonus and penalty word files; duplicate entries within a file collapse.

    Raises LexiconError if any word appears in both files.
    """
    try:
        positive = _read_word_file(pos_path)
        negative = _read_word_file(neg_path)
    except OSError as exc:
        raise LexiconError(f"cannot read lexicon file: {exc}") from exc
    conflicts = positive & negative
    if conflicts:
        listing = ", ".join(sorted(conflicts))
        raise LexiconError(f"words in both bonus and penalty lists: {listing}")
    return OpinionLexicon(positive=positive, negative=negative)


def default_lexicon() -> OpinionLexicon:
    """The small curated lexicon shipped with the package."""
    data = resources.files("retrorank.data")
    positive = frozenset(
        line.strip().lower()
        for line in data.joinpath("positive-words.txt").read_text("utf-8").splitlines()
        if line.strip() and not line.startswith((";", "#"))
    )
    negative = frozenset(
        line.strip().lower()
        for line in data.joinpath("negative-words.txt").read_text("utf-8").splitlines()
        if line.strip() and not line.startswith((";", "#"))
    )
    return OpinionLexicon(positive=positive, negative=negative)


def sa_score(doc: TokenizedDoc, lexicon: OpinionLexicon) -> SentimentScore:
    """(bonus hits - penalty hits) / max(1, token count); always in [-1, 1]."""
    positive_hits = sum(1 for token in doc.surface_tokens if token in lexicon.positive)
    negative_hits = sum(1 for token in doc.surface_tokens if token in lexicon.negative)
    raw = (positive_hits - negative_hits) / max(1, len(doc.surface_tokens))
    return SentimentScore(raw=raw, positive_hits=positive_hits, negative_hits=negative_hits)
