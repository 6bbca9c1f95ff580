"""Tokenization: surface tokens for lexicon lookup, stemmed terms for indexing.

Tokens are maximal runs of letters/digits; everything else separates. Surface
tokens are lowercase and keep stopwords (opinion lexicons list surface forms);
index terms are stopword-filtered first, then Porter-stemmed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import porter

# letters and digits, excluding underscore
_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)

#: doc_ref marker for ad-hoc query text
QUERY_REF = "query"

DocRef = tuple[str, int]


@dataclass(frozen=True)
class TokenizedDoc:
    doc_ref: DocRef | str
    surface_tokens: tuple[str, ...]
    terms: tuple[str, ...]


def tokenize(text: str, stopwords: frozenset[str] | set[str] = frozenset(),
             doc_ref: DocRef | str = QUERY_REF) -> TokenizedDoc:
    """Split text into lowercase surface tokens and stemmed index terms.

    Stopwords are removed before stemming; surface tokens are untouched.
    Deterministic; empty text yields empty sequences.
    """
    surface = tuple(match.group(0) for match in _TOKEN_RE.finditer(text.lower()))
    terms = tuple(porter.stem(token) for token in surface if token not in stopwords)
    return TokenizedDoc(doc_ref=doc_ref, surface_tokens=surface, terms=terms)


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Read a stopword file: one word per line, '#' comment lines ignored."""
    words = set()
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            word = line.strip()
            if word and not word.startswith("#"):
                words.add(word.lower())
    return frozenset(words)


def default_stopwords() -> frozenset[str]:
    """The ~130-word English function-word list shipped with the package."""
    text = resources.files("retrorank.data").joinpath("stopwords.txt").read_text("utf-8")
    return frozenset(
        line.strip().lower()
        for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    )
