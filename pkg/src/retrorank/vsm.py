"""tf-idf inverted index over candidate comments, scored by cosine similarity.

Weighting: tf = 1 + ln(f) for f >= 1, idf = ln((N + 1) / (df + 1)) + 1. The
smoothed idf is strictly positive, so every indexed term contributes weight.
Query terms absent from the index are dropped from the query vector entirely,
which makes them contribute exactly zero to every score.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .textprep import DocRef, TokenizedDoc

INDEX_MAGIC = "retrorank.index"
INDEX_VERSION = 1


class DuplicateDocRefError(ValueError):
    pass


class EmptyQueryError(ValueError):
    """Query reduced to zero terms after preprocessing."""


class IndexFormatError(ValueError):
    """Persisted index file is missing the magic header or has a bad version."""


@dataclass
class InvertedIndex:
    doc_count: int
    doc_freq: dict[str, int]
    postings: dict[str, list[tuple[DocRef, int]]]
    doc_norms: dict[DocRef, float]


def tf_weight(frequency: int) -> float:
    return 1.0 + math.log(frequency) if frequency >= 1 else 0.0


def idf_weight(doc_freq: int, doc_count: int) -> float:
    return math.log((doc_count + 1) / (doc_freq + 1)) + 1.0


def build_index(docs: Iterable[TokenizedDoc]) -> InvertedIndex:
    """Build the inverted index; doc_refs must be unique."""
    term_counts: dict[DocRef, Counter] = {}
    for doc in docs:
        if doc.doc_ref in term_counts:
            raise DuplicateDocRefError(f"duplicate doc_ref {doc.doc_ref!r}")
        term_counts[doc.doc_ref] = Counter(doc.terms)

    doc_count = len(term_counts)
    postings: dict[str, list[tuple[DocRef, int]]] = {}
    for doc_ref, counts in term_counts.items():
        for term, freq in counts.items():
            postings.setdefault(term, []).append((doc_ref, freq))
    doc_freq = {term: len(entries) for term, entries in postings.items()}

    doc_norms: dict[DocRef, float] = {}
    for doc_ref, counts in term_counts.items():
        squared = sum(
            (tf_weight(freq) * idf_weight(doc_freq[term], doc_count)) ** 2
            for term, freq in counts.items()
        )
        doc_norms[doc_ref] = math.sqrt(squared)
    return InvertedIndex(doc_count=doc_count, doc_freq=doc_freq,
                         postings=postings, doc_norms=doc_norms)


def vsm_score(query: TokenizedDoc, index: InvertedIndex) -> list[tuple[DocRef, float]]:
    """Cosine scores against the query, sorted descending.

    Documents sharing no query term are omitted; ties are broken by ascending
    (bug id, comment index). Raises EmptyQueryError for a query with no terms.
    """
    if not query.terms:
        raise EmptyQueryError("query has no terms after preprocessing")

    query_weights: dict[str, float] = {}
    for term, freq in Counter(query.terms).items():
        df = index.doc_freq.get(term, 0)
        if df == 0:
            continue
        query_weights[term] = tf_weight(freq) * idf_weight(df, index.doc_count)
    if not query_weights:
        return []
    query_norm = math.sqrt(sum(w * w for w in query_weights.values()))

    dots: dict[DocRef, float] = {}
    for term, q_weight in query_weights.items():
        idf = idf_weight(index.doc_freq[term], index.doc_count)
        for doc_ref, freq in index.postings[term]:
            dots[doc_ref] = dots.get(doc_ref, 0.0) + q_weight * tf_weight(freq) * idf
    scored = [
        (doc_ref, dot / (query_norm * index.doc_norms[doc_ref]))
        for doc_ref, dot in dots.items()
    ]
    scored.sort(key=lambda item: (-item[1], item[0]))
    return scored


def save_index(index: InvertedIndex, path: str | Path) -> None:
    """Persist the index as a self-describing JSON dump."""
    payload = {
        "magic": INDEX_MAGIC,
        "version": INDEX_VERSION,
        "doc_count": index.doc_count,
        "doc_freq": index.doc_freq,
        "postings": {
            term: [[ref[0], ref[1], freq] for ref, freq in entries]
            for term, entries in index.postings.items()
        },
        "doc_norms": [[ref[0], ref[1], norm] for ref, norm in index.doc_norms.items()],
    }
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, ensure_ascii=False)


def load_index(path: str | Path) -> InvertedIndex:
    with open(path, encoding="utf-8") as handle:
        payload = json.load(handle)
    if not isinstance(payload, dict) or payload.get("magic") != INDEX_MAGIC:
        raise IndexFormatError(f"{path}: not a retrorank index file")
    if payload.get("version") != INDEX_VERSION:
        raise IndexFormatError(
            f"{path}: unsupported index version {payload.get('version')!r}"
        )
    postings = {
        term: [((bug_id, idx), freq) for bug_id, idx, freq in entries]
        for term, entries in payload["postings"].items()
    }
    doc_norms = {(bug_id, idx): norm for bug_id, idx, norm in payload["doc_norms"]}
    return InvertedIndex(doc_count=payload["doc_count"], doc_freq=payload["doc_freq"],
                         postings=postings, doc_norms=doc_norms)
