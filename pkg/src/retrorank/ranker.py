"""Fusion of VSM, sentiment, and TextRank scores into the final ranked list.

Pipeline per query: tokenize, score resolved comments with the VSM, keep the
top-M candidates, compute the enabled re-ranking scores over that pool,
min-max normalize each enabled component, and combine with the renormalized
weights. Ties always break by ascending (bug id, comment index).
"""

from __future__ import annotations

import dataclasses
import time
from dataclasses import dataclass

from .corpus import Corpus, resolved_comments
from .sentiment import OpinionLexicon, sa_score
from .textprep import DocRef, TokenizedDoc, default_stopwords, tokenize
from .textrank import build_cooc_graph, textrank, tr_score
from .vsm import InvertedIndex, build_index, vsm_score

#: Named pipeline configurations: which re-ranking stages run on top of the VSM.
PRESETS: dict[str, tuple[bool, bool]] = {
    "vsm": (False, False),
    "vsm+sa": (True, False),
    "vsm+tr": (False, True),
    "vsm+sa+tr": (True, True),
}


class UnknownPresetError(ValueError):
    def __init__(self, name: str):
        valid = ", ".join(sorted(PRESETS))
        super().__init__(f"unknown preset {name!r} (valid presets: {valid})")
        self.preset = name


class MissingLexiconError(ValueError):
    """Sentiment stage enabled but no lexicon supplied."""


@dataclass(frozen=True)
class PipelineConfig:
    """Stage toggles, fusion weights, candidate cutoff, and result count.

    Weights of disabled components are treated as 0; the enabled weights are
    renormalized to sum to 1 before fusion. Defaults give equal weight to
    every enabled component.
    """

    name: str = "custom"
    enable_sa: bool = True
    enable_tr: bool = True
    w_vsm: float = 1.0
    w_sa: float = 1.0
    w_tr: float = 1.0
    top_m: int = 50
    k: int = 10

    def __post_init__(self):
        if min(self.w_vsm, self.w_sa, self.w_tr) < 0:
            raise ValueError("fusion weights must be non-negative")
        if sum(self.effective_weights()) <= 0:
            raise ValueError("enabled fusion weights must not all be zero")
        if self.top_m < 1:
            raise ValueError(f"top_m must be >= 1, got {self.top_m}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")

    def effective_weights(self) -> tuple[float, float, float]:
        """(w_vsm, w_sa, w_tr) with disabled components zeroed, unnormalized."""
        return (
            self.w_vsm,
            self.w_sa if self.enable_sa else 0.0,
            self.w_tr if self.enable_tr else 0.0,
        )

    def fusion_weights(self) -> tuple[float, float, float]:
        """Effective weights renormalized to sum to 1."""
        raw = self.effective_weights()
        total = sum(raw)
        return (raw[0] / total, raw[1] / total, raw[2] / total)


def preset(name: str, weights: tuple[float, float, float] | None = None,
           top_m: int = 50, k: int = 10) -> PipelineConfig:
    """Build a PipelineConfig from a preset name, optionally overriding weights."""
    try:
        enable_sa, enable_tr = PRESETS[name]
    except KeyError:
        raise UnknownPresetError(name) from None
    w_vsm, w_sa, w_tr = weights if weights is not None else (1.0, 1.0, 1.0)
    return PipelineConfig(name=name, enable_sa=enable_sa, enable_tr=enable_tr,
                          w_vsm=w_vsm, w_sa=w_sa, w_tr=w_tr, top_m=top_m, k=k)


@dataclass(frozen=True)
class RankedComment:
    doc_ref: DocRef
    vsm_raw: float
    sa_raw: float
    tr_raw: float
    vsm_norm: float
    sa_norm: float
    tr_norm: float
    combined: float
    rank: int


def normalize_minmax(values: list[float]) -> list[float]:
    """(v - min) / (max - min) elementwise; a degenerate range maps to all 0.5."""
    if not values:
        return []
    lo, hi = min(values), max(values)
    if hi == lo:
        return [0.5] * len(values)
    span = hi - lo
    return [(v - lo) / span for v in values]


class SearchEngine:
    """Immutable retrieval state: tokenized resolved comments plus their index.

    Build once, query concurrently; rank() is pure with respect to engine state.
    """

    def __init__(self, corpus: Corpus, lexicon: OpinionLexicon | None = None,
                 stopwords: frozenset[str] | None = None,
                 index: InvertedIndex | None = None):
        self.corpus = corpus
        self.lexicon = lexicon
        self.stopwords = default_stopwords() if stopwords is None else stopwords
        self.docs: dict[DocRef, TokenizedDoc] = {}
        for bug_id, idx, body in resolved_comments(corpus):
            ref = (bug_id, idx)
            self.docs[ref] = tokenize(body, self.stopwords, doc_ref=ref)
        self.index = build_index(self.docs.values()) if index is None else index

    def rank(self, query_text: str, config: PipelineConfig,
             window: int = 2, damping: float = 0.85) -> list[RankedComment]:
        """Run the full pipeline for one query; returns at most config.k results."""
        if config.enable_sa and self.lexicon is None:
            raise MissingLexiconError("config enables the sentiment stage but no lexicon is loaded")
        query = tokenize(query_text, self.stopwords)
        candidates = vsm_score(query, self.index)[: config.top_m]
        if not candidates:
            return []
        refs = [ref for ref, _ in candidates]
        vsm_raws = [score for _, score in candidates]

        if config.enable_sa:
            sa_raws = [sa_score(self.docs[ref], self.lexicon).raw for ref in refs]
        else:
            sa_raws = [0.0] * len(refs)

        if config.enable_tr:
            graph_docs = [self.docs[ref] for ref in refs] + [query]
            keyword_scores = textrank(build_cooc_graph(graph_docs, window=window),
                                      damping=damping)
            tr_raws = [tr_score(self.docs[ref], keyword_scores) for ref in refs]
        else:
            tr_raws = [0.0] * len(refs)

        vsm_norms = normalize_minmax(vsm_raws)
        sa_norms = normalize_minmax(sa_raws) if config.enable_sa else [0.0] * len(refs)
        tr_norms = normalize_minmax(tr_raws) if config.enable_tr else [0.0] * len(refs)

        f_vsm, f_sa, f_tr = config.fusion_weights()
        fused = []
        for i, ref in enumerate(refs):
            combined = f_vsm * vsm_norms[i] + f_sa * sa_norms[i] + f_tr * tr_norms[i]
            fused.append((ref, vsm_raws[i], sa_raws[i], tr_raws[i],
                          vsm_norms[i], sa_norms[i], tr_norms[i], combined))
        fused.sort(key=lambda row: (-row[7], row[0]))
        return [
            RankedComment(doc_ref=row[0], vsm_raw=row[1], sa_raw=row[2], tr_raw=row[3],
                          vsm_norm=row[4], sa_norm=row[5], tr_norm=row[6],
                          combined=row[7], rank=position)
            for position, row in enumerate(fused[: config.k], 1)
        ]

    def query_response(self, query_text: str, config: PipelineConfig,
                       excerpt_chars: int = 240) -> dict:
        """Rank and project results for the CLI machine format and the HTTP API.

        Both surfaces emit these records verbatim, which keeps them
        field-for-field identical.
        """
        start = time.perf_counter()
        ranked = self.rank(query_text, config)
        elapsed_ms = (time.perf_counter() - start) * 1000.0
        results = []
        for item in ranked:
            bug_id, comment_index = item.doc_ref
            bug = self.corpus.bugs[bug_id]
            body = bug.comments[comment_index].body
            excerpt = body if len(body) <= excerpt_chars else body[:excerpt_chars] + "..."
            results.append({
                "bug_id": bug_id,
                "comment_index": comment_index,
                "title": bug.title,
                "excerpt": excerpt,
                "vsm_raw": item.vsm_raw,
                "sa_raw": item.sa_raw,
                "tr_raw": item.tr_raw,
                "vsm_norm": item.vsm_norm,
                "sa_norm": item.sa_norm,
                "tr_norm": item.tr_norm,
                "combined": item.combined,
                "rank": item.rank,
            })
        return {
            "results": results,
            "timing_ms": round(elapsed_ms, 3),
            "config": {
                "name": config.name,
                "enable_sa": config.enable_sa,
                "enable_tr": config.enable_tr,
                "weights": list(config.fusion_weights()),
                "top_m": config.top_m,
                "k": config.k,
            },
        }


def rank(query_text: str, corpus: Corpus, lexicon: OpinionLexicon | None,
         config: PipelineConfig, stopwords: frozenset[str] | None = None) -> list[RankedComment]:
    """One-shot ranking; builds a throwaway engine. Prefer SearchEngine for reuse."""
    return SearchEngine(corpus, lexicon, stopwords).rank(query_text, config)


def replace_config(config: PipelineConfig, **changes) -> PipelineConfig:
    return dataclasses.replace(config, **changes)
