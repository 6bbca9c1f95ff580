"""Term co-occurrence graph and the damped TextRank fixed-point iteration.

Node scores follow the weighted recurrence

    WS(v_i) = (1 - d) + d * sum_{v_j in adj(v_i)} w_ji / sum_{v_k in adj(v_j)} w_jk * WS(v_j)

iterated synchronously (Jacobi sweeps) from a uniform initial value of 1.0,
so results do not depend on node iteration order. Isolated nodes settle at
exactly 1 - d.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .textprep import TokenizedDoc


@dataclass
class CoocGraph:
    """Undirected term graph; edge weights count co-occurrences (no self-loops)."""

    nodes: set[str]
    edges: dict[tuple[str, str], int]
    adjacency: dict[str, list[tuple[str, int]]]


@dataclass
class KeywordScores:
    scores: dict[str, float]
    damping: float
    iterations_used: int
    converged: bool


def build_cooc_graph(docs: Iterable[TokenizedDoc], window: int = 2) -> CoocGraph:
    """Count pairs of distinct terms within `window` positions of each other.

    window=2 links adjacent terms only. Weights accumulate across all docs.
    """
    if window < 2:
        raise ValueError(f"window must be >= 2, got {window}")
    nodes: set[str] = set()
    edges: dict[tuple[str, str], int] = {}
    for doc in docs:
        terms = doc.terms
        nodes.update(terms)
        for i, term in enumerate(terms):
            for j in range(i + 1, min(i + window, len(terms))):
                other = terms[j]
                if other == term:
                    continue
                key = (term, other) if term < other else (other, term)
                edges[key] = edges.get(key, 0) + 1
    adjacency: dict[str, list[tuple[str, int]]] = {node: [] for node in nodes}
    for (a, b), weight in edges.items():
        adjacency[a].append((b, weight))
        adjacency[b].append((a, weight))
    return CoocGraph(nodes=nodes, edges=edges, adjacency=adjacency)


def textrank(graph: CoocGraph, damping: float = 0.85, tolerance: float = 1e-4,
             max_iterations: int = 100) -> KeywordScores:
    """Iterate the recurrence until the max per-node change drops below tolerance."""
    if not 0.0 < damping < 1.0:
        raise ValueError(f"damping must be in (0, 1), got {damping}")
    if tolerance <= 0.0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")

    if not graph.nodes:
        return KeywordScores(scores={}, damping=damping, iterations_used=0, converged=True)

    strength = {
        node: float(sum(weight for _, weight in neighbors))
        for node, neighbors in graph.adjacency.items()
    }
    scores = {node: 1.0 for node in graph.nodes}
    base = 1.0 - damping
    iterations_used = 0
    converged = False
    for _ in range(max_iterations):
        updated = {}
        delta = 0.0
        for node in graph.nodes:
            rank = sum(
                weight / strength[neighbor] * scores[neighbor]
                for neighbor, weight in graph.adjacency[node]
            )
            value = base + damping * rank
            updated[node] = value
            delta = max(delta, abs(value - scores[node]))
        scores = updated
        iterations_used += 1
        if delta < tolerance:
            converged = True
            break
    return KeywordScores(scores=scores, damping=damping,
                         iterations_used=iterations_used, converged=converged)


def tr_score(doc: TokenizedDoc, keyword_scores: KeywordScores) -> float:
    """Mean keyword score over the doc's distinct scored terms; 0.0 if none.

    The mean (rather than the sum) keeps long comments from winning on length.
    """
    scored = [keyword_scores.scores[t] for t in set(doc.terms) if t in keyword_scores.scores]
    if not scored:
        return 0.0
    return sum(scored) / len(scored)


def dump_graph(graph: CoocGraph) -> str:
    """Debug rendering: one `termA termB weight` line per edge, sorted."""
    lines = [f"{a} {b} {weight}" for (a, b), weight in sorted(graph.edges.items())]
    return "\n".join(lines)
