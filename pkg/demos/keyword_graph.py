"""Show the term co-occurrence graph and its fixed-point keyword scores.

Run with: python demos/keyword_graph.py
"""

from retrorank.textprep import default_stopwords, tokenize
from retrorank.textrank import build_cooc_graph, dump_graph, textrank, tr_score

stopwords = default_stopwords()

comments = [
    "The rotation matrix was wrong for vertical labels, patch attached.",
    "Verified, the rotation fix works perfectly for axis labels now.",
    "Rotation still broken for chart labels on my build.",
    "The axis renderer recomputes label rotation after the fix.",
]

docs = [tokenize(text, stopwords, doc_ref=("demo", i))
        for i, text in enumerate(comments)]

graph = build_cooc_graph(docs, window=2)
print(f"graph: {len(graph.nodes)} terms, {len(graph.edges)} edges")
print(dump_graph(graph))
print()

scores = textrank(graph, damping=0.85, tolerance=1e-4)
print(f"converged after {scores.iterations_used} iterations\n")
print("keyword importance (descending):")
for term, value in sorted(scores.scores.items(), key=lambda kv: -kv[1]):
    print(f"  {term:10s} {value:.3f}")

# Aggregating back to comments: the mean score over each comment's distinct
# terms, which is what the ranker fuses as the semantic-relevance component.
print("\nper-comment semantic relevance:")
for doc, text in zip(docs, comments):
    print(f"  {tr_score(doc, scores):.3f}  {text}")
