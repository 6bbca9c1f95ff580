"""Acceptance suite: one test per release criterion, at pinned tolerances.

Run with `pytest tests/test_acceptance.py -v -s` to see one PASS line per
criterion. Timing-bounded criteria assert their own wall-clock budget.
"""

from __future__ import annotations

import json
import math
import random
import time

import pytest
from fastapi.testclient import TestClient

from retrorank import synthetic
from retrorank.cli import main as cli_main
from retrorank.corpus import save_corpus
from retrorank.evalstats import (REJECT, ZeroVarianceError, paired_t_test,
                                 report_dict, run_eval, t_cdf, t_critical)
from retrorank.ranker import SearchEngine, preset
from retrorank.sentiment import OpinionLexicon, default_lexicon, sa_score
from retrorank.service import create_app
from retrorank.textprep import TokenizedDoc, tokenize
from retrorank.textrank import build_cooc_graph, textrank
from retrorank.vsm import build_index, vsm_score


def _ok(name: str) -> None:
    print(f"ACCEPTANCE PASS: {name}")


def doc(ref, terms):
    return TokenizedDoc(doc_ref=ref, surface_tokens=tuple(terms), terms=tuple(terms))


@pytest.fixture(scope="module")
def synth_bundle():
    corpus, goldset = synthetic.generate(seed=7)
    engine = SearchEngine(corpus, default_lexicon())
    return corpus, goldset, engine


def test_t_distribution_anchor():
    start = time.perf_counter()
    crit = t_critical(24, 0.05)
    assert 2.0628 <= crit <= 2.0648, "t_critical(24, 0.05) must bracket 2.0638"
    closed_form = 0.5 * (1 + math.sqrt(3) / math.sqrt(5))
    assert t_cdf(math.sqrt(3), 2) == pytest.approx(closed_form, abs=1e-4)
    for df in (1, 2, 5, 10, 24, 100):
        for alpha in (0.01, 0.05, 0.10):
            assert t_cdf(t_critical(df, alpha), df) == pytest.approx(
                1 - alpha / 2, abs=1e-6)
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"t-distribution anchor took {elapsed:.2f}s"
    _ok("t-distribution anchor (t_crit 2.0638, nu=2 closed form, round-trips)")


def test_paired_t_test_oracle():
    result = paired_t_test([1, 2, 3], [2, 2, 5])
    assert result.t == pytest.approx(-1.7321, abs=1e-4)
    assert result.df == 2
    assert result.p_two_tailed == pytest.approx(0.2254, abs=1e-3)
    swapped = paired_t_test([2, 2, 5], [1, 2, 3])
    assert swapped.t == pytest.approx(-result.t, abs=1e-12)
    assert swapped.mean_diff == pytest.approx(-result.mean_diff)
    assert swapped.p_two_tailed == pytest.approx(result.p_two_tailed, abs=1e-12)
    with pytest.raises(ZeroVarianceError):
        paired_t_test([4, 7, 9], [4, 7, 9])
    _ok("paired t-test oracle (t=-1.7321, p=0.2254, antisymmetry, zero variance)")


def test_vsm_oracle():
    index = build_index([
        doc(("b", 1), ["fix", "crash"]),
        doc(("b", 2), ["fix"]),
        doc(("b", 3), ["render"]),
    ])
    results = vsm_score(doc("query", ["fix"]), index)
    assert [ref for ref, _ in results] == [("b", 2), ("b", 1)]
    assert results[0][1] == pytest.approx(1.000, abs=1e-9)
    assert results[1][1] == pytest.approx(0.605, abs=1e-3)

    rng = random.Random(20260809)
    vocab = [f"term{i}" for i in range(60)]
    docs = [
        doc(("bug", i), [rng.choice(vocab) for _ in range(rng.randint(1, 15))])
        for i in range(100)
    ]
    index = build_index(docs)
    for document in docs:
        shuffled = list(document.terms)
        rng.shuffle(shuffled)
        results = vsm_score(doc("query", shuffled), index)
        by_ref = dict(results)
        assert by_ref[document.doc_ref] == pytest.approx(1.0, abs=1e-9)
    _ok("VSM oracle (3-doc corpus scores, 100 self-query similarities)")


def test_textrank_oracle():
    start = time.perf_counter()
    lonely = textrank(build_cooc_graph([doc(("b", 0), ["solo"])]), damping=0.85)
    assert lonely.scores["solo"] == 1.0 - 0.85

    pair = textrank(build_cooc_graph([doc(("b", 0), ["a", "b"])]), damping=0.85)
    assert pair.scores["a"] == pytest.approx(1.0, abs=1e-4)
    assert pair.scores["b"] == pytest.approx(1.0, abs=1e-4)

    path = textrank(build_cooc_graph([doc(("b", 0), ["a", "b", "c", "d"])]),
                    damping=0.85)
    assert path.scores["a"] == pytest.approx(0.7018, abs=1e-3)
    assert path.scores["b"] == pytest.approx(1.2982, abs=1e-3)
    assert path.scores["c"] == pytest.approx(1.2982, abs=1e-3)
    assert path.scores["d"] == pytest.approx(0.7018, abs=1e-3)

    rng = random.Random(31337)
    for _ in range(50):
        n_nodes = rng.randint(1, 100)
        vocab = [f"n{i}" for i in range(n_nodes)]
        docs = [
            doc(("b", i), [rng.choice(vocab) for _ in range(rng.randint(1, 40))])
            for i in range(rng.randint(1, 8))
        ]
        scores = textrank(build_cooc_graph(docs, window=rng.choice([2, 3])),
                          damping=0.85, tolerance=1e-4, max_iterations=100)
        assert scores.converged, "random graph failed to converge in 100 iterations"
        assert scores.iterations_used <= 100
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0, f"TextRank oracle took {elapsed:.2f}s"
    _ok("TextRank oracle (isolated, pair, path closed form, 50 random graphs)")


def test_fusion_properties(synth_bundle):
    corpus, goldset, engine = synth_bundle
    rng = random.Random(11)
    queries = [entry.query_text for entry in goldset]

    for query_text in queries[:6]:
        vsm_results = vsm_score(tokenize(query_text, engine.stopwords), engine.index)
        expected = [ref for ref, _ in vsm_results[:50]]
        via_zero_weights = engine.rank(query_text,
                                       preset("vsm+sa+tr", weights=(1, 0, 0), k=50))
        assert [r.doc_ref for r in via_zero_weights] == expected
        via_preset = engine.rank(query_text, preset("vsm", k=50))
        assert [r.doc_ref for r in via_preset] == expected

    for query_text in queries:
        scale = rng.uniform(0.2, 5.0)
        base = engine.rank(query_text, preset("vsm+sa+tr", weights=(1, 1, 1), k=50))
        scaled = engine.rank(query_text,
                             preset("vsm+sa+tr", weights=(scale, scale, scale), k=50))
        assert [r.doc_ref for r in base] == [r.doc_ref for r in scaled]
        assert all(0.0 <= r.combined <= 1.0 + 1e-12 for r in base)
        k10 = engine.rank(query_text, preset("vsm+sa+tr", k=10))
        k5 = engine.rank(query_text, preset("vsm+sa+tr", k=5))
        assert k5 == k10[:5]
    _ok("fusion properties (VSM permutation, rescale invariance, bounds, k-prefix)")


def test_sentiment_properties():
    lexicon = default_lexicon()
    swapped = OpinionLexicon(positive=lexicon.negative, negative=lexicon.positive)
    rng = random.Random(97)
    pool = (sorted(lexicon.positive)[:10] + sorted(lexicon.negative)[:10]
            + ["rotate", "chart", "the", "build", "line"])
    for _ in range(300):
        tokens = [rng.choice(pool) for _ in range(rng.randint(0, 30))]
        document = TokenizedDoc(doc_ref="query", surface_tokens=tuple(tokens),
                                terms=tuple(tokens))
        score = sa_score(document, lexicon)
        assert -1.0 <= score.raw <= 1.0
        assert sa_score(document, swapped).raw == pytest.approx(-score.raw)

    all_pos = doc("query", ["works", "perfectly"])
    assert sa_score(all_pos, lexicon).raw == 1.0
    assert sa_score(doc("query", []), lexicon).raw == 0.0
    mixed = doc("query", ["great", "fix", "fails"])
    assert sa_score(mixed, lexicon).raw == 0.0
    _ok("sentiment properties (bounds, lexicon swap, worked examples)")


def test_direction_of_effect_end_to_end(synth_bundle):
    start = time.perf_counter()
    corpus, goldset, engine = synth_bundle
    lexicon = default_lexicon()

    total_comments = sum(len(bug.comments) for bug in corpus.bugs.values())
    assert total_comments >= 200
    assert len(goldset) == 10
    stopwords = engine.stopwords
    for entry in goldset:
        (bug_id, index), = entry.gold_refs
        bug = corpus.bugs[bug_id]
        assert bug.status == "resolved"
        body_tokens = set(tokenize(bug.comments[index].body, frozenset()).surface_tokens)
        query_tokens = set(tokenize(entry.query_text, frozenset()).surface_tokens)
        assert query_tokens <= body_tokens, "gold comment must contain the query terms"
        assert len(body_tokens & lexicon.positive) >= 2, \
            "gold comment must contain at least two bonus words"

    configs = [preset(name) for name in ("vsm", "vsm+sa", "vsm+tr", "vsm+sa+tr")]
    report = run_eval(corpus, lexicon, goldset, configs,
                      stopwords=stopwords, engine=engine)
    mu = {run.config_name: run.mu for run in report.runs}
    assert mu["vsm+sa+tr"] <= mu["vsm+sa"] <= mu["vsm"]
    assert mu["vsm+tr"] <= mu["vsm"]
    assert mu["vsm+sa+tr"] < mu["vsm"]
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"end-to-end run took {elapsed:.2f}s"
    _ok(f"direction of effect (mu: vsm={mu['vsm']:.2f} >= vsm+sa={mu['vsm+sa']:.2f} "
        f">= vsm+sa+tr={mu['vsm+sa+tr']:.2f}; vsm+tr={mu['vsm+tr']:.2f})")


def test_evaluation_plumbing(synth_bundle):
    corpus, goldset, engine = synth_bundle
    configs = [preset(name) for name in ("vsm", "vsm+sa", "vsm+tr", "vsm+sa+tr")]
    report = run_eval(corpus, default_lexicon(), goldset, configs, engine=engine)
    payload = report_dict(report)
    assert len(payload["pairs"]) == 6
    required_columns = {"n", "mu_a", "mu_b", "p", "t", "t_crit", "decision"}
    for row in payload["pairs"]:
        assert required_columns <= set(row)
        consistent = (row["decision"] == REJECT) \
            == (abs(row["t"]) > row["t_crit"]) \
            == (row["p"] < payload["alpha"])
        assert consistent, f"inconsistent decision row: {row}"
    _ok("evaluation plumbing (full column set, decision consistency on every row)")


def test_interface_parity(synth_bundle, tmp_path, capsys):
    corpus, goldset, engine = synth_bundle
    corpus_path = tmp_path / "corpus.jsonl"
    save_corpus(corpus, corpus_path)
    client = TestClient(create_app(engine))

    rng = random.Random(2718)
    topic_words = [w for entry in goldset for w in entry.query_text.split()]
    extras = ["renderer", "canvas", "works", "build", "zzz-unknown"]
    checked = 0
    for _ in range(20):
        n_words = rng.randint(1, 4)
        words = [rng.choice(topic_words + extras) for _ in range(n_words)]
        query_text = " ".join(words)
        config = rng.choice(["vsm", "vsm+sa", "vsm+tr", "vsm+sa+tr"])
        k = rng.randint(1, 12)

        rc = cli_main(["query", "--corpus", str(corpus_path), "--q", query_text,
                       "--config", config, "--k", str(k), "--format", "machine"])
        assert rc == 0
        cli_records = [json.loads(line)
                       for line in capsys.readouterr().out.splitlines() if line.strip()]
        api = client.get("/api/query",
                         params={"q": query_text, "config": config, "k": k})
        assert api.status_code == 200
        assert cli_records == api.json()["results"], \
            f"CLI/API divergence for {query_text!r} ({config}, k={k})"
        checked += 1
    assert checked == 20
    _ok("interface parity (20 randomized queries, CLI machine == API results)")
