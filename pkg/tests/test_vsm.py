from __future__ import annotations

import math
import random

import pytest

from retrorank.textprep import TokenizedDoc
from retrorank.vsm import (DuplicateDocRefError, EmptyQueryError, IndexFormatError,
                           build_index, idf_weight, load_index, save_index,
                           tf_weight, vsm_score)


def doc(ref, terms):
    return TokenizedDoc(doc_ref=ref, surface_tokens=tuple(terms), terms=tuple(terms))


def query(terms):
    return doc("query", terms)


@pytest.fixture()
def three_doc_index():
    return build_index([
        doc(("b", 1), ["fix", "crash"]),
        doc(("b", 2), ["fix"]),
        doc(("b", 3), ["render"]),
    ])


def test_build_index_counts(three_doc_index):
    index = three_doc_index
    assert index.doc_count == 3
    assert index.doc_freq == {"fix": 2, "crash": 1, "render": 1}
    for term, df in index.doc_freq.items():
        assert len(index.postings[term]) == df
        assert 1 <= df <= index.doc_count
    assert all(norm > 0 for norm in index.doc_norms.values())


def test_build_index_empty():
    index = build_index([])
    assert index.doc_count == 0
    assert index.doc_freq == {}
    assert index.postings == {}


def test_build_index_duplicate_ref():
    with pytest.raises(DuplicateDocRefError):
        build_index([doc(("b", 1), ["x"]), doc(("b", 1), ["y"])])


def test_vsm_score_hand_oracle(three_doc_index):
    # closed form with tf = 1 + ln f and idf = ln((N+1)/(df+1)) + 1:
    # d2 is the query itself; d1 mixes in one off-query term; d3 is disjoint
    results = vsm_score(query(["fix"]), three_doc_index)
    idf_fix = math.log(4 / 3) + 1
    idf_crash = math.log(4 / 2) + 1
    expected_d1 = idf_fix / math.hypot(idf_fix, idf_crash)
    assert [ref for ref, _ in results] == [("b", 2), ("b", 1)]
    assert results[0][1] == pytest.approx(1.0, abs=1e-9)
    assert results[1][1] == pytest.approx(expected_d1, abs=1e-9)
    assert results[1][1] == pytest.approx(0.605, abs=1e-3)


def test_self_query_scores_one(three_doc_index):
    results = vsm_score(query(["fix", "crash"]), three_doc_index)
    assert results[0][0] == ("b", 1)
    assert results[0][1] == pytest.approx(1.0, abs=1e-9)


def test_empty_query_rejected(three_doc_index):
    with pytest.raises(EmptyQueryError):
        vsm_score(query([]), three_doc_index)


def test_out_of_vocabulary_query(three_doc_index):
    assert vsm_score(query(["zzz"]), three_doc_index) == []


def test_unknown_query_terms_contribute_zero(three_doc_index):
    with_oov = vsm_score(query(["fix", "zzz"]), three_doc_index)
    without = vsm_score(query(["fix"]), three_doc_index)
    assert with_oov == without


def test_term_order_independence():
    rng = random.Random(13)
    terms = ["alpha", "beta", "gamma", "beta", "delta"]
    base_docs = [doc(("b", i), terms[i:] + terms[:i]) for i in range(3)]
    index = build_index(base_docs)
    q1 = query(["beta", "alpha"])
    q2 = query(["alpha", "beta"])
    r1 = vsm_score(q1, index)
    r2 = vsm_score(q2, index)
    assert [(ref, pytest.approx(s, abs=1e-12)) for ref, s in r1] == r2
    shuffled = list(terms)
    rng.shuffle(shuffled)
    index2 = build_index([doc(("b", 0), shuffled)] + base_docs[1:])
    assert [s for _, s in vsm_score(q1, index2)] == pytest.approx(
        [s for _, s in r1], abs=1e-12)


def test_ties_break_by_doc_ref():
    index = build_index([
        doc(("z", 5), ["fix"]),
        doc(("a", 9), ["fix"]),
        doc(("a", 2), ["fix"]),
    ])
    results = vsm_score(query(["fix"]), index)
    assert [ref for ref, _ in results] == [("a", 2), ("a", 9), ("z", 5)]


def test_scores_bounded_on_random_corpus():
    rng = random.Random(99)
    vocab = [f"w{i}" for i in range(30)]
    docs = [
        doc(("b", i), [rng.choice(vocab) for _ in range(rng.randint(1, 12))])
        for i in range(40)
    ]
    index = build_index(docs)
    for _ in range(20):
        q = query([rng.choice(vocab) for _ in range(rng.randint(1, 5))])
        for _, score in vsm_score(q, index):
            assert 0.0 < score <= 1.0 + 1e-12


def test_index_round_trip(tmp_path, three_doc_index):
    path = tmp_path / "index.json"
    save_index(three_doc_index, path)
    loaded = load_index(path)
    assert loaded.doc_count == three_doc_index.doc_count
    assert loaded.doc_freq == three_doc_index.doc_freq
    assert loaded.postings == three_doc_index.postings
    assert loaded.doc_norms == three_doc_index.doc_norms
    assert vsm_score(query(["fix"]), loaded) == vsm_score(query(["fix"]), three_doc_index)


def test_index_magic_and_version_checked(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"magic": "something-else"}', encoding="utf-8")
    with pytest.raises(IndexFormatError):
        load_index(bad)
    versioned = tmp_path / "versioned.json"
    versioned.write_text('{"magic": "retrorank.index", "version": 99}', encoding="utf-8")
    with pytest.raises(IndexFormatError, match="version"):
        load_index(versioned)


def test_weight_formulas():
    assert tf_weight(1) == 1.0
    assert tf_weight(math.e) == pytest.approx(2.0)
    assert idf_weight(1, 3) == pytest.approx(math.log(2) + 1)
    # smoothed idf stays strictly positive even for ubiquitous terms
    assert idf_weight(1000, 1000) > 0
