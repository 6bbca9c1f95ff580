from __future__ import annotations

import json

import pytest

from retrorank.corpus import load_corpus
from retrorank.ranker import SearchEngine
from retrorank.sentiment import default_lexicon
from retrorank.textprep import default_stopwords

TINY_CORPUS = "\n".join([
    "# two resolved threads and one unresolved one",
    json.dumps({
        "id": "bug-100", "title": "Crash when rotating text",
        "description": "Rotating text by 90 degrees crashes the editor.",
        "status": "resolved",
        "comments": [
            {"index": 0, "body": "I can reproduce the crash with any rotated label."},
            {"index": 1, "body": "The rotation matrix was wrong, patch attached."},
            {"index": 2, "body": "Verified, the rotate fix works perfectly now.",
             "author": "dev1", "timestamp": "2011-03-02T10:00:00Z"},
        ],
    }),
    json.dumps({
        "id": "bug-200", "title": "Footnote anchors misplaced",
        "description": "Footnote anchors drift after reflow.",
        "status": "resolved",
        "comments": [
            {"index": 0, "body": "Anchors drift whenever the footnote frame grows."},
            {"index": 1, "body": "Confirmed fixed after the anchor layout change."},
        ],
    }),
    json.dumps({
        "id": "bug-300", "title": "Autosave still racy",
        "description": "Autosave sometimes loses the recovery file.",
        "status": "unresolved",
        "comments": [
            {"index": 0, "body": "Still happens in the latest build, autosave fails."},
        ],
    }),
    "",
])


@pytest.fixture(scope="session")
def tiny_corpus_text() -> str:
    return TINY_CORPUS


@pytest.fixture()
def tiny_corpus_path(tmp_path, tiny_corpus_text):
    path = tmp_path / "corpus.jsonl"
    path.write_text(tiny_corpus_text, encoding="utf-8")
    return path


@pytest.fixture()
def tiny_corpus(tiny_corpus_path):
    return load_corpus(tiny_corpus_path)


@pytest.fixture(scope="session")
def lexicon():
    return default_lexicon()


@pytest.fixture(scope="session")
def stopwords():
    return default_stopwords()


@pytest.fixture()
def tiny_engine(tiny_corpus, lexicon):
    return SearchEngine(tiny_corpus, lexicon)
