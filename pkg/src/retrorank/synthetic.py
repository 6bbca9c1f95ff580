"""Deterministic synthetic corpus + goldset for desk-scale evaluation runs.

Each topic yields one "new bug" query and a cluster of cross-cutting threads:
reporter comments restating the symptom with the query's own words (strong
keyword matches, negative language), neutral me-too comments, misleading
"works for me" comments (positive language without the fix), hub comments
tying the topic vocabulary together, and one concluding bug-fixing comment
written in positive language. The fixing comment is the goldset target:
keyword-heavy distractors outrank it under pure tf-idf, sentiment alone
confuses it with the "works for me" traffic, and the co-occurrence stage
separates the two because the gold comment's vocabulary (hubs, resolution
words echoed by the hub comments) sits in the dense part of the candidate
graph while distractor padding connects to nothing.
"""

from __future__ import annotations

import random

from .corpus import RESOLVED, UNRESOLVED, BugReport, Comment, Corpus
from .evalstats import GoldsetEntry

_TOPICS = [
    ("rotate", "label", "axis", "chart"),
    ("footnote", "anchor", "margin", "layout"),
    ("autosave", "recovery", "document", "interval"),
    ("toolbar", "icon", "theme", "scaling"),
    ("paragraph", "indent", "bullet", "spacing"),
    ("macro", "dialog", "recorder", "shortcut"),
    ("template", "heading", "outline", "numbering"),
    ("clipboard", "paste", "formatting", "table"),
    ("cursor", "selection", "scroll", "viewport"),
    ("printer", "landscape", "orientation", "page"),
]

_HUBS = [
    ("renderer", "canvas"),
    ("typesetter", "flow"),
    ("backup", "timer"),
    ("palette", "vector"),
    ("ruler", "tabstop"),
    ("binding", "listener"),
    ("gallery", "stylesheet"),
    ("buffer", "grid"),
    ("caret", "redraw"),
    ("spooler", "driver"),
]

# resolution words are shared between a topic's gold comment and its hub
# comments so their graph nodes stay dense; the "works for me" noise uses its
# own thin pool that echoes nowhere
_POSITIVE = ("works", "confirmed", "verified", "fixed")
_WFM_POSITIVE = ("fine", "good", "glad")
_NEGATIVE = ("crashes", "broken", "fails", "wrong", "stuck", "unusable", "regression")
_FILLER = (
    "build", "version", "window", "update", "report", "user", "file", "menu",
    "option", "setting", "screen", "mouse", "click", "patch", "branch",
    "release", "module", "widget", "font", "image", "panel", "tooltip",
    "plugin", "profile", "session", "folder", "export", "preview", "zoom",
    "installer", "locale", "keyboard", "monitor", "desktop", "notebook",
    "sidebar", "statusbar", "toolkit", "workspace", "archive",
)

# distractor padding: filler vocabulary is cheap under cosine (common
# corpus-wide, low idf) yet weakly connected inside a candidate pool's graph
_REPORTER_FILLER = (1, 2)
_NEUTRAL_FILLER = (3, 5)
_WFM_FILLER = (1, 2)


def _sentence(words: list[str]) -> str:
    return " ".join(words) + "."


def _gold_body(topic: tuple[str, ...], hubs: tuple[str, str],
               pos: tuple[str, str]) -> str:
    words = ["the", topic[0], topic[1], "and", topic[2], topic[3],
             "is", "now", pos[0], "and", pos[1], "after", "the", hubs[0], hubs[1]]
    return _sentence(words)


def _reporter_body(rng: random.Random, topic: tuple[str, ...],
                   filler: list[str], junk: list[str]) -> str:
    terms = rng.sample(topic, 3)
    neg = rng.sample(_NEGATIVE, rng.randint(1, 2))
    words = []
    for term in terms:
        words.extend([term] * rng.randint(1, 2))
    rng.shuffle(words)
    cut = rng.randint(1, len(words) - 1)
    return _sentence(
        ["the"] + words[:cut] + [neg[0], "again", "and", "again"]
        + words[cut:] + neg[1:] + ["on", "this"] + filler + ["with"] + junk
    )


def _neutral_body(rng: random.Random, topic: tuple[str, ...], filler: list[str]) -> str:
    # me-too noise restates a subset of the vocabulary, loudly: repetition
    # lifts its tf-idf score but not its distinct-term footprint; padding goes
    # at the tail so it only borders itself
    words = []
    for term in rng.sample(topic, 3):
        words.extend([term] * rng.randint(2, 3))
    rng.shuffle(words)
    return _sentence(words + ["same", "here", "on", "this"] + filler)


def _works_for_me_body(rng: random.Random, topic: tuple[str, ...], filler: list[str]) -> str:
    words = []
    for term in rng.sample(topic, 3):
        words.extend([term] * rng.randint(1, 2))
    rng.shuffle(words)
    pos = rng.sample(_WFM_POSITIVE, 3)
    return _sentence(
        ["the"] + words + ["for", "me", "on", "this"] + filler
        + ["all", pos[0], pos[1], pos[2]]
    )


def _support_body(rng: random.Random, topic: tuple[str, ...], hubs: tuple[str, str],
                  pos: str, flip: bool) -> str:
    terms = rng.sample(topic, 2)
    first, second = (hubs[1], hubs[0]) if flip else (hubs[0], hubs[1])
    return _sentence(["the", terms[0], first, pos, "for", "the", terms[1], second,
                      "on", rng.choice(_FILLER)])


def _offtopic_body(rng: random.Random) -> str:
    return _sentence(rng.sample(_FILLER, 5))


def _background_body(rng: random.Random) -> str:
    return _sentence(rng.sample(_FILLER, rng.randint(4, 7)))


def generate(seed: int = 7, topics: int = 10) -> tuple[Corpus, list[GoldsetEntry]]:
    """Build the synthetic corpus and its goldset; fully determined by the seed."""
    if not 1 <= topics <= len(_TOPICS):
        raise ValueError(f"topics must be in 1..{len(_TOPICS)}, got {topics}")
    rng = random.Random(seed)
    bugs: list[BugReport] = []
    goldset: list[GoldsetEntry] = []
    junk_counter = 0

    def junk(count: int) -> list[str]:
        nonlocal junk_counter
        out = []
        for _ in range(count):
            out.append(f"trace{junk_counter:03d}")
            junk_counter += 1
        return out

    def filler(bounds: tuple[int, int]) -> list[str]:
        return rng.sample(_FILLER, rng.randint(*bounds))

    for topic_no in range(topics):
        topic = _TOPICS[topic_no]
        hubs = _HUBS[topic_no]
        # the topic's two resolution words: both in the gold comment, each
        # echoed by hub comments
        topic_pos = tuple(rng.sample(_POSITIVE, 2))
        base = f"bug-{topic_no:02d}"
        title = f"{topic[0].capitalize()} {topic[1]} issue in the {topic[2]} {topic[3]}"

        # thread A: symptom report, hub analysis, a still-broken follow-up,
        # and the concluding fix confirmation (the goldset target)
        a_comments = [
            _reporter_body(rng, topic, filler(_REPORTER_FILLER), junk(1)),
            _support_body(rng, topic, hubs, topic_pos[0], flip=False),
            _sentence(["the", topic[0], topic[2], "is", "still",
                       rng.choice(_NEGATIVE), "with"] + junk(1)),
            _gold_body(topic, hubs, topic_pos),
        ]
        # thread B: me-too traffic, a misleading all-clear, more symptom restating
        b_comments = [
            _neutral_body(rng, topic, filler(_NEUTRAL_FILLER)),
            _works_for_me_body(rng, topic, filler(_WFM_FILLER)),
            _support_body(rng, topic, hubs, topic_pos[1], flip=True),
            _reporter_body(rng, topic, filler(_REPORTER_FILLER), junk(1)),
        ]
        # thread C: cross-cutting discussion sharing the topic vocabulary
        c_comments = [
            _reporter_body(rng, topic, filler(_REPORTER_FILLER), junk(1)),
            _support_body(rng, topic, hubs, topic_pos[0], flip=False),
            _works_for_me_body(rng, topic, filler(_WFM_FILLER)),
            _neutral_body(rng, topic, filler(_NEUTRAL_FILLER)),
            _offtopic_body(rng),
        ]
        for suffix, bodies in (("a", a_comments), ("b", b_comments), ("c", c_comments)):
            bug_id = f"{base}{suffix}"
            bugs.append(BugReport(
                id=bug_id,
                title=title,
                description=_sentence(["the"] + list(topic) + ["interaction", "misbehaves"]),
                status=RESOLVED,
                comments=tuple(
                    Comment(bug_id=bug_id, index=i, body=body)
                    for i, body in enumerate(bodies)
                ),
            ))
        goldset.append(GoldsetEntry(
            query_id=f"q-{topic_no:02d}",
            query_text=" ".join(topic),
            gold_refs=frozenset({(f"{base}a", 3)}),
        ))

    for bg_no in range(10):
        bug_id = f"bug-bg-{bg_no:02d}"
        bugs.append(BugReport(
            id=bug_id,
            title=f"Background report {bg_no}",
            description=_background_body(rng),
            status=RESOLVED,
            comments=tuple(
                Comment(bug_id=bug_id, index=i, body=_background_body(rng))
                for i in range(7)
            ),
        ))

    # unresolved threads mention topic vocabulary but must never be candidates
    for open_no in range(5):
        topic = _TOPICS[open_no % topics]
        bug_id = f"bug-open-{open_no:02d}"
        bugs.append(BugReport(
            id=bug_id,
            title=f"Open question about {topic[0]}",
            description=_sentence(list(topic)),
            status=UNRESOLVED,
            comments=tuple(
                Comment(bug_id=bug_id, index=i,
                        body=_reporter_body(rng, topic, filler((1, 2)), junk(1)))
                for i in range(4)
            ),
        ))

    ordered = {bug.id: bug for bug in sorted(bugs, key=lambda b: b.id)}
    resolved = sum(len(b.comments) for b in ordered.values() if b.status == RESOLVED)
    return Corpus(bugs=ordered, resolved_comment_count=resolved), goldset
