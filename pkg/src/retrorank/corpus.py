"""Load, validate, persist, and serve bug reports with their discussion threads.

The corpus lives in a newline-delimited UTF-8 file: one JSON object per line,
one bug report per object. Blank lines and lines starting with '#' are
ignored. A corpus is immutable after loading; any number of readers may share
it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

RESOLVED = "resolved"
UNRESOLVED = "unresolved"
STATUSES = (RESOLVED, UNRESOLVED)


class CorpusError(Exception):
    """Malformed corpus file or record."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class BugNotFoundError(LookupError):
    """Lookup of a bug id that is not in the corpus."""

    def __init__(self, bug_id: str):
        super().__init__(f"no bug with id {bug_id!r}")
        self.bug_id = bug_id


@dataclass(frozen=True)
class Comment:
    """One comment of a discussion thread, addressed by (bug id, position)."""

    bug_id: str
    index: int
    body: str
    author: str | None = None
    timestamp: str | None = None


@dataclass(frozen=True)
class BugReport:
    id: str
    title: str
    description: str
    status: str
    comments: tuple[Comment, ...]


@dataclass(frozen=True)
class Corpus:
    """All bug reports, keyed by id, iterated in ascending-id order."""

    bugs: dict[str, BugReport]
    resolved_comment_count: int

    def __len__(self) -> int:
        return len(self.bugs)


def _parse_comment(bug_id: str, position: int, raw: object, line_no: int) -> Comment:
    if not isinstance(raw, dict):
        raise CorpusError(f"bug {bug_id!r}: comment {position} is not an object", line_no)
    index = raw.get("index")
    if index != position:
        raise CorpusError(
            f"bug {bug_id!r}: comment index {index!r} breaks the contiguous "
            f"0..k-1 sequence (expected {position})",
            line_no,
        )
    body = raw.get("body")
    if not isinstance(body, str) or not body.strip():
        raise CorpusError(f"bug {bug_id!r}: comment {position} has an empty body", line_no)
    author = raw.get("author")
    timestamp = raw.get("timestamp")
    if author is not None and not isinstance(author, str):
        raise CorpusError(f"bug {bug_id!r}: comment {position} author must be text", line_no)
    if timestamp is not None and not isinstance(timestamp, str):
        raise CorpusError(f"bug {bug_id!r}: comment {position} timestamp must be text", line_no)
    return Comment(bug_id=bug_id, index=position, body=body, author=author, timestamp=timestamp)


def _parse_bug(record: object, line_no: int) -> BugReport:
    if not isinstance(record, dict):
        raise CorpusError("record is not an object", line_no)
    bug_id = record.get("id")
    if not isinstance(bug_id, str) or not bug_id:
        raise CorpusError("missing or non-text bug id", line_no)
    status = record.get("status")
    if status not in STATUSES:
        raise CorpusError(
            f"bug {bug_id!r}: unknown status {status!r} (expected one of {', '.join(STATUSES)})",
            line_no,
        )
    title = record.get("title", "")
    description = record.get("description", "")
    if not isinstance(title, str) or not isinstance(description, str):
        raise CorpusError(f"bug {bug_id!r}: title and description must be text", line_no)
    raw_comments = record.get("comments", [])
    if not isinstance(raw_comments, list):
        raise CorpusError(f"bug {bug_id!r}: comments must be an array", line_no)
    comments = tuple(
        _parse_comment(bug_id, position, raw, line_no)
        for position, raw in enumerate(raw_comments)
    )
    return BugReport(id=bug_id, title=title, description=description,
                     status=status, comments=comments)


def load_corpus(path: str | Path) -> Corpus:
    """Parse and validate a corpus file.

    Raises CorpusError (with the offending line number) on malformed records,
    duplicate bug ids, unknown status values, or empty comment bodies.
    """
    bugs: dict[str, BugReport] = {}
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, 1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            try:
                record = json.loads(stripped)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"malformed record: {exc.msg}", line_no) from exc
            bug = _parse_bug(record, line_no)
            if bug.id in bugs:
                raise CorpusError(f"duplicate bug id {bug.id!r}", line_no)
            bugs[bug.id] = bug
    ordered = {bug_id: bugs[bug_id] for bug_id in sorted(bugs)}
    resolved = sum(len(b.comments) for b in ordered.values() if b.status == RESOLVED)
    return Corpus(bugs=ordered, resolved_comment_count=resolved)


def save_corpus(corpus: Corpus, path: str | Path) -> None:
    """Write the corpus back in the line-delimited file format (ascending id)."""
    with open(path, "w", encoding="utf-8") as handle:
        for bug in corpus.bugs.values():
            record = {
                "id": bug.id,
                "title": bug.title,
                "description": bug.description,
                "status": bug.status,
                "comments": [_comment_record(c) for c in bug.comments],
            }
            handle.write(json.dumps(record, ensure_ascii=False) + "\n")


def _comment_record(comment: Comment) -> dict:
    record: dict = {"index": comment.index, "body": comment.body}
    if comment.author is not None:
        record["author"] = comment.author
    if comment.timestamp is not None:
        record["timestamp"] = comment.timestamp
    return record


def get_bug(corpus: Corpus, bug_id: str) -> BugReport:
    try:
        return corpus.bugs[bug_id]
    except KeyError:
        raise BugNotFoundError(bug_id) from None


def resolved_comments(corpus: Corpus) -> list[tuple[str, int, str]]:
    """All comments of resolved bugs as (bug_id, index, body), ordered by (bug id, index).

    Comments of unresolved bugs are browsable but are not retrieval candidates.
    """
    out: list[tuple[str, int, str]] = []
    for bug in corpus.bugs.values():
        if bug.status != RESOLVED:
            continue
        for comment in bug.comments:
            out.append((bug.id, comment.index, comment.body))
    return out
