"""Corpus ingestion: raw JSON action files to normalized documents.

Four record shapes are recognized, in this precedence order when a file
carries several marker keys: amendment, bill, vote, nomination. Each file
yields exactly one document or one reject, so the file count always equals
documents plus rejects. When two files claim the same identifier the one
seen last wins and the displaced file is recorded as a reject.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from datetime import date, datetime
from pathlib import Path
from typing import Iterable

from .errors import MalformedDate


@dataclass(frozen=True)
class Doc:
    """One normalized document: searchable texts plus action dates."""

    id: str
    kind: str
    texts: tuple[str, ...]
    dates: tuple[date, ...]


@dataclass(frozen=True)
class Reject:
    path: str
    code: str
    detail: str


@dataclass
class IngestResult:
    docs: list[Doc]
    rejects: list[Reject]
    files_seen: int


def parse_date(raw, source: str) -> date:
    """Parse a calendar date or a timestamp, keeping only the date part."""
    try:
        return date.fromisoformat(raw)
    except (TypeError, ValueError):
        pass
    try:
        return datetime.fromisoformat(raw.replace("Z", "+00:00")).date()
    except (AttributeError, ValueError):
        raise MalformedDate(source, raw) from None


def _texts(record: dict, *keys: str) -> tuple[str, ...]:
    found = []
    for key in keys:
        value = record.get(key) or record.get(key.capitalize())
        if isinstance(value, str) and value:
            found.append(value)
    return tuple(found)


def _action_dates(record: dict, source: str) -> tuple[date, ...]:
    # source order preserved, duplicates kept; counting dedups later
    actions = record.get("actions")
    raw = []
    if isinstance(actions, list):
        for action in actions:
            if isinstance(action, dict) and "acted_at" in action:
                raw.append(action["acted_at"])
    return tuple(parse_date(value, source) for value in raw)


def _classify(record: dict, path: Path):
    if "amendment_id" in record:
        return "amendment", record["amendment_id"]
    if "bill_id" in record:
        return "bill", record["bill_id"]
    if "vote_id" in record:
        return "vote", record["vote_id"]
    nomination = record.get("nomination") or record.get("Nomination")
    if isinstance(nomination, dict):
        raw = nomination.get("id") or nomination.get("number") or path.stem
        return "nomination", str(raw)
    return None, None


def _extract(record: dict, kind: str, path: Path) -> tuple[tuple[str, ...], tuple[date, ...]]:
    source = str(path)
    if kind == "amendment":
        return _texts(record, "description", "purpose"), _action_dates(record, source)
    if kind == "bill":
        return _texts(record, "description", "official_title"), _action_dates(record, source)
    if kind == "vote":
        texts = _texts(record, "question")
        raw = record.get("date")
        dates = (parse_date(raw, source),) if raw is not None else ()
        return texts, dates
    return _texts(record, "nominee", "organization"), _action_dates(record, source)


def ingest_tree(root: Path) -> IngestResult:
    """Walk a directory tree of .json files in sorted path order."""
    by_id: dict[str, tuple[str, Doc]] = {}
    rejects: list[Reject] = []
    files_seen = 0
    for path in sorted(Path(root).rglob("*.json")):
        files_seen += 1
        name = str(path)
        try:
            record = json.loads(path.read_text(encoding="utf-8"))
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            rejects.append(Reject(name, "ParseError", str(exc)))
            continue
        if not isinstance(record, dict):
            rejects.append(Reject(name, "UnrecognizedSchema", "top-level value is not an object"))
            continue
        kind, doc_id = _classify(record, path)
        if kind is None:
            rejects.append(Reject(name, "UnrecognizedSchema", "no recognized identifier field"))
            continue
        if not isinstance(doc_id, str) or not doc_id:
            rejects.append(Reject(name, "MissingId", f"{kind} identifier is empty"))
            continue
        try:
            texts, dates = _extract(record, kind, path)
        except MalformedDate as exc:
            rejects.append(Reject(name, exc.code, str(exc)))
            continue
        if not dates:
            rejects.append(Reject(name, "NoDates", "no usable action dates"))
            continue
        if doc_id in by_id:
            old_path, _ = by_id[doc_id]
            rejects.append(Reject(old_path, "DuplicateId", f"id {doc_id!r} superseded by {name}"))
        by_id[doc_id] = (name, Doc(doc_id, kind, texts, dates))
    docs = [doc for _, doc in by_id.values()]
    return IngestResult(docs, rejects, files_seen)


def report_payload(result: IngestResult) -> dict:
    """JSON-ready ingest report: every file lands in docs or rejects."""
    return {
        "files_seen": result.files_seen,
        "docs_emitted": len(result.docs),
        "rejects": [
            {"path": r.path, "reason": r.code, "detail": r.detail}
            for r in result.rejects
        ],
    }


def write_ndjson(docs: Iterable[Doc], fh) -> int:
    """Write one compact JSON object per line; returns the line count."""
    n = 0
    for doc in docs:
        payload = {
            "id": doc.id,
            "kind": doc.kind,
            "texts": list(doc.texts),
            "dates": [d.isoformat() for d in doc.dates],
        }
        fh.write(json.dumps(payload, separators=(",", ":")) + "\n")
        n += 1
    return n


def read_ndjson(fh) -> list[Doc]:
    docs = []
    for line in fh:
        line = line.strip()
        if not line:
            continue
        payload = json.loads(line)
        docs.append(
            Doc(
                payload["id"],
                payload["kind"],
                tuple(payload["texts"]),
                tuple(date.fromisoformat(d) for d in payload["dates"]),
            )
        )
    return docs
