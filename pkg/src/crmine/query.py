"""Keyword-pair proximity queries over a committed index.

A document matches when one of its text elements contains the two stemmed
keywords within the requested distance, in either order, measured on
analyzer positions (stopword gaps included). Matches never span elements.
Counting is per document per distinct date: occurrence multiplicity inside
one document is discarded, but every distinct date a matching document
carries receives one count.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from datetime import date

from .analysis import STOPWORDS, tokenize
from .errors import InvalidQueryTerm, ParseError, StopwordQueryTerm
from .index import PositionalIndex
from .stemming import stem

DEFAULT_PAIRS = (
    ("tax", "increase"),
    ("revenue", "increase"),
    ("tax", "relief"),
    ("tax", "repeal"),
)
DEFAULT_DISTANCES = (2, 5)


@dataclass(frozen=True)
class ProximityQuery:
    term_a: str
    term_b: str
    max_distance: int

    @property
    def label(self) -> str:
        return f'("{self.term_a}", "{self.term_b}") {self.max_distance}-gram'

    @property
    def file_stem(self) -> str:
        return f"{self.term_a}_{self.term_b}_{self.max_distance}"


@dataclass
class MatchSet:
    query: ProximityQuery
    doc_ids: list[str]
    dates_by_doc: dict[str, tuple[date, ...]]


def default_suite() -> list[ProximityQuery]:
    """The default eight queries: four pairs, each within 2 and within 5."""
    return [
        ProximityQuery(a, b, distance)
        for a, b in DEFAULT_PAIRS
        for distance in DEFAULT_DISTANCES
    ]


def query_stem(keyword: str) -> str:
    """Analyze one query keyword exactly as indexed text is analyzed."""
    tokens = tokenize(keyword)
    if len(tokens) != 1:
        raise InvalidQueryTerm(f"keyword {keyword!r} does not analyze to a single term")
    if tokens[0] in STOPWORDS:
        raise StopwordQueryTerm(f"keyword {keyword!r} is eliminated by the analyzer")
    return stem(tokens[0])


def _within(pos_a: list[int], pos_b: list[int], max_distance: int) -> bool:
    i = j = 0
    while i < len(pos_a) and j < len(pos_b):
        delta = pos_a[i] - pos_b[j]
        if abs(delta) <= max_distance:
            return True
        if delta < 0:
            i += 1
        else:
            j += 1
    return False


def proximity_match(index: PositionalIndex, query: ProximityQuery) -> MatchSet:
    index.require_committed()
    if query.max_distance < 1:
        raise ValueError("max_distance must be >= 1")
    term_a = query_stem(query.term_a)
    term_b = query_stem(query.term_b)
    by_doc_a = index.postings.get(term_a, {})
    by_doc_b = index.postings.get(term_b, {})
    doc_ids: list[str] = []
    dates_by_doc: dict[str, tuple[date, ...]] = {}
    for ordinal in sorted(by_doc_a.keys() & by_doc_b.keys()):
        elems_a = by_doc_a[ordinal]
        elems_b = by_doc_b[ordinal]
        hit = any(
            _within(elems_a[elem], elems_b[elem], query.max_distance)
            for elem in elems_a.keys() & elems_b.keys()
        )
        if hit:
            doc = index.docs[ordinal]
            doc_ids.append(doc.id)
            dates_by_doc[doc.id] = doc.dates
    return MatchSet(query, doc_ids, dates_by_doc)


def aggregate_by_date(matches: MatchSet) -> dict[date, int]:
    """Date -> matching doc count, each doc counted once per distinct date."""
    counts: dict[date, int] = {}
    for doc_id in matches.doc_ids:
        for when in set(matches.dates_by_doc[doc_id]):
            counts[when] = counts.get(when, 0) + 1
    return dict(sorted(counts.items()))


def run_query_suite(index: PositionalIndex, queries=None) -> dict[str, dict[date, int]]:
    """Label -> DateCounts for each query, in suite order."""
    if queries is None:
        queries = default_suite()
    return {q.label: aggregate_by_date(proximity_match(index, q)) for q in queries}


def count_stats(counts: dict[date, int]) -> dict[str, float]:
    values = list(counts.values())
    if not values:
        return {"min": 0, "max": 0, "mean": 0.0, "total": 0}
    total = sum(values)
    return {
        "min": min(values),
        "max": max(values),
        "mean": total / len(values),
        "total": total,
    }


def write_counts_csv(counts: dict[date, int], fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["date", "count"])
    for when in sorted(counts):
        writer.writerow([when.isoformat(), counts[when]])


def read_counts_csv(path) -> dict[date, int]:
    counts: dict[date, int] = {}
    with open(path, newline="") as fh:
        rows = csv.reader(fh)
        header = next(rows, None)
        if header != ["date", "count"]:
            raise ParseError(f"{path}:1: expected header date,count")
        for line_no, row in enumerate(rows, start=2):
            if not row:
                continue
            try:
                counts[date.fromisoformat(row[0])] = int(row[1])
            except (IndexError, ValueError):
                raise ParseError(f"{path}:{line_no}: bad row {row!r}") from None
    return counts
