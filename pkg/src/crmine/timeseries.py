"""Annual resampling, series alignment, and correlation.

Indicator series arrive at daily, monthly, or annual resolution and are
reduced to one value per calendar year by a per-indicator aggregation rule.
Term-count series are summed per year and zero-filled across the requested
span: a year without matches is a real observation. Indicator series are
never zero-filled; a missing year stays missing and its row is dropped
during alignment.
"""

from __future__ import annotations

import csv
import math
import statistics
from dataclasses import dataclass
from datetime import date
from pathlib import Path

from .errors import (
    EmptySeries,
    InsufficientOverlap,
    LengthMismatch,
    ParseError,
    UnknownAggregation,
    ZeroVariance,
)

AGGREGATIONS = ("mean", "sum", "last", "yoy")

# Pinned default rule per known indicator file stem; anything else gets mean.
DEFAULT_AGGREGATION = {
    "gdp_growth": "last",
    "median_household_income": "last",
    "unemployment_rate": "mean",
    "housing_starts": "sum",
    "sp500": "yoy",
    "federal_funds_rate": "mean",
}

PARTIES = ("D", "R", "O")


@dataclass
class IndicatorSeries:
    name: str
    resolution: str
    points: list[tuple[date, float]]
    aggregation: str


@dataclass
class AlignedPair:
    label_x: str
    label_y: str
    rows: list[tuple[int, float, float, str]]


def infer_resolution(points: list[tuple[date, float]]) -> str:
    if len(points) < 2:
        return "annual"
    gaps = [
        (points[i + 1][0] - points[i][0]).days for i in range(len(points) - 1)
    ]
    median_gap = statistics.median(gaps)
    if median_gap >= 300:
        return "annual"
    if median_gap >= 25:
        return "monthly"
    return "daily"


def load_indicator(path, name: str | None = None, aggregation: str | None = None) -> IndicatorSeries:
    """Read a `date,value` CSV; infer resolution from the median point gap."""
    path = Path(path)
    if name is None:
        name = path.stem
    if aggregation is None:
        aggregation = DEFAULT_AGGREGATION.get(name, "mean")
    if aggregation not in AGGREGATIONS:
        raise UnknownAggregation(f"{aggregation!r} is not one of {', '.join(AGGREGATIONS)}")
    points: list[tuple[date, float]] = []
    with open(path, newline="") as fh:
        rows = csv.reader(fh)
        header = next(rows, None)
        if header != ["date", "value"]:
            raise ParseError(f"{path}:1: expected header date,value")
        for line_no, row in enumerate(rows, start=2):
            if not row:
                continue
            try:
                points.append((date.fromisoformat(row[0]), float(row[1])))
            except (IndexError, ValueError):
                raise ParseError(f"{path}:{line_no}: bad row {row!r}") from None
    points.sort(key=lambda p: p[0])
    for i in range(len(points) - 1):
        if points[i][0] == points[i + 1][0]:
            raise ParseError(f"{path}: duplicate date {points[i][0].isoformat()}")
    if len(points) < 2:
        raise EmptySeries(f"{path}: need at least 2 points, found {len(points)}")
    return IndicatorSeries(name, infer_resolution(points), points, aggregation)


def _last_per_year(points) -> dict[int, float]:
    last: dict[int, float] = {}
    for when, value in points:
        last[when.year] = value
    return last


def to_annual(series: IndicatorSeries) -> dict[int, float]:
    """One value per year, reduced by the series' aggregation rule."""
    if series.aggregation == "yoy":
        last = _last_per_year(series.points)
        # year-over-year return from closing values; first year has no base
        return {
            year: (last[year] - last[year - 1]) / last[year - 1]
            for year in sorted(last)
            if year - 1 in last
        }
    grouped: dict[int, list[float]] = {}
    for when, value in series.points:
        grouped.setdefault(when.year, []).append(value)
    if series.aggregation == "mean":
        reduce = statistics.fmean
    elif series.aggregation == "sum":
        reduce = math.fsum
    else:
        reduce = lambda values: values[-1]
    return {year: reduce(values) for year, values in sorted(grouped.items())}


def counts_to_annual(date_counts: dict[date, int], full_range: tuple[int, int]) -> dict[int, int]:
    """Sum per year; years in full_range without matches become explicit 0."""
    lo, hi = full_range
    sums: dict[int, int] = {}
    for when, count in date_counts.items():
        sums[when.year] = sums.get(when.year, 0) + count
    years = set(sums) | set(range(lo, hi + 1))
    return {year: sums.get(year, 0) for year in sorted(years)}


class ElectionRecord:
    """Presidency-in-power lookup: party per year, forward-filled."""

    def __init__(self, entries: list[tuple[int, str]]):
        self.entries = sorted(entries)

    def coverage(self) -> tuple[int, int] | None:
        if not self.entries:
            return None
        return self.entries[0][0], self.entries[-1][0]

    def party_for(self, year: int) -> str:
        span = self.coverage()
        if span is None or not span[0] <= year <= span[1]:
            return "O"
        party = "O"
        for entry_year, entry_party in self.entries:
            if entry_year > year:
                break
            party = entry_party
        return party


def load_elections(path) -> ElectionRecord:
    path = Path(path)
    entries: list[tuple[int, str]] = []
    with open(path, newline="") as fh:
        rows = csv.reader(fh)
        header = next(rows, None)
        if header != ["year", "party"]:
            raise ParseError(f"{path}:1: expected header year,party")
        for line_no, row in enumerate(rows, start=2):
            if not row:
                continue
            try:
                year = int(row[0])
                party = row[1]
            except (IndexError, ValueError):
                raise ParseError(f"{path}:{line_no}: bad row {row!r}") from None
            if party not in PARTIES:
                raise ParseError(f"{path}:{line_no}: party must be one of D, R, O")
            entries.append((year, party))
    return ElectionRecord(entries)


def align(
    x: dict[int, float],
    y: dict[int, float],
    elections: ElectionRecord | None = None,
    label_x: str = "x",
    label_y: str = "y",
) -> AlignedPair:
    """Pair two annual series from the later start to the earlier end.

    Years where either side is missing are dropped. Fewer than three
    surviving rows is an error: the correlation would be meaningless.
    """
    if not x or not y:
        raise InsufficientOverlap(f"{label_x} vs {label_y}: a series is empty")
    start = max(min(x), min(y))
    end = min(max(x), max(y))
    rows = []
    for year in range(start, end + 1):
        if year in x and year in y:
            party = elections.party_for(year) if elections else "O"
            rows.append((year, x[year], y[year], party))
    if len(rows) < 3:
        raise InsufficientOverlap(
            f"{label_x} vs {label_y}: {len(rows)} overlapping years, need 3"
        )
    return AlignedPair(label_x, label_y, rows)


def pearson(xs, ys) -> float:
    """Sample Pearson correlation, clamped into [-1, 1]."""
    if len(xs) != len(ys):
        raise LengthMismatch(f"series lengths differ: {len(xs)} vs {len(ys)}")
    n = len(xs)
    if n < 3:
        raise InsufficientOverlap(f"{n} observations, need 3")
    mean_x = math.fsum(xs) / n
    mean_y = math.fsum(ys) / n
    dx = [x - mean_x for x in xs]
    dy = [y - mean_y for y in ys]
    sxy = math.fsum(a * b for a, b in zip(dx, dy))
    sx2 = math.fsum(a * a for a in dx)
    sy2 = math.fsum(b * b for b in dy)
    if sx2 == 0.0 or sy2 == 0.0:
        raise ZeroVariance("constant series has no defined correlation")
    # sqrt of the product keeps pearson(x, x) exactly 1.0; fall back to the
    # two-sqrt form when the product leaves float range
    product = sx2 * sy2
    if math.isinf(product) or product == 0.0:
        denominator = math.sqrt(sx2) * math.sqrt(sy2)
    else:
        denominator = math.sqrt(product)
    return max(-1.0, min(1.0, sxy / denominator))
