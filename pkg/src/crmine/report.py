"""Correlation matrix assembly and report emission.

The matrix pairs each term-count series with each indicator on that pair's
own aligned window, so cells legitimately cover different year spans. Rows
follow the query-suite order, columns the canonical indicator order.
Displayed coefficients are rounded half away from zero to two decimals and
negative zero is normalized away; full precision is kept internally.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from datetime import date
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path

from .errors import CrmineError, UnknownAggregation
from .index import PositionalIndex
from .plotting import render_pair_svg
from .query import (
    ProximityQuery,
    aggregate_by_date,
    default_suite,
    proximity_match,
    read_counts_csv,
    write_counts_csv,
)
from .timeseries import (
    AGGREGATIONS,
    AlignedPair,
    ElectionRecord,
    align,
    counts_to_annual,
    load_indicator,
    pearson,
    to_annual,
)

# Matrix column order and display names for the six standard indicators.
INDICATOR_COLUMNS = (
    ("gdp_growth", "GDP Growth"),
    ("median_household_income", "Median Household Income"),
    ("unemployment_rate", "Unemployment Rate"),
    ("housing_starts", "Housing Starts"),
    ("sp500", "S&P 500 Return"),
    ("federal_funds_rate", "Federal Fund Rate"),
)
_INDICATOR_ORDER = {stem: i for i, (stem, _) in enumerate(INDICATOR_COLUMNS)}
_INDICATOR_LABEL = dict(INDICATOR_COLUMNS)

_SUITE_ORDER = {q.file_stem: i for i, q in enumerate(default_suite())}


@dataclass
class MatrixCell:
    r: float
    n_years: int


@dataclass
class CorrelationMatrix:
    row_labels: list[str]
    col_labels: list[str]
    cells: list[list[MatrixCell]]


def query_label_for_stem(stem: str) -> str:
    """Recover the display label from a counts file stem such as tax_increase_2."""
    for query in default_suite():
        if query.file_stem == stem:
            return query.label
    head, _, tail = stem.rpartition("_")
    if tail.isdigit() and head.count("_") == 1:
        a, b = head.split("_")
        return ProximityQuery(a, b, int(tail)).label
    return stem


def format_coefficient(r: float) -> str:
    text = str(Decimal(repr(r)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))
    return "0.00" if text == "-0.00" else text


def run_suite(index: PositionalIndex, outdir, queries=None) -> dict[str, dict[date, int]]:
    """Run the query suite and write one `date,count` CSV per query."""
    if queries is None:
        queries = default_suite()
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    by_stem: dict[str, dict[date, int]] = {}
    for query in queries:
        counts = aggregate_by_date(proximity_match(index, query))
        with open(outdir / f"{query.file_stem}.csv", "w", newline="") as fh:
            write_counts_csv(counts, fh)
        by_stem[query.file_stem] = counts
    return by_stem


def discover_counts(counts_dir) -> dict[str, dict[date, int]]:
    """Load every counts CSV, suite stems first in suite order, extras after."""
    paths = sorted(Path(counts_dir).glob("*.csv"), key=lambda p: p.stem)
    ordered = sorted(paths, key=lambda p: (_SUITE_ORDER.get(p.stem, len(_SUITE_ORDER)), p.stem))
    return {path.stem: read_counts_csv(path) for path in ordered}


def discover_indicators(indicators_dir, overrides=None) -> dict[str, dict[int, float]]:
    """Load and annualize every indicator CSV, canonical six first."""
    overrides = overrides or {}
    paths = sorted(Path(indicators_dir).glob("*.csv"), key=lambda p: p.stem)
    ordered = sorted(
        paths, key=lambda p: (_INDICATOR_ORDER.get(p.stem, len(_INDICATOR_ORDER)), p.stem)
    )
    out: dict[str, dict[int, float]] = {}
    for path in ordered:
        series = load_indicator(path, aggregation=overrides.get(path.stem))
        out[path.stem] = to_annual(series)
    return out


def parse_aggregation_overrides(specs) -> dict[str, str]:
    """Parse repeated `stem=rule` override flags."""
    overrides: dict[str, str] = {}
    for spec in specs or ():
        stem, sep, rule = spec.partition("=")
        if not sep or not stem or rule not in AGGREGATIONS:
            raise UnknownAggregation(
                f"{spec!r}: expected <indicator>=<rule> with rule one of {', '.join(AGGREGATIONS)}"
            )
        overrides[stem] = rule
    return overrides


def counts_year_span(counts_by_stem) -> tuple[int, int]:
    """Union of years observed across all loaded counts series."""
    years = [when.year for counts in counts_by_stem.values() for when in counts]
    if not years:
        return (0, -1)
    return (min(years), max(years))


def correlation_matrix(
    term_series: dict[str, dict[int, float]],
    indicators: dict[str, dict[int, float]],
    elections: ElectionRecord | None = None,
) -> CorrelationMatrix:
    row_labels = [query_label_for_stem(stem) for stem in term_series]
    col_labels = [_INDICATOR_LABEL.get(stem, stem) for stem in indicators]
    cells: list[list[MatrixCell]] = []
    for stem, annual_counts in term_series.items():
        row: list[MatrixCell] = []
        row_label = query_label_for_stem(stem)
        for ind_stem, annual_values in indicators.items():
            try:
                pair = align(annual_counts, annual_values, elections, row_label, ind_stem)
                xs = [r[1] for r in pair.rows]
                ys = [r[2] for r in pair.rows]
                row.append(MatrixCell(pearson(xs, ys), len(pair.rows)))
            except CrmineError as exc:
                exc.args = (f"({row_label}, {ind_stem}): {exc}",)
                raise
        cells.append(row)
    return CorrelationMatrix(row_labels, col_labels, cells)


def emit_matrix_csv(matrix: CorrelationMatrix, fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["Search Term"] + matrix.col_labels)
    for label, row in zip(matrix.row_labels, matrix.cells):
        writer.writerow([label] + [format_coefficient(cell.r) for cell in row])


def emit_plot_series(pair: AlignedPair, csv_path, svg_path=None) -> None:
    """Write the aligned rows as CSV and, optionally, an SVG chart."""
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["year", "term_count", "indicator_value", "party"])
        for year, count, value, party in pair.rows:
            writer.writerow([year, count, repr(float(value)), party])
    if svg_path is not None:
        render_pair_svg(pair, svg_path)


def correlate(
    counts_by_stem: dict[str, dict[date, int]],
    indicators: dict[str, dict[int, float]],
    elections: ElectionRecord | None,
    plots_dir=None,
    svg: bool = False,
) -> CorrelationMatrix:
    """Assemble the matrix; optionally emit one aligned pair per cell."""
    span = counts_year_span(counts_by_stem)
    term_series = {
        stem: counts_to_annual(counts, span) for stem, counts in counts_by_stem.items()
    }
    matrix = correlation_matrix(term_series, indicators, elections)
    if plots_dir is not None:
        plots_dir = Path(plots_dir)
        plots_dir.mkdir(parents=True, exist_ok=True)
        for stem, annual_counts in term_series.items():
            for ind_stem, annual_values in indicators.items():
                pair = align(
                    annual_counts,
                    annual_values,
                    elections,
                    query_label_for_stem(stem),
                    _INDICATOR_LABEL.get(ind_stem, ind_stem),
                )
                base = plots_dir / f"{stem}__{ind_stem}"
                emit_plot_series(
                    pair,
                    base.with_suffix(".csv"),
                    base.with_suffix(".svg") if svg else None,
                )
    return matrix
