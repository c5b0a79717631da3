"""Command line interface for the full pipeline.

Exit codes: 0 on success, 1 on a domain error (reported to stderr as
``ERROR <code>: <detail>``), 2 on usage errors. Logging goes to stderr;
stdout carries data only when ``--out -`` is chosen.
"""

from __future__ import annotations

import functools
import json
from pathlib import Path

import click

from . import __version__
from .analysis import STOPWORDS, analyze
from .errors import CrmineError
from .index import build_index, load_snapshot, save_snapshot
from .ingest import ingest_tree, read_ndjson, report_payload, write_ndjson
from .query import (
    DEFAULT_DISTANCES,
    DEFAULT_PAIRS,
    ProximityQuery,
    aggregate_by_date,
    count_stats,
    default_suite,
    proximity_match,
    write_counts_csv,
)
from .report import (
    correlate as build_correlation,
    discover_counts,
    discover_indicators,
    emit_matrix_csv,
    parse_aggregation_overrides,
    run_suite,
)
from .timeseries import DEFAULT_AGGREGATION, load_elections


def _domain_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except CrmineError as exc:
            click.echo(f"ERROR {exc.code}: {exc}", err=True)
            raise SystemExit(1) from exc

    return wrapper


def _parse_pair(ctx, param, value):
    def split(text):
        parts = [part.strip() for part in text.split(",")]
        if len(parts) != 2 or not all(parts):
            raise click.BadParameter(f"{text!r}: expected two comma-separated keywords")
        return tuple(parts)

    if value is None:
        return None
    if isinstance(value, tuple):
        return tuple(split(v) for v in value)
    return split(value)


def _suite_queries(pairs, withins):
    if not pairs and not withins:
        return default_suite()
    return [
        ProximityQuery(a, b, distance)
        for a, b in (pairs or DEFAULT_PAIRS)
        for distance in (withins or DEFAULT_DISTANCES)
    ]


_dir_in = click.Path(exists=True, file_okay=False, path_type=Path)
_file_in = click.Path(exists=True, dir_okay=False, path_type=Path)
_path_out = click.Path(dir_okay=False, path_type=Path)
_dir_out = click.Path(file_okay=False, path_type=Path)


@click.group()
@click.version_option(version=__version__, prog_name="crmine")
def main():
    """Mine keyword-pair frequencies from legislative records and correlate
    them with economic indicators."""


@main.command("ingest")
@click.option("--root", type=_dir_in, required=True, help="Directory tree of .json action files.")
@click.option("--out", type=click.File("w"), required=True, help="Corpus ndjson ('-' for stdout).")
@click.option("--report", "report_path", type=_path_out, default=None,
              help="Write the ingest report JSON here instead of stderr.")
@_domain_errors
def cmd_ingest(root, out, report_path):
    """Normalize raw JSON action files into a corpus ndjson."""
    result = ingest_tree(root)
    write_ndjson(result.docs, out)
    payload = json.dumps(report_payload(result), indent=2) + "\n"
    if report_path is not None:
        report_path.write_text(payload)
    else:
        click.echo(payload, err=True, nl=False)


@main.command("index")
@click.option("--corpus", type=click.File("r"), required=True, help="Corpus ndjson ('-' for stdin).")
@click.option("--out", type=_path_out, required=True, help="Snapshot file to write.")
@_domain_errors
def cmd_index(corpus, out):
    """Build a positional index from a corpus and snapshot it."""
    index = build_index(read_ndjson(corpus))
    save_snapshot(index, out)
    stats = index.stats()
    click.echo(
        f"indexed {stats['docs']} docs, {stats['terms']} terms, "
        f"{stats['positions']} positions -> {out}",
        err=True,
    )


@main.command("query")
@click.option("--index", "index_path", type=_file_in, required=True, help="Snapshot file.")
@click.option("--pair", required=True, callback=_parse_pair, help="Keyword pair, e.g. tax,increase.")
@click.option("--within", type=click.IntRange(min=1), required=True, help="Maximum term distance.")
@click.option("--out", type=click.File("w"), default="-", help="Counts CSV ('-' for stdout).")
@click.option("--stats", is_flag=True, help="Print min/max/mean/total of the counts to stderr.")
@_domain_errors
def cmd_query(index_path, pair, within, out, stats):
    """Run one proximity query and emit date,count rows."""
    index = load_snapshot(index_path)
    counts = aggregate_by_date(proximity_match(index, ProximityQuery(pair[0], pair[1], within)))
    write_counts_csv(counts, out)
    if stats:
        s = count_stats(counts)
        click.echo(
            f"stats: min={s['min']} max={s['max']} mean={s['mean']} total={s['total']}",
            err=True,
        )


@main.command("suite")
@click.option("--index", "index_path", type=_file_in, required=True, help="Snapshot file.")
@click.option("--outdir", type=_dir_out, required=True, help="Directory for the count CSVs.")
@click.option("--pair", "pairs", multiple=True, callback=_parse_pair,
              help="Override the default pairs (repeatable).")
@click.option("--within", "withins", type=click.IntRange(min=1), multiple=True,
              help="Override the default distances (repeatable).")
@_domain_errors
def cmd_suite(index_path, outdir, pairs, withins):
    """Run the query suite, one counts CSV per query."""
    index = load_snapshot(index_path)
    queries = _suite_queries(pairs, withins)
    run_suite(index, outdir, queries)
    click.echo(f"wrote {len(queries)} count files to {outdir}", err=True)


def _effective_aggregations(indicators, overrides):
    return {
        stem: overrides.get(stem, DEFAULT_AGGREGATION.get(stem, "mean"))
        for stem in indicators
    }


@main.command("correlate")
@click.option("--counts-dir", type=_dir_in, required=True, help="Directory of date,count CSVs.")
@click.option("--indicators-dir", type=_dir_in, required=True, help="Directory of date,value CSVs.")
@click.option("--elections", "elections_path", type=_file_in, required=True,
              help="year,party CSV (D/R/O).")
@click.option("--out", type=click.File("w"), required=True, help="Matrix CSV ('-' for stdout).")
@click.option("--plots-dir", type=_dir_out, default=None, help="Also emit aligned pair CSVs here.")
@click.option("--svg", is_flag=True, help="Render an SVG chart beside each pair CSV.")
@click.option("--aggregation", "aggregation_specs", multiple=True,
              help="Override an indicator's rule, e.g. sp500=mean (repeatable).")
@_domain_errors
def cmd_correlate(counts_dir, indicators_dir, elections_path, out, plots_dir, svg, aggregation_specs):
    """Correlate term-count series with indicators into a matrix CSV."""
    overrides = parse_aggregation_overrides(aggregation_specs)
    counts = discover_counts(counts_dir)
    indicators = discover_indicators(indicators_dir, overrides)
    elections = load_elections(elections_path)
    matrix = build_correlation(counts, indicators, elections, plots_dir, svg)
    emit_matrix_csv(matrix, out)
    click.echo("aggregation: " + json.dumps(_effective_aggregations(indicators, overrides)), err=True)


@main.command("report")
@click.option("--index", "index_path", type=_file_in, required=True, help="Snapshot file.")
@click.option("--indicators-dir", type=_dir_in, required=True, help="Directory of date,value CSVs.")
@click.option("--elections", "elections_path", type=_file_in, required=True,
              help="year,party CSV (D/R/O).")
@click.option("--outdir", type=_dir_out, required=True, help="Report output directory.")
@click.option("--svg/--no-svg", default=True, help="Render SVG charts (default on).")
@click.option("--pair", "pairs", multiple=True, callback=_parse_pair,
              help="Override the default pairs (repeatable).")
@click.option("--within", "withins", type=click.IntRange(min=1), multiple=True,
              help="Override the default distances (repeatable).")
@click.option("--aggregation", "aggregation_specs", multiple=True,
              help="Override an indicator's rule, e.g. sp500=mean (repeatable).")
@_domain_errors
def cmd_report(index_path, indicators_dir, elections_path, outdir, svg, pairs, withins, aggregation_specs):
    """Full report: count CSVs, correlation matrix, and charts."""
    overrides = parse_aggregation_overrides(aggregation_specs)
    index = load_snapshot(index_path)
    queries = _suite_queries(pairs, withins)
    outdir = Path(outdir)
    counts = run_suite(index, outdir / "counts", queries)
    indicators = discover_indicators(indicators_dir, overrides)
    elections = load_elections(elections_path)
    matrix = build_correlation(counts, indicators, elections, outdir / "plots", svg)
    with open(outdir / "matrix.csv", "w", newline="") as fh:
        emit_matrix_csv(matrix, fh)
    click.echo("aggregation: " + json.dumps(_effective_aggregations(indicators, overrides)), err=True)
    click.echo(
        f"report: {len(counts)} count files, {len(matrix.row_labels)}x{len(matrix.col_labels)} matrix -> {outdir}",
        err=True,
    )


@main.command("analyze")
@click.argument("text", nargs=-1)
@click.option("--show-stopwords", is_flag=True, help="Print the embedded stopword list and exit.")
def cmd_analyze(text, show_stopwords):
    """Show how a text analyzes into positioned terms."""
    if show_stopwords:
        for word in sorted(STOPWORDS):
            click.echo(word)
        return
    if not text:
        raise click.UsageError("provide TEXT or --show-stopwords")
    tokens = analyze(" ".join(text))
    click.echo(" ".join(f"{term}@{position}" for term, position in tokens))
