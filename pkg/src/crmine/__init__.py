"""Text mining over legislative JSON records.

Pipeline: ingest raw action files into a normalized corpus, build a
positional index, run keyword-pair proximity queries, aggregate match
counts by date, and correlate the resulting annual series with economic
indicators.
"""

from .analysis import STOPWORDS, analyze, tokenize
from .errors import (
    CommittedIndex,
    CorruptSnapshot,
    CrmineError,
    EmptySeries,
    InsufficientOverlap,
    InvalidQueryTerm,
    LengthMismatch,
    MalformedDate,
    ParseError,
    StopwordQueryTerm,
    UncommittedIndex,
    UnknownAggregation,
    ZeroVariance,
)
from .index import PositionalIndex, build_index, load_snapshot, save_snapshot
from .ingest import Doc, IngestResult, Reject, ingest_tree, read_ndjson, write_ndjson
from .query import (
    MatchSet,
    ProximityQuery,
    aggregate_by_date,
    count_stats,
    default_suite,
    proximity_match,
    query_stem,
    read_counts_csv,
    run_query_suite,
    write_counts_csv,
)
from .stemming import stem
from .timeseries import (
    AlignedPair,
    ElectionRecord,
    IndicatorSeries,
    align,
    counts_to_annual,
    load_elections,
    load_indicator,
    pearson,
    to_annual,
)

__version__ = "0.1.0"

__all__ = [
    "STOPWORDS",
    "analyze",
    "tokenize",
    "stem",
    "Doc",
    "IngestResult",
    "Reject",
    "ingest_tree",
    "read_ndjson",
    "write_ndjson",
    "PositionalIndex",
    "build_index",
    "save_snapshot",
    "load_snapshot",
    "ProximityQuery",
    "MatchSet",
    "proximity_match",
    "aggregate_by_date",
    "default_suite",
    "run_query_suite",
    "query_stem",
    "count_stats",
    "write_counts_csv",
    "read_counts_csv",
    "IndicatorSeries",
    "AlignedPair",
    "ElectionRecord",
    "load_indicator",
    "load_elections",
    "to_annual",
    "counts_to_annual",
    "align",
    "pearson",
    "CrmineError",
    "MalformedDate",
    "ParseError",
    "EmptySeries",
    "CommittedIndex",
    "UncommittedIndex",
    "CorruptSnapshot",
    "StopwordQueryTerm",
    "InvalidQueryTerm",
    "LengthMismatch",
    "ZeroVariance",
    "InsufficientOverlap",
    "UnknownAggregation",
    "__version__",
]
