"""Domain errors shared across the package.

Every error carries a stable ``code`` string so the command line layer can
print ``ERROR <code>: <detail>`` without inspecting types.
"""

from __future__ import annotations


class CrmineError(Exception):
    """Base class for all domain errors."""

    code = "Error"


class MalformedDate(CrmineError):
    """A date string that none of the accepted formats can parse."""

    code = "MalformedDate"

    def __init__(self, source: str, raw):
        super().__init__(f"unparseable date {raw!r} in {source}")
        self.source = source
        self.raw = raw


class ParseError(CrmineError):
    """Structurally unreadable input (bad JSON, bad CSV row)."""

    code = "ParseError"


class EmptySeries(CrmineError):
    """An indicator series with fewer than two points."""

    code = "EmptySeries"


class CommittedIndex(CrmineError):
    """Write attempted on an index that is already committed."""

    code = "CommittedIndex"


class UncommittedIndex(CrmineError):
    """Query or snapshot attempted before commit."""

    code = "UncommittedIndex"


class CorruptSnapshot(CrmineError):
    """An index snapshot failing structural validation."""

    code = "CorruptSnapshot"


class StopwordQueryTerm(CrmineError):
    """A query keyword that the analyzer eliminates."""

    code = "StopwordQueryTerm"


class InvalidQueryTerm(CrmineError):
    """A query keyword that does not analyze to exactly one term."""

    code = "InvalidQueryTerm"


class LengthMismatch(CrmineError):
    """Paired series of unequal length."""

    code = "LengthMismatch"


class ZeroVariance(CrmineError):
    """A constant series, for which correlation is undefined."""

    code = "ZeroVariance"


class InsufficientOverlap(CrmineError):
    """Fewer than three usable observations after alignment."""

    code = "InsufficientOverlap"


class UnknownAggregation(CrmineError):
    """An aggregation rule name that is not registered."""

    code = "UnknownAggregation"
