"""Exception hierarchy shared by all tempograph modules."""

from __future__ import annotations


class TempographError(Exception):
    """Base class for every error raised by this package."""


class EmptyInput(TempographError):
    """No data rows / triplets were supplied."""


class TimestampOverflow(TempographError):
    """A timestamp does not fit into a 64-bit signed integer."""


class ParseError(TempographError):
    """A malformed edge-list line. Carries the 1-based line number."""

    def __init__(self, line_no: int, reason: str):
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"line {line_no}: {reason}")


class UnknownDataset(TempographError):
    """Dataset name not present in the manifest."""


class NetworkError(TempographError):
    """Download failed or no URL is pinned for the dataset."""


class ChecksumMismatch(TempographError):
    """Downloaded or cached file does not match the recorded sha256."""


class InvalidBins(TempographError):
    """Bin count must be a positive integer."""


class UnitMismatch(TempographError):
    """Named granularities require unix-second timestamps."""


class EmptyResult(TempographError):
    """A transform produced an empty event stream."""


class CountTooLarge(TempographError):
    """Requested more random nodes than the stream contains."""


class DegenerateSplit(TempographError):
    """Chronological split left train or test empty."""


class EmptyTrain(TempographError):
    """Reoccurrence is undefined for an empty train edge set."""


class EmptyTest(TempographError):
    """Surprise is undefined for an empty test edge set."""


class EmptySeries(TempographError):
    """Chart rendering needs at least one data point."""


class TooManyRows(TempographError):
    """Unique-edge count exceeds the raster row cap; sub-sample first."""
