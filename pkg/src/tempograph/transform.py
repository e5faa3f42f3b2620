"""Stream transforms: discretization, node sub-sampling, chronological split.

Discretization partitions the observation window [t_min, t_max] into
equal-width intervals and buckets every event; empty intervals are
retained so downstream time axes stay fixed.  All operations are pure and
deterministic: the same inputs produce bit-identical outputs on every
platform and thread count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable

import numpy as np

from .core import INT64_MAX, EventStream, SnapshotSequence, assemble_stream
from .errors import (
    CountTooLarge,
    DegenerateSplit,
    EmptyResult,
    InvalidBins,
    UnitMismatch,
)

NAMED_WIDTHS = {
    "daily": 86_400,
    "weekly": 604_800,
    "monthly": 2_592_000,
    "yearly": 31_536_000,
}


@dataclass(frozen=True)
class Granularity:
    """Either a named fixed width in Unix seconds or an integer bin count."""

    name: str | None = None
    bins: int | None = None

    def __post_init__(self) -> None:
        if (self.name is None) == (self.bins is None):
            raise ValueError("specify exactly one of name / bins")
        if self.name is not None and self.name not in NAMED_WIDTHS:
            raise ValueError(f"unknown granularity {self.name!r}; expected one of {sorted(NAMED_WIDTHS)}")
        if self.bins is not None and self.bins < 1:
            raise InvalidBins(f"bin count must be >= 1, got {self.bins}")

    @property
    def tag(self) -> str:
        return self.name if self.name is not None else f"bins:{self.bins}"

    @classmethod
    def parse(cls, text: str) -> "Granularity":
        """Parse 'daily' | 'weekly' | 'monthly' | 'yearly' | 'bins:<k>' | '<k>'."""
        if text in NAMED_WIDTHS:
            return cls(name=text)
        raw = text.split(":", 1)[1] if text.startswith("bins:") else text
        try:
            k = int(raw)
        except ValueError:
            raise ValueError(f"cannot parse granularity {text!r}") from None
        return cls(bins=k)


@dataclass(frozen=True)
class SplitSpec:
    """Chronological train/test split by event count."""

    train_fraction: float = 0.85

    def __post_init__(self) -> None:
        if not 0.0 < self.train_fraction < 1.0:
            raise ValueError(f"train_fraction must lie in (0, 1), got {self.train_fraction}")


def _bin_bounds(t_min: int, span: int, k: int) -> np.ndarray:
    # Integer partition induced by the exact rational width span / k:
    # bounds[i] = t_min + ceil(i * span / k), so bounds[k] == t_max + 1.
    return np.array([t_min + (i * span + k - 1) // k for i in range(k + 1)], dtype=np.int64)


def discretize_bins(stream: EventStream, k: int) -> SnapshotSequence:
    """Divide [t_min, t_max] into exactly k equal intervals and bucket events.

    The interval width is (t_max - t_min + 1) / k in exact rational
    arithmetic; an event at time t lands in snapshot
    floor((t - t_min) / width), clamped to k - 1.  Empty snapshots are
    retained, so the result always has exactly k snapshots and the
    per-snapshot event counts sum to num_events.
    """
    if k < 1:
        raise InvalidBins(f"bin count must be >= 1, got {k}")
    t_min = stream.t_min
    span = stream.t_max - t_min + 1
    # floor(d / (span/k)) == (d * k) // span, exact in integers.
    if (span - 1) * k <= INT64_MAX:
        bins = ((stream.time - np.int64(t_min)) * np.int64(k)) // np.int64(span)
    else:
        bins = np.array(
            [((int(t) - t_min) * k) // span for t in stream.time], dtype=np.int64
        )
    np.minimum(bins, k - 1, out=bins)
    return SnapshotSequence(
        stream=stream,
        bins=bins,
        num_snapshots=k,
        bounds=_bin_bounds(t_min, span, k),
        granularity_tag=f"bins:{k}",
    )


def discretize_granularity(stream: EventStream, g: Granularity) -> SnapshotSequence:
    """Bucket events into fixed-width intervals anchored at t_min.

    Named granularities assume Unix-second timestamps; a stream whose
    declared time unit contradicts that is rejected.  Months and years are
    fixed 30-day / 365-day widths so that all intervals stay equal.
    """
    if g.name is None:
        raise ValueError("discretize_granularity requires a named granularity")
    if stream.time_unit is not None and stream.time_unit != "unix_seconds":
        raise UnitMismatch(
            f"granularity {g.name!r} needs unix_seconds timestamps, stream declares {stream.time_unit!r}"
        )
    width = NAMED_WIDTHS[g.name]
    t_min = stream.t_min
    bins = (stream.time - np.int64(t_min)) // np.int64(width)
    k = int(bins[-1]) + 1 if len(bins) else 1
    bounds = np.empty(k + 1, dtype=np.int64)
    bounds[:k] = t_min + width * np.arange(k, dtype=np.int64)
    bounds[k] = stream.t_max + 1
    return SnapshotSequence(
        stream=stream,
        bins=bins,
        num_snapshots=k,
        bounds=bounds,
        granularity_tag=g.name,
    )


def discretize(stream: EventStream, g: Granularity) -> SnapshotSequence:
    """Dispatch to bin-count or named-width discretization."""
    if g.bins is not None:
        return discretize_bins(stream, g.bins)
    return discretize_granularity(stream, g)


def subsample(stream: EventStream, nodes: Iterable[int]) -> EventStream:
    """Restrict the stream to events touching the given node set.

    Keeps exactly the events whose source OR destination lies in ``nodes``,
    preserves event order, re-densifies node IDs by first appearance in the
    surviving events, and carries the label table over.
    """
    node_arr = np.unique(np.asarray(list(nodes), dtype=np.int64))
    if len(node_arr) == 0:
        raise ValueError("node set must be nonempty")
    mask = np.isin(stream.src, node_arr) | np.isin(stream.dst, node_arr)
    if not mask.any():
        raise EmptyResult("no events touch the given node set")
    src, dst, time = stream.src[mask], stream.dst[mask], stream.time[mask]
    interleaved = np.empty(2 * len(src), dtype=np.int64)
    interleaved[0::2] = src
    interleaved[1::2] = dst
    old_ids, first_pos = np.unique(interleaved, return_index=True)
    old_in_order = old_ids[np.argsort(first_pos, kind="stable")]
    remap = np.empty(stream.num_nodes, dtype=np.int64)
    remap[old_in_order] = np.arange(len(old_in_order), dtype=np.int64)
    labels = tuple(stream.labels[o] for o in old_in_order.tolist())
    # mask preserves the original (sorted, stable) event order
    return EventStream(
        src=remap[src], dst=remap[dst], time=time, labels=labels, time_unit=stream.time_unit
    )


_MASK64 = (1 << 64) - 1


def _splitmix64_stream(seed: int):
    """SplitMix64 generator (Vigna's reference constants), 64-bit outputs."""
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def sample_nodes(num_nodes: int, count: int, seed: int) -> list[int]:
    """Draw ``count`` distinct node IDs uniformly, portably reproducible.

    Algorithm (fixed; reimplementable bit-for-bit in any language):
    a SplitMix64 stream seeded with ``seed`` feeds a partial Fisher-Yates
    shuffle of [0, num_nodes).  Each swap index is drawn by rejection
    sampling: draw 64-bit u until u < 2**64 - (2**64 mod m), return u mod m.
    """
    rng = _splitmix64_stream(seed)

    def bounded(m: int) -> int:
        limit = (1 << 64) - ((1 << 64) % m)
        while True:
            u = next(rng)
            if u < limit:
                return u % m

    pool = list(range(num_nodes))
    for i in range(count):
        j = i + bounded(num_nodes - i)
        pool[i], pool[j] = pool[j], pool[i]
    return pool[:count]


def subsample_random(stream: EventStream, count: int, seed: int) -> EventStream:
    """Sub-sample around ``count`` random nodes drawn without replacement.

    Same (stream, count, seed) always selects the same node subset on every
    platform; see :func:`sample_nodes` for the pinned algorithm.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if count > stream.num_nodes:
        raise CountTooLarge(f"count {count} exceeds num_nodes {stream.num_nodes}")
    return subsample(stream, sample_nodes(stream.num_nodes, count, seed))


def _split_index(stream: EventStream, spec: SplitSpec) -> int:
    n = stream.num_events
    if n < 2:
        raise DegenerateSplit("need at least 2 events to split")
    # Interpret the fraction via its shortest decimal form so that e.g.
    # 0.7 * 10 floors to 7, not 6 (binary 0.7 is slightly below 7/10).
    m = int(Fraction(str(spec.train_fraction)) * n)
    if m == 0:
        raise DegenerateSplit("train side would be empty")
    if m < n and stream.time[m - 1] == stream.time[m]:
        # No timestamp may straddle the boundary: push sharers into train.
        m = int(np.searchsorted(stream.time, stream.time[m - 1], side="right"))
    if m >= n:
        raise DegenerateSplit("test side would be empty")
    return m


def _edge_set(stream: EventStream, lo: int, hi: int) -> set:
    codes = np.unique(stream.edge_codes[lo:hi])
    n = stream.num_nodes
    return set(zip((codes // n).tolist(), (codes % n).tolist()))


def chronological_split(stream: EventStream, spec: SplitSpec = SplitSpec()) -> tuple[set, set]:
    """Split events by time order into train/test edge sets.

    Let m = floor(train_fraction * num_events): events [0, m) are train and
    the rest test, with m advanced so every event sharing the boundary
    timestamp lands in train.  Returns the deduplicated directed edge sets
    of each side.
    """
    m = _split_index(stream, spec)
    return _edge_set(stream, 0, m), _edge_set(stream, m, stream.num_events)


def split_edge_code_arrays(stream: EventStream, spec: SplitSpec = SplitSpec()) -> tuple[np.ndarray, np.ndarray]:
    """Sorted unique edge codes of each split side.

    Array view of :func:`chronological_split` for multi-million-edge
    streams where materializing Python sets is wasteful; same boundary
    rule, same edges.
    """
    m = _split_index(stream, spec)
    return np.unique(stream.edge_codes[:m]), np.unique(stream.edge_codes[m:])


def write_discretized_edgelist(seq: SnapshotSequence, out: IO[str], delimiter: str = ",") -> None:
    """Export one line per event with the snapshot index replacing the timestamp."""
    labels = seq.stream.labels
    src = seq.stream.src.tolist()
    dst = seq.stream.dst.tolist()
    bins = seq.bins.tolist()
    out.writelines(
        f"{labels[s]}{delimiter}{labels[d]}{delimiter}{b}\n" for s, d, b in zip(src, dst, bins)
    )


def write_stream_edgelist(stream: EventStream, out: IO[str], delimiter: str = ",") -> None:
    """Export one (label, label, timestamp) line per event, in stream order."""
    out.writelines(
        f"{a}{delimiter}{b}{delimiter}{t}\n" for a, b, t in stream.triplets()
    )
