"""In-memory temporal graph model.

An :class:`EventStream` is a time-sorted stream of directed, timestamped
edge events (the continuous-time view).  A :class:`SnapshotSequence` is the
discrete-time view: contiguous equal-width intervals, each carrying the
deduplicated edge set of the events that fall inside it.

Both containers are immutable after construction and safe to share across
threads.  Internally they are backed by int64 numpy arrays so that streams
with tens of millions of events stay cheap; the object-level views
(:class:`EdgeEvent`, :class:`Snapshot`) are materialized lazily.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from .errors import EmptyInput, TimestampOverflow

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


class EdgeKey(NamedTuple):
    """Directed edge identity: (src, dst) with exact component equality."""

    src: int
    dst: int


class EdgeEvent(NamedTuple):
    """One timestamped directed edge occurrence."""

    src: int
    dst: int
    time: int


def _as_int_timestamp(t: object) -> int:
    """Coerce a timestamp to int; fractional values are rejected, not floored."""
    if isinstance(t, (int, np.integer)):
        return int(t)
    if isinstance(t, float):
        if t.is_integer():
            return int(t)
        raise TimestampOverflow(f"timestamp {t!r} is fractional, not an integer")
    raise TimestampOverflow(f"timestamp {t!r} is not an integer")


def _to_int64(values: Sequence[int] | np.ndarray, what: str) -> np.ndarray:
    try:
        return np.asarray(values, dtype=np.int64)
    except (OverflowError, ValueError) as exc:
        raise TimestampOverflow(f"{what} not representable as 64-bit signed integer: {exc}") from None


def unique_pairs(a: np.ndarray, b: np.ndarray, b_cardinality: int) -> tuple[np.ndarray, np.ndarray]:
    """Deduplicated (a, b) pairs, lexicographically sorted by (a, b).

    Uses a single int64 encoding when ``max(a) * b_cardinality`` fits,
    otherwise a two-column lexsort.  ``b`` must lie in [0, b_cardinality).
    """
    if len(a) == 0:
        return a[:0].copy(), b[:0].copy()
    a_max = int(a.max())
    if b_cardinality > 0 and (a_max + 1) * b_cardinality - 1 <= INT64_MAX:
        codes = np.unique(a * np.int64(b_cardinality) + b)
        return codes // b_cardinality, codes % b_cardinality
    order = np.lexsort((b, a))
    sa, sb = a[order], b[order]
    keep = np.empty(len(sa), dtype=bool)
    keep[0] = True
    keep[1:] = (sa[1:] != sa[:-1]) | (sb[1:] != sb[:-1])
    return sa[keep], sb[keep]


@dataclass(eq=False)
class EventStream:
    """Time-sorted directed edge events with dense node IDs.

    ``labels[i]`` is the original label of node ``i``; IDs form the
    contiguous range [0, num_nodes).  Duplicate (src, dst, time) events are
    retained: the stream is a multiset.  ``time`` is nondecreasing and the
    sort is stable with respect to construction order.
    """

    src: np.ndarray
    dst: np.ndarray
    time: np.ndarray
    labels: tuple[str, ...]
    time_unit: str | None = None

    def __post_init__(self) -> None:
        if len(self.src) == 0:
            raise EmptyInput("event stream must contain at least one event")
        if not (len(self.src) == len(self.dst) == len(self.time)):
            raise ValueError("src/dst/time arrays must have equal length")

    # -- meta ---------------------------------------------------------------
    @property
    def num_events(self) -> int:
        return len(self.time)

    @property
    def num_nodes(self) -> int:
        return len(self.labels)

    @property
    def t_min(self) -> int:
        return int(self.time[0])

    @property
    def t_max(self) -> int:
        return int(self.time[-1])

    @property
    def meta(self) -> dict:
        return {
            "t_min": self.t_min,
            "t_max": self.t_max,
            "num_nodes": self.num_nodes,
            "num_events": self.num_events,
        }

    # -- views --------------------------------------------------------------
    def __len__(self) -> int:
        return self.num_events

    def __iter__(self) -> Iterator[EdgeEvent]:
        for s, d, t in zip(self.src.tolist(), self.dst.tolist(), self.time.tolist()):
            yield EdgeEvent(s, d, t)

    def events(self) -> Iterator[EdgeEvent]:
        return iter(self)

    def triplets(self) -> Iterator[tuple[str, str, int]]:
        """Relabeled (label, label, time) view; reproduces the input multiset."""
        labels = self.labels
        for s, d, t in zip(self.src.tolist(), self.dst.tolist(), self.time.tolist()):
            yield (labels[s], labels[d], t)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EventStream):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.time_unit == other.time_unit
            and np.array_equal(self.src, other.src)
            and np.array_equal(self.dst, other.dst)
            and np.array_equal(self.time, other.time)
        )

    @cached_property
    def edge_codes(self) -> np.ndarray:
        """Per-event directed edge identity encoded as src * num_nodes + dst."""
        n = self.num_nodes
        if n * n - 1 > INT64_MAX:
            raise OverflowError("node count too large for int64 edge encoding")
        return self.src * np.int64(n) + self.dst


def assemble_stream(
    src_ids: Sequence[int] | np.ndarray,
    dst_ids: Sequence[int] | np.ndarray,
    times: Sequence[int] | np.ndarray,
    labels: Sequence[str],
    time_unit: str | None = None,
) -> EventStream:
    """Build an EventStream from pre-interned dense IDs (stable time sort)."""
    src = _to_int64(src_ids, "node id")
    dst = _to_int64(dst_ids, "node id")
    time = _to_int64(times, "timestamp")
    if len(time) == 0:
        raise EmptyInput("no events")
    order = np.argsort(time, kind="stable")
    return EventStream(
        src=src[order],
        dst=dst[order],
        time=time[order],
        labels=tuple(labels),
        time_unit=time_unit,
    )


def build_stream(
    raw_triplets: Iterable[tuple[str, str, int]],
    time_unit: str | None = None,
    undirected: bool = False,
) -> EventStream:
    """Build an EventStream from (label, label, timestamp) triplets.

    Dense node IDs are assigned in order of first appearance of each label
    in the input; events are then stably sorted by timestamp.  With
    ``undirected=True`` each event's endpoints are sorted so that (u, v)
    and (v, u) collapse to one directed identity.
    """
    ids: dict[str, int] = {}
    src_ids: list[int] = []
    dst_ids: list[int] = []
    times: list[int] = []
    for a, b, t in raw_triplets:
        ia = ids.setdefault(a, len(ids))
        ib = ids.setdefault(b, len(ids))
        if undirected and ib < ia:
            ia, ib = ib, ia
        src_ids.append(ia)
        dst_ids.append(ib)
        times.append(_as_int_timestamp(t))
    if not times:
        raise EmptyInput("no triplets")
    return assemble_stream(src_ids, dst_ids, times, list(ids), time_unit=time_unit)


def unique_edges(stream: EventStream) -> set[EdgeKey]:
    """Deduplicated set of directed (src, dst) pairs over all events."""
    codes = np.unique(stream.edge_codes)
    n = stream.num_nodes
    return set(zip((codes // n).tolist(), (codes % n).tolist()))


def num_unique_edges(stream: EventStream) -> int:
    """Count of distinct directed edges (cheaper than materializing the set)."""
    return len(np.unique(stream.edge_codes))


def unique_timestamps(stream: EventStream) -> int:
    """Number of distinct timestamp values in the stream."""
    return len(np.unique(stream.time))


@dataclass(frozen=True)
class Snapshot:
    """One discretization interval with its deduplicated edge set.

    The interval is [start, end), except the last snapshot of a sequence
    which is right-closed ([start, end] with end == t_max), flagged by
    ``closed``.
    """

    index: int
    start: int
    end: int
    closed: bool
    edges: frozenset[EdgeKey]
    nodes: frozenset[int]
    event_count: int


@dataclass(eq=False)
class SnapshotSequence:
    """Ordered equal-width snapshots covering [t_min, t_max].

    ``bins[e]`` is the snapshot index of event ``e`` of the source stream;
    ``bounds`` holds the ``num_snapshots + 1`` half-open integer interval
    boundaries (bounds[0] == t_min, bounds[-1] == t_max + 1).  For
    bin-count discretization the integer boundaries are the partition
    induced by the exact rational width (t_max - t_min + 1) / k, so
    consecutive widths may differ by one time unit.

    Empty snapshots are retained; the sum of per-snapshot event counts
    always equals the source stream's num_events.
    """

    stream: EventStream
    bins: np.ndarray
    num_snapshots: int
    bounds: np.ndarray
    granularity_tag: str

    def __post_init__(self) -> None:
        if len(self.bins) != self.stream.num_events:
            raise ValueError("one bin index per source event required")
        if len(self.bounds) != self.num_snapshots + 1:
            raise ValueError("bounds must have num_snapshots + 1 entries")

    @property
    def source_meta(self) -> dict:
        return self.stream.meta

    def __len__(self) -> int:
        return self.num_snapshots

    # -- vectorized internals (shared by the stats module) -------------------
    @cached_property
    def event_counts(self) -> np.ndarray:
        """Raw event count per snapshot (empty snapshots -> 0)."""
        return np.bincount(self.bins, minlength=self.num_snapshots)

    @cached_property
    def edge_pairs(self) -> tuple[np.ndarray, np.ndarray]:
        """Unique (snapshot, edge_code) pairs, sorted by (snapshot, code)."""
        n = self.stream.num_nodes
        return unique_pairs(self.bins, self.stream.edge_codes, n * n)

    @cached_property
    def unique_edge_counts(self) -> np.ndarray:
        """|E_t| per snapshot: deduplicated directed edge count."""
        pair_bins, _ = self.edge_pairs
        return np.bincount(pair_bins, minlength=self.num_snapshots)

    @cached_property
    def node_pairs(self) -> tuple[np.ndarray, np.ndarray]:
        """Unique (snapshot, node) pairs over edge endpoints, sorted."""
        pair_bins, pair_codes = self.edge_pairs
        n = self.stream.num_nodes
        both_bins = np.concatenate([pair_bins, pair_bins])
        both_nodes = np.concatenate([pair_codes // n, pair_codes % n])
        return unique_pairs(both_bins, both_nodes, n)

    @cached_property
    def node_counts(self) -> np.ndarray:
        """|V_t| per snapshot: distinct endpoints of that snapshot's edges."""
        nbins, _ = self.node_pairs
        return np.bincount(nbins, minlength=self.num_snapshots)

    @cached_property
    def edge_spans(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(edge_code, first_seen, last_seen) per unique edge, sorted by code."""
        pair_bins, pair_codes = self.edge_pairs
        if len(pair_codes) == 0:
            empty = pair_codes[:0].copy()
            return empty, empty.copy(), empty.copy()
        # edge_pairs is sorted by (bin, code); a stable re-sort by code keeps
        # bins ascending inside each code group.
        order = np.argsort(pair_codes, kind="stable")
        codes_s = pair_codes[order]
        bins_s = pair_bins[order]
        starts = np.empty(len(codes_s), dtype=bool)
        starts[0] = True
        starts[1:] = codes_s[1:] != codes_s[:-1]
        ends = np.empty(len(codes_s), dtype=bool)
        ends[-1] = True
        ends[:-1] = starts[1:]
        return codes_s[starts], bins_s[starts], bins_s[ends]

    # -- object views ---------------------------------------------------------
    def interval(self, i: int) -> tuple[int, int, bool]:
        """(start, end, closed) of snapshot i; closed means end inclusive."""
        if i == self.num_snapshots - 1:
            return int(self.bounds[i]), self.stream.t_max, True
        return int(self.bounds[i]), int(self.bounds[i + 1]), False

    def __getitem__(self, i: int) -> Snapshot:
        if not 0 <= i < self.num_snapshots:
            raise IndexError(i)
        pair_bins, pair_codes = self.edge_pairs
        lo = np.searchsorted(pair_bins, i, side="left")
        hi = np.searchsorted(pair_bins, i, side="right")
        n = self.stream.num_nodes
        codes = pair_codes[lo:hi]
        edges = frozenset(
            EdgeKey(s, d) for s, d in zip((codes // n).tolist(), (codes % n).tolist())
        )
        nodes = frozenset(c for e in edges for c in e)
        start, end, closed = self.interval(i)
        return Snapshot(
            index=i,
            start=start,
            end=end,
            closed=closed,
            edges=edges,
            nodes=nodes,
            event_count=int(self.event_counts[i]),
        )

    def __iter__(self) -> Iterator[Snapshot]:
        for i in range(self.num_snapshots):
            yield self[i]
