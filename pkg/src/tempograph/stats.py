"""Temporal graph statistics over snapshot sequences.

Per-snapshot counts, average node activity, average degree series, the
new-vs-repeated edge decomposition (TEA), the unique-edge presence raster
(TET), and the three summary indices:

* novelty       -- mean over snapshots of |E_t \\ E_seen| / |E_t|, where
                   E_seen is everything observed in earlier snapshots;
* reoccurrence  -- |E_train & E_test| / |E_train|;
* surprise      -- |E_test \\ E_train| / |E_test|.

Set counts are exact integers; quotients are taken last, in double
precision.  All functions are pure and deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Collection

import numpy as np

from .core import (
    EdgeKey,
    EventStream,
    SnapshotSequence,
    num_unique_edges,
    unique_timestamps,
)
from .errors import EmptyTest, EmptyTrain, TooManyRows
from .transform import Granularity, SplitSpec, discretize, split_edge_code_arrays

TET_ROW_CAP = 100_000


@dataclass(frozen=True)
class SnapshotCounts:
    """Per-snapshot node count, unique edge count and raw event count."""

    num_nodes: tuple[int, ...]
    num_edges_unique: tuple[int, ...]
    num_events: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.num_nodes)


@dataclass(frozen=True)
class DegreeSeries:
    """Average degree per snapshot; empty snapshots carry 0 and are
    excluded from the overall mean."""

    avg_degree: tuple[float, ...]
    overall_mean: float

    def __len__(self) -> int:
        return len(self.avg_degree)


@dataclass(frozen=True)
class TeaSeries:
    """Per snapshot: edges never seen before vs. edges seen earlier."""

    new: tuple[int, ...]
    repeated: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.new)


@dataclass(eq=False)
class TetMatrix:
    """Unique-edge x snapshot presence raster.

    Rows are ordered by (first_seen asc, last_seen asc, src asc, dst asc);
    ``presence`` is a rows x snapshots uint8 matrix whose column sums equal
    the per-snapshot unique edge counts.
    """

    edges: tuple[EdgeKey, ...]
    first_seen: tuple[int, ...]
    last_seen: tuple[int, ...]
    presence: np.ndarray

    @property
    def num_rows(self) -> int:
        return len(self.edges)

    @property
    def num_snapshots(self) -> int:
        return self.presence.shape[1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TetMatrix):
            return NotImplemented
        return (
            self.edges == other.edges
            and self.first_seen == other.first_seen
            and self.last_seen == other.last_seen
            and np.array_equal(self.presence, other.presence)
        )


def snapshot_counts(seq: SnapshotSequence) -> SnapshotCounts:
    """|V_t|, |E_t| and raw event count for every snapshot."""
    return SnapshotCounts(
        num_nodes=tuple(seq.node_counts.tolist()),
        num_edges_unique=tuple(seq.unique_edge_counts.tolist()),
        num_events=tuple(seq.event_counts.tolist()),
    )


def average_node_activity(seq: SnapshotSequence, include_empty: bool = True) -> float:
    """Mean over all stream nodes of the fraction of snapshots they appear in.

    With ``include_empty`` (the default) the denominator is the total
    snapshot count; otherwise only snapshots that contain edges count.
    """
    _, nodes = seq.node_pairs
    per_node = np.bincount(nodes, minlength=seq.stream.num_nodes)
    t = seq.num_snapshots if include_empty else int((seq.unique_edge_counts > 0).sum())
    return float(np.mean(per_node / t))


def average_degree_series(seq: SnapshotSequence) -> DegreeSeries:
    """Average degree 2|E_t| / |V_t| per snapshot over deduplicated edges.

    Each unique directed edge contributes one degree to each endpoint, so a
    self-loop adds 2 to its node.  Empty snapshots carry 0 and are excluded
    from the overall mean.
    """
    e = seq.unique_edge_counts
    v = seq.node_counts
    nonempty = v > 0
    avg = np.zeros(seq.num_snapshots, dtype=np.float64)
    avg[nonempty] = 2.0 * e[nonempty] / v[nonempty]
    overall = float(np.mean(avg[nonempty])) if nonempty.any() else 0.0
    return DegreeSeries(avg_degree=tuple(avg.tolist()), overall_mean=overall)


def tea_series(seq: SnapshotSequence) -> TeaSeries:
    """Per-snapshot split of E_t into never-seen-before vs. seen-earlier edges."""
    _, first, _ = seq.edge_spans
    new = np.bincount(first, minlength=seq.num_snapshots)
    repeated = seq.unique_edge_counts - new
    return TeaSeries(new=tuple(new.tolist()), repeated=tuple(repeated.tolist()))


def tet_matrix(seq: SnapshotSequence, row_cap: int = TET_ROW_CAP) -> TetMatrix:
    """Presence raster of every unique edge across snapshots.

    Raises TooManyRows when the unique-edge count exceeds ``row_cap``;
    sub-sample the stream first instead of truncating.
    """
    codes, first, last = seq.edge_spans
    rows = len(codes)
    if rows > row_cap:
        raise TooManyRows(f"{rows} unique edges exceed the row cap {row_cap}; sub-sample first")
    n = seq.stream.num_nodes
    src = codes // n
    dst = codes % n
    order = np.lexsort((dst, src, last, first))
    presence = np.zeros((rows, seq.num_snapshots), dtype=np.uint8)
    if rows:
        inv = np.empty(rows, dtype=np.int64)
        inv[order] = np.arange(rows, dtype=np.int64)
        pair_bins, pair_codes = seq.edge_pairs
        row_idx = inv[np.searchsorted(codes, pair_codes)]
        presence[row_idx, pair_bins] = 1
    return TetMatrix(
        edges=tuple(EdgeKey(s, d) for s, d in zip(src[order].tolist(), dst[order].tolist())),
        first_seen=tuple(first[order].tolist()),
        last_seen=tuple(last[order].tolist()),
        presence=presence,
    )


def novelty(seq: SnapshotSequence, include_empty: bool = False) -> float:
    """Mean fraction of never-seen-before edges per snapshot.

    Snapshots without edges are excluded from the denominator by default
    (their ratio is 0/0); ``include_empty=True`` keeps them in the
    denominator while contributing nothing to the sum.
    """
    _, first, _ = seq.edge_spans
    new = np.bincount(first, minlength=seq.num_snapshots)
    e = seq.unique_edge_counts
    nonempty = e > 0
    ratios = new[nonempty] / e[nonempty]
    denom = seq.num_snapshots if include_empty else len(ratios)
    return float(ratios.sum() / denom)


def reoccurrence(train: Collection[EdgeKey], test: Collection[EdgeKey]) -> float:
    """Fraction of train edges that appear again in the test side."""
    if not train:
        raise EmptyTrain("reoccurrence needs a nonempty train edge set")
    train_set = train if isinstance(train, (set, frozenset)) else set(train)
    test_set = test if isinstance(test, (set, frozenset)) else set(test)
    return len(train_set & test_set) / len(train_set)


def surprise(train: Collection[EdgeKey], test: Collection[EdgeKey]) -> float:
    """Fraction of test edges never seen on the train side."""
    if not test:
        raise EmptyTest("surprise needs a nonempty test edge set")
    train_set = train if isinstance(train, (set, frozenset)) else set(train)
    test_set = test if isinstance(test, (set, frozenset)) else set(test)
    return len(test_set - train_set) / len(test_set)


@dataclass(frozen=True)
class StatsReport:
    """One summary record: counts, duration, and the four indices."""

    num_nodes: int
    num_events: int
    num_unique_edges: int
    num_unique_steps: int
    duration: tuple[int, int, str]
    reoccurrence: float
    surprise: float
    node_activity: float
    novelty: float
    discretization_tag: str

    def __post_init__(self) -> None:
        for name in ("reoccurrence", "surprise", "node_activity", "novelty"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value}")

    def to_dict(self) -> dict:
        t_min, t_max, unit = self.duration
        return {
            "num_nodes": self.num_nodes,
            "num_events": self.num_events,
            "num_unique_edges": self.num_unique_edges,
            "num_unique_steps": self.num_unique_steps,
            "duration": {"t_min": t_min, "t_max": t_max, "unit": unit},
            "reoccurrence": self.reoccurrence,
            "surprise": self.surprise,
            "node_activity": self.node_activity,
            "novelty": self.novelty,
            "discretization_tag": self.discretization_tag,
        }

    def to_json(self) -> str:
        """JSON document with stable key order."""
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_table(self) -> str:
        """Aligned single-row plain-text table."""
        headers = [
            "Nodes", "Total Edges", "Unique Edges", "Unique Steps", "Duration",
            "Reoccurrence", "Surprise", "Node Activity", "Novelty", "Disc.",
        ]
        t_min, t_max, unit = self.duration
        cells = [
            f"{self.num_nodes:,}",
            f"{self.num_events:,}",
            f"{self.num_unique_edges:,}",
            f"{self.num_unique_steps:,}",
            f"[{t_min}, {t_max}] {unit}",
            f"{self.reoccurrence:.3f}",
            f"{self.surprise:.3f}",
            f"{self.node_activity:.3f}",
            f"{self.novelty:.3f}",
            self.discretization_tag,
        ]
        widths = [max(len(h), len(c)) for h, c in zip(headers, cells)]
        head = "  ".join(h.ljust(w) for h, w in zip(headers, widths))
        row = "  ".join(c.ljust(w) for c, w in zip(cells, widths))
        return f"{head}\n{row}\n"


def summarize(
    stream: EventStream,
    g: Granularity,
    spec: SplitSpec = SplitSpec(),
    activity_include_empty: bool = True,
) -> StatsReport:
    """Discretize, split, and compute every StatsReport field."""
    seq = discretize(stream, g)
    # array view of chronological_split: same boundary, same edge sets,
    # without materializing millions of Python tuples
    train_codes, test_codes = split_edge_code_arrays(stream, spec)
    shared = int(np.intersect1d(train_codes, test_codes, assume_unique=True).size)
    return StatsReport(
        num_nodes=stream.num_nodes,
        num_events=stream.num_events,
        num_unique_edges=num_unique_edges(stream),
        num_unique_steps=unique_timestamps(stream),
        duration=(stream.t_min, stream.t_max, stream.time_unit or "unknown"),
        reoccurrence=shared / len(train_codes),
        surprise=(len(test_codes) - shared) / len(test_codes),
        node_activity=average_node_activity(seq, include_empty=activity_include_empty),
        novelty=novelty(seq),
        discretization_tag=seq.granularity_tag,
    )
