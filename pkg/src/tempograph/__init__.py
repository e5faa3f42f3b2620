"""Temporal graph analytics: edge-stream model, discretization, statistics,
and deterministic figure rendering."""

from .core import (
    EdgeEvent,
    EdgeKey,
    EventStream,
    Snapshot,
    SnapshotSequence,
    build_stream,
    num_unique_edges,
    unique_edges,
    unique_timestamps,
)
from .errors import TempographError
from .ingest import (
    DatasetEntry,
    DatasetManifest,
    EdgeListFormat,
    fetch_dataset,
    list_datasets,
    load_dataset,
    load_manifest,
    read_edgelist,
)
from .stats import (
    DegreeSeries,
    SnapshotCounts,
    StatsReport,
    TeaSeries,
    TetMatrix,
    average_degree_series,
    average_node_activity,
    novelty,
    reoccurrence,
    snapshot_counts,
    summarize,
    surprise,
    tea_series,
    tet_matrix,
)
from .transform import (
    Granularity,
    SplitSpec,
    chronological_split,
    discretize,
    discretize_bins,
    discretize_granularity,
    subsample,
    subsample_random,
)
from .viz import (
    ChartConfig,
    export_series,
    load_series,
    render_counts_chart,
    render_degree_chart,
    render_tea_chart,
    render_tet_chart,
)

__version__ = "0.1.0"

__all__ = [
    "ChartConfig",
    "DatasetEntry",
    "DatasetManifest",
    "DegreeSeries",
    "EdgeEvent",
    "EdgeKey",
    "EdgeListFormat",
    "EventStream",
    "Granularity",
    "Snapshot",
    "SnapshotCounts",
    "SnapshotSequence",
    "SplitSpec",
    "StatsReport",
    "TeaSeries",
    "TempographError",
    "TetMatrix",
    "average_degree_series",
    "average_node_activity",
    "build_stream",
    "chronological_split",
    "discretize",
    "discretize_bins",
    "discretize_granularity",
    "export_series",
    "fetch_dataset",
    "list_datasets",
    "load_dataset",
    "load_manifest",
    "load_series",
    "novelty",
    "num_unique_edges",
    "read_edgelist",
    "render_counts_chart",
    "render_degree_chart",
    "render_tea_chart",
    "render_tet_chart",
    "reoccurrence",
    "snapshot_counts",
    "subsample",
    "subsample_random",
    "summarize",
    "surprise",
    "tea_series",
    "tet_matrix",
    "unique_edges",
    "unique_timestamps",
]
