"""Command-line front end: fetch -> load -> transform -> stats -> render.

Every file output is written atomically (temp file + rename), so a failed
run never leaves a partial artifact.  Re-running a command with identical
flags produces byte-identical outputs.  Table output never uses ANSI
colors, so NO_COLOR needs no special handling.

Exit codes: 0 success, 1 runtime error (data, network, I/O), 2 usage error.
"""

from __future__ import annotations

import argparse
import io
import os
import sys
import tempfile
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import __version__
from .core import EventStream
from .errors import TempographError
from .ingest import (
    DatasetManifest,
    EdgeListFormat,
    fetch_dataset,
    list_datasets,
    load_manifest,
    read_edgelist,
)
from .stats import average_degree_series, snapshot_counts, summarize, tea_series, tet_matrix
from .stats import TET_ROW_CAP
from .transform import (
    Granularity,
    SplitSpec,
    discretize,
    subsample,
    subsample_random,
    write_discretized_edgelist,
    write_stream_edgelist,
)
from .viz import (
    ChartConfig,
    export_series,
    render_counts_chart,
    render_degree_chart,
    render_tea_chart,
    render_tet_chart,
)


def _write_atomic(path: Path, payload: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(payload)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def _add_data_flags(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="PATH", help="edge-list file (CSV/TSV, optionally gzipped)")
    src.add_argument("--dataset", metavar="NAME", help="manifest dataset name (fetched and cached)")
    p.add_argument("--cache-dir", metavar="DIR", help="dataset cache (default: $TEMPOGRAPH_CACHE or ~/.cache/tempograph)")
    p.add_argument("--manifest", metavar="FILE", help="JSON manifest override")
    p.add_argument("--delimiter", default=",", help="field delimiter for --input (default ',')")
    header = p.add_mutually_exclusive_group()
    header.add_argument("--header", dest="header", action="store_true", default=None, help="first row is a header")
    header.add_argument("--no-header", dest="header", action="store_false", help="first row is data")
    p.add_argument("--undirected", action="store_true", help="sort endpoints so (u,v) and (v,u) coincide")
    sub = p.add_mutually_exclusive_group()
    sub.add_argument("--subsample-random", type=int, metavar="N", help="keep events touching N random nodes")
    sub.add_argument("--subsample-nodes", metavar="FILE", help="keep events touching the node labels listed in FILE (one per line)")
    p.add_argument("--seed", type=int, default=0, help="seed for --subsample-random (default 0)")


def _add_discretize_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--bins", type=int, metavar="K", help="number of equal intervals")
    g.add_argument("--granularity", choices=["daily", "weekly", "monthly", "yearly"], help="fixed interval width (Unix-second streams)")


def _granularity(args: argparse.Namespace) -> Granularity:
    if args.bins is not None:
        return Granularity(bins=args.bins)
    return Granularity(name=args.granularity)


def _manifest(args: argparse.Namespace) -> DatasetManifest:
    if getattr(args, "manifest", None):
        return load_manifest(args.manifest)
    return list_datasets()


def _load_stream(args: argparse.Namespace) -> EventStream:
    if args.dataset:
        manifest = _manifest(args)
        entry = manifest.get(args.dataset)
        path = fetch_dataset(args.dataset, cache_dir=args.cache_dir, manifest=manifest)
        stream = read_edgelist(path, fmt=entry.format, time_unit=entry.timestamp_unit, undirected=args.undirected)
    else:
        fmt = EdgeListFormat(delimiter=args.delimiter, has_header=args.header)
        stream = read_edgelist(args.input, fmt=fmt, undirected=args.undirected)
    if args.subsample_nodes:
        wanted = Path(args.subsample_nodes).read_text(encoding="utf-8").split()
        by_label = {label: i for i, label in enumerate(stream.labels)}
        ids = [by_label[w] for w in wanted if w in by_label]
        stream = subsample(stream, ids)
    elif args.subsample_random is not None:
        stream = subsample_random(stream, args.subsample_random, args.seed)
    return stream


def _emit_text(args: argparse.Namespace, text: str) -> None:
    if args.out:
        _write_atomic(Path(args.out), text.encode("utf-8"))
    else:
        sys.stdout.write(text)


def _chart_with_export(args: argparse.Namespace, svg: bytes, series) -> None:
    out = Path(args.out)
    _write_atomic(out, svg)
    if args.format in ("csv", "json"):
        _write_atomic(out.with_suffix(f".{args.format}"), export_series(series, args.format))


def _cmd_fetch(args: argparse.Namespace) -> int:
    path = fetch_dataset(args.dataset, cache_dir=args.cache_dir, manifest=_manifest(args))
    print(path)
    return 0


def _cmd_list(args: argparse.Namespace) -> int:
    manifest = _manifest(args)
    headers = ["name", "group", "nodes", "events", "unique edges", "unique steps", "unit", "disc."]
    rows = []
    for e in manifest:
        exp = e.expected or {}
        ref = e.reference or {}
        rows.append([
            e.name,
            e.group,
            f"{exp.get('num_nodes', '?'):,}" if "num_nodes" in exp else "?",
            f"{exp.get('num_events', '?'):,}" if "num_events" in exp else "?",
            f"{exp.get('num_unique_edges', '?'):,}" if "num_unique_edges" in exp else "?",
            f"{exp.get('num_unique_steps', '?'):,}" if "num_unique_steps" in exp else "?",
            e.timestamp_unit,
            ref.get("discretization", "?"),
        ])
    widths = [max(len(headers[i]), *(len(r[i]) for r in rows)) for i in range(len(headers))]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)) for row in rows]
    print("\n".join(lines))
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    stream = _load_stream(args)
    report = summarize(stream, _granularity(args), SplitSpec(train_fraction=args.train_frac))
    _emit_text(args, report.to_json() if args.format == "json" else report.to_table())
    return 0


def _cmd_tea(args: argparse.Namespace) -> int:
    seq = discretize(_load_stream(args), _granularity(args))
    series = tea_series(seq)
    _chart_with_export(args, render_tea_chart(series, _config(args, "Edge appearance", "edges")), series)
    return 0


def _cmd_tet(args: argparse.Namespace) -> int:
    seq = discretize(_load_stream(args), _granularity(args))
    matrix = tet_matrix(seq, row_cap=args.cap)
    svg = render_tet_chart(matrix, _config(args, "Edge traffic", "edge"), row_cap=args.cap)
    _chart_with_export(args, svg, matrix)
    return 0


def _cmd_plot(args: argparse.Namespace) -> int:
    seq = discretize(_load_stream(args), _granularity(args))
    counts = snapshot_counts(seq)
    degrees = average_degree_series(seq)
    jobs = [
        ("counts", counts, render_counts_chart, _config(args, "Nodes and edges", "count")),
        ("degree", degrees, render_degree_chart, _config(args, "Average degree", "average degree")),
    ]
    workers = max(1, args.threads)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rendered = list(pool.map(lambda j: (j[0], j[1], j[2](j[1], j[3])), jobs))
    out_dir = Path(args.out)
    for name, series, svg in rendered:
        _write_atomic(out_dir / f"{name}.svg", svg)
        if args.format in ("csv", "json"):
            _write_atomic(out_dir / f"{name}.{args.format}", export_series(series, args.format))
    return 0


def _cmd_discretize(args: argparse.Namespace) -> int:
    seq = discretize(_load_stream(args), _granularity(args))
    buffer = io.StringIO()
    write_discretized_edgelist(seq, buffer, delimiter=args.delimiter)
    _emit_text(args, buffer.getvalue())
    return 0


def _cmd_subsample(args: argparse.Namespace) -> int:
    if args.subsample_random is None and not args.subsample_nodes:
        raise UsageError("subsample requires --subsample-random or --subsample-nodes")
    stream = _load_stream(args)
    buffer = io.StringIO()
    write_stream_edgelist(stream, buffer, delimiter=args.delimiter)
    _emit_text(args, buffer.getvalue())
    return 0


class UsageError(Exception):
    pass


def _config(args: argparse.Namespace, title: str, y_label: str) -> ChartConfig:
    return ChartConfig(title=args.title or title, x_label="snapshot", y_label=y_label)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tempograph",
        description="Temporal graph statistics and figures from timestamped edge lists.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("fetch", help="download and cache a manifest dataset")
    p.add_argument("--dataset", required=True)
    p.add_argument("--cache-dir")
    p.add_argument("--manifest")
    p.set_defaults(func=_cmd_fetch)

    p = subs.add_parser("list", help="show every manifest dataset with known counts")
    p.add_argument("--manifest")
    p.set_defaults(func=_cmd_list)

    p = subs.add_parser("stats", help="compute the summary report (counts + indices)")
    _add_data_flags(p)
    _add_discretize_flags(p)
    p.add_argument("--train-frac", type=float, default=0.85, help="chronological split fraction (default 0.85)")
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.add_argument("--out", help="write report here instead of stdout")
    p.set_defaults(func=_cmd_stats)

    for name, helptext, fn in [
        ("tea", "render the new-vs-repeated stacked bar chart", _cmd_tea),
        ("tet", "render the edge presence raster", _cmd_tet),
    ]:
        p = subs.add_parser(name, help=helptext)
        _add_data_flags(p)
        _add_discretize_flags(p)
        p.add_argument("--out", required=True, help="output SVG path")
        p.add_argument("--format", choices=["svg", "csv", "json"], default="svg",
                       help="csv/json additionally export the series next to the SVG")
        p.add_argument("--title", default="")
        if name == "tet":
            p.add_argument("--cap", type=int, default=TET_ROW_CAP, help="maximum raster rows")
        p.set_defaults(func=fn)

    p = subs.add_parser("plot", help="render node/edge count and degree charts")
    _add_data_flags(p)
    _add_discretize_flags(p)
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--format", choices=["svg", "csv", "json"], default="svg")
    p.add_argument("--title", default="")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                   help="render workers (output is identical for any value)")
    p.set_defaults(func=_cmd_plot)

    p = subs.add_parser("discretize", help="export the edge list with snapshot indices as timestamps")
    _add_data_flags(p)
    _add_discretize_flags(p)
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=_cmd_discretize)

    p = subs.add_parser("subsample", help="export the sub-sampled edge list")
    _add_data_flags(p)
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=_cmd_subsample)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with code 2
        return 2
    except TempographError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
