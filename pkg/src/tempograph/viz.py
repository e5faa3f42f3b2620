"""Deterministic SVG renderers and CSV/JSON series export.

Charts are emitted as standalone SVG 1.1 documents built from a minimal
element set (svg, g, rect, line, polyline, text, title).  Identical inputs
yield identical bytes: no timestamps, no generated ids, fixed-precision
coordinates, and a fixed "nice numbers" tick rule.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .core import EdgeKey
from .errors import EmptySeries, TooManyRows
from .stats import TET_ROW_CAP, DegreeSeries, SnapshotCounts, TeaSeries, TetMatrix

# Documented default palette (series colors, in order).
PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#7f7f7f")
# TEA convention: new edges red, repeated edges gray.
TEA_NEW_COLOR = "#d62728"
TEA_REPEATED_COLOR = "#9e9e9e"
MEAN_LINE_COLOR = "#d62728"
# Anchors for the TET first-seen color ramp (piecewise-linear in RGB).
TET_RAMP = ("#3b4cc0", "#6f91f2", "#aac7fd", "#dddddd", "#f7b89c", "#e7755b", "#b40426")

_MARGIN_LEFT = 70
_MARGIN_RIGHT = 20
_MARGIN_TOP = 46
_MARGIN_BOTTOM = 54
_FONT = "monospace"


@dataclass(frozen=True)
class ChartConfig:
    width_px: int = 800
    height_px: int = 600
    title: str = ""
    x_label: str = ""
    y_label: str = ""
    palette: tuple[str, ...] = PALETTE
    tick_count: int = 6

    def __post_init__(self) -> None:
        if self.width_px < 100 or self.height_px < 100:
            raise ValueError("chart must be at least 100x100 px")
        if self.tick_count < 2:
            raise ValueError("tick_count must be >= 2")


def _esc(text: str) -> str:
    return (
        text.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
    )


def _fmt(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def _label(v: float) -> str:
    return f"{v:g}"


def _nice_step(raw: float) -> float:
    """Smallest 1/2/5 * 10^n step that is >= raw."""
    if raw <= 0:
        return 1.0
    mag = 10.0 ** math.floor(math.log10(raw))
    for mult in (1.0, 2.0, 5.0, 10.0):
        if mult * mag >= raw:
            return mult * mag
    return 10.0 * mag


def _y_ticks(vmax: float, tick_count: int) -> list[float]:
    """Ticks 0, step, 2*step, ... covering [0, vmax]."""
    if vmax <= 0:
        return [0.0, 1.0]
    step = _nice_step(vmax / (tick_count - 1))
    n = int(np.ceil(vmax / step - 1e-9))
    return [i * step for i in range(n + 1)]


def _x_ticks(n_points: int, tick_count: int) -> list[int]:
    if n_points <= 1:
        return [0]
    step = int(_nice_step(max(1.0, (n_points - 1) / (tick_count - 1))))
    ticks = list(range(0, n_points, step))
    if ticks[-1] != n_points - 1:
        ticks.append(n_points - 1)
    return ticks


class _Frame:
    """Shared chart scaffolding: background, axes, ticks, labels."""

    def __init__(self, cfg: ChartConfig, n_points: int, y_max: float):
        self.cfg = cfg
        self.left = _MARGIN_LEFT
        self.right = cfg.width_px - _MARGIN_RIGHT
        self.top = _MARGIN_TOP
        self.bottom = cfg.height_px - _MARGIN_BOTTOM
        self.n = n_points
        self.y_ticks = _y_ticks(y_max, cfg.tick_count)
        self.y_max = self.y_ticks[-1]
        self.lines: list[str] = [
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{cfg.width_px}" height="{cfg.height_px}" '
            f'viewBox="0 0 {cfg.width_px} {cfg.height_px}">',
            f"<title>{_esc(cfg.title)}</title>",
            f'<rect x="0" y="0" width="{cfg.width_px}" height="{cfg.height_px}" fill="#ffffff"/>',
        ]

    def x_px(self, i: float) -> float:
        if self.n <= 1:
            return (self.left + self.right) / 2
        return self.left + (self.right - self.left) * (i / (self.n - 1))

    def y_px(self, v: float) -> float:
        return self.bottom - (self.bottom - self.top) * (v / self.y_max)

    def add(self, line: str) -> None:
        self.lines.append(line)

    def draw_title(self) -> None:
        cx = self.cfg.width_px / 2
        self.add(
            f'<text x="{_fmt(cx)}" y="24" text-anchor="middle" font-family="{_FONT}" '
            f'font-size="16">{_esc(self.cfg.title)}</text>'
        )

    def draw_grid_and_yaxis(self) -> None:
        for v in self.y_ticks:
            y = self.y_px(v)
            self.add(
                f'<line x1="{self.left}" y1="{_fmt(y)}" x2="{self.right}" y2="{_fmt(y)}" '
                f'stroke="#dddddd" stroke-width="1"/>'
            )
            self.add(
                f'<text x="{self.left - 8}" y="{_fmt(y + 4)}" text-anchor="end" '
                f'font-family="{_FONT}" font-size="11">{_esc(_label(v))}</text>'
            )

    def draw_xaxis(self, tick_values: list[int], tick_positions: list[float] | None = None) -> None:
        self.add(
            f'<line x1="{self.left}" y1="{_fmt(self.bottom)}" x2="{self.right}" '
            f'y2="{_fmt(self.bottom)}" stroke="#000000" stroke-width="1"/>'
        )
        self.add(
            f'<line x1="{self.left}" y1="{_fmt(self.top)}" x2="{self.left}" '
            f'y2="{_fmt(self.bottom)}" stroke="#000000" stroke-width="1"/>'
        )
        positions = tick_positions or [self.x_px(v) for v in tick_values]
        for v, x in zip(tick_values, positions):
            self.add(
                f'<line x1="{_fmt(x)}" y1="{_fmt(self.bottom)}" x2="{_fmt(x)}" '
                f'y2="{_fmt(self.bottom + 5)}" stroke="#000000" stroke-width="1"/>'
            )
            self.add(
                f'<text x="{_fmt(x)}" y="{_fmt(self.bottom + 18)}" text-anchor="middle" '
                f'font-family="{_FONT}" font-size="11">{v}</text>'
            )

    def draw_axis_labels(self) -> None:
        cfg = self.cfg
        if cfg.x_label:
            cx = (self.left + self.right) / 2
            self.add(
                f'<text x="{_fmt(cx)}" y="{cfg.height_px - 14}" text-anchor="middle" '
                f'font-family="{_FONT}" font-size="12">{_esc(cfg.x_label)}</text>'
            )
        if cfg.y_label:
            cy = (self.top + self.bottom) / 2
            self.add(
                f'<text x="16" y="{_fmt(cy)}" text-anchor="middle" font-family="{_FONT}" '
                f'font-size="12" transform="rotate(-90 16 {_fmt(cy)})">{_esc(cfg.y_label)}</text>'
            )

    def draw_legend(self, items: list[tuple[str, str]]) -> None:
        x = self.left + 10
        y = self.top + 8
        for i, (label, color) in enumerate(items):
            ly = y + i * 16
            self.add(
                f'<rect x="{x}" y="{ly}" width="12" height="8" fill="{color}"/>'
            )
            self.add(
                f'<text x="{x + 18}" y="{ly + 8}" text-anchor="start" '
                f'font-family="{_FONT}" font-size="11">{_esc(label)}</text>'
            )

    def polyline(self, values: list[float], color: str) -> None:
        pts = " ".join(
            f"{_fmt(self.x_px(i))},{_fmt(self.y_px(v))}" for i, v in enumerate(values)
        )
        self.add(f'<polyline fill="none" stroke="{color}" stroke-width="2" points="{pts}"/>')
        if len(values) == 1:
            # a one-point polyline paints nothing: add a visible mark
            x, y = self.x_px(0), self.y_px(values[0])
            self.add(
                f'<rect x="{_fmt(x - 2.5)}" y="{_fmt(y - 2.5)}" width="5" height="5" fill="{color}"/>'
            )

    def finish(self) -> bytes:
        self.lines.append("</svg>")
        return ("\n".join(self.lines) + "\n").encode("utf-8")


def render_counts_chart(counts: SnapshotCounts, cfg: ChartConfig | None = None) -> bytes:
    """Overlaid per-snapshot node-count and unique-edge-count lines."""
    cfg = cfg or ChartConfig(title="Nodes and edges per snapshot", x_label="snapshot", y_label="count")
    n = len(counts)
    if n == 0:
        raise EmptySeries("counts series is empty")
    y_max = max(max(counts.num_nodes), max(counts.num_edges_unique))
    frame = _Frame(cfg, n, float(y_max))
    frame.draw_title()
    frame.draw_grid_and_yaxis()
    frame.draw_xaxis(_x_ticks(n, cfg.tick_count))
    frame.polyline([float(v) for v in counts.num_nodes], cfg.palette[0])
    frame.polyline([float(v) for v in counts.num_edges_unique], cfg.palette[1])
    frame.draw_legend([("nodes", cfg.palette[0]), ("edges", cfg.palette[1])])
    frame.draw_axis_labels()
    return frame.finish()


def render_degree_chart(series: DegreeSeries, cfg: ChartConfig | None = None) -> bytes:
    """Average degree per snapshot plus a horizontal overall-mean line."""
    cfg = cfg or ChartConfig(title="Average degree per snapshot", x_label="snapshot", y_label="average degree")
    n = len(series)
    if n == 0:
        raise EmptySeries("degree series is empty")
    y_max = max(max(series.avg_degree), series.overall_mean)
    frame = _Frame(cfg, n, float(y_max))
    frame.draw_title()
    frame.draw_grid_and_yaxis()
    frame.draw_xaxis(_x_ticks(n, cfg.tick_count))
    frame.polyline(list(series.avg_degree), cfg.palette[0])
    my = frame.y_px(series.overall_mean)
    frame.add(
        f'<line x1="{frame.left}" y1="{_fmt(my)}" x2="{frame.right}" y2="{_fmt(my)}" '
        f'stroke="{MEAN_LINE_COLOR}" stroke-width="2"/>'
    )
    frame.draw_legend([("per snapshot", cfg.palette[0]), ("overall mean", MEAN_LINE_COLOR)])
    frame.draw_axis_labels()
    return frame.finish()


def render_tea_chart(series: TeaSeries, cfg: ChartConfig | None = None) -> bytes:
    """Stacked bars: repeated edges below, newly observed edges on top."""
    cfg = cfg or ChartConfig(title="Edge appearance per snapshot", x_label="snapshot", y_label="edges")
    n = len(series)
    if n == 0:
        raise EmptySeries("TEA series is empty")
    totals = [a + b for a, b in zip(series.new, series.repeated)]
    frame = _Frame(cfg, n, float(max(totals)))
    frame.draw_title()
    frame.draw_grid_and_yaxis()
    slot = (frame.right - frame.left) / n
    bar = slot * 0.8
    centers = [frame.left + slot * (i + 0.5) for i in range(n)]
    for i in range(n):
        x = centers[i] - bar / 2
        rep, new = series.repeated[i], series.new[i]
        if rep:
            y0, y1 = frame.y_px(rep), frame.y_px(0)
            frame.add(
                f'<rect x="{_fmt(x)}" y="{_fmt(y0)}" width="{_fmt(bar)}" '
                f'height="{_fmt(y1 - y0)}" fill="{TEA_REPEATED_COLOR}"/>'
            )
        if new:
            y0, y1 = frame.y_px(rep + new), frame.y_px(rep)
            frame.add(
                f'<rect x="{_fmt(x)}" y="{_fmt(y0)}" width="{_fmt(bar)}" '
                f'height="{_fmt(y1 - y0)}" fill="{TEA_NEW_COLOR}"/>'
            )
    ticks = _x_ticks(n, cfg.tick_count)
    frame.draw_xaxis(ticks, [centers[i] for i in ticks])
    frame.draw_legend([("new edges", TEA_NEW_COLOR), ("repeated edges", TEA_REPEATED_COLOR)])
    frame.draw_axis_labels()
    return frame.finish()


_RAMP_RGB = tuple(tuple(int(c[i : i + 2], 16) for i in (1, 3, 5)) for c in TET_RAMP)


def _ramp_color(pos: float) -> str:
    """Piecewise-linear RGB interpolation over the fixed ramp anchors."""
    if pos <= 0.0:
        r, g, b = _RAMP_RGB[0]
    elif pos >= 1.0:
        r, g, b = _RAMP_RGB[-1]
    else:
        scaled = pos * (len(_RAMP_RGB) - 1)
        lo = int(scaled)
        frac = scaled - lo
        a, bb = _RAMP_RGB[lo], _RAMP_RGB[lo + 1]
        r, g, b = (round(a[i] + (bb[i] - a[i]) * frac) for i in range(3))
    return f"#{r:02x}{g:02x}{b:02x}"


def render_tet_chart(matrix: TetMatrix, cfg: ChartConfig | None = None, row_cap: int = TET_ROW_CAP) -> bytes:
    """Edge-by-snapshot presence raster, colored by first appearance."""
    cfg = cfg or ChartConfig(title="Edge traffic raster", x_label="snapshot", y_label="edge")
    rows, cols = matrix.num_rows, matrix.num_snapshots
    if rows == 0:
        raise EmptySeries("TET matrix has no rows")
    if rows > row_cap:
        raise TooManyRows(f"{rows} rows exceed the cap {row_cap}; sub-sample first")
    frame = _Frame(cfg, cols, float(rows))
    frame.draw_title()
    cell_w = (frame.right - frame.left) / cols
    cell_h = (frame.bottom - frame.top) / rows
    with_border = cell_w >= 2.0 and cell_h >= 2.0
    border = ' stroke="#ffffff" stroke-width="0.5"' if with_border else ""
    row_colors = [
        _ramp_color(fs / (cols - 1) if cols > 1 else 0.0) for fs in matrix.first_seen
    ]
    frame.add("<g>")
    present = np.nonzero(matrix.presence)
    for r, c in zip(present[0].tolist(), present[1].tolist()):
        x = frame.left + c * cell_w
        y = frame.top + r * cell_h
        frame.add(
            f'<rect x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(cell_w)}" '
            f'height="{_fmt(cell_h)}" fill="{row_colors[r]}"{border}/>'
        )
    frame.add("</g>")
    centers = [frame.left + cell_w * (i + 0.5) for i in range(cols)]
    ticks = _x_ticks(cols, cfg.tick_count)
    frame.draw_xaxis(ticks, [centers[i] for i in ticks])
    frame.draw_axis_labels()
    return frame.finish()


# -- series export / import --------------------------------------------------


def _csv_bytes(header: str, rows: list[str], line_ending: str) -> bytes:
    return (line_ending.join([header] + rows) + line_ending).encode("utf-8")


def export_series(data, fmt: str, line_ending: str = "\n") -> bytes:
    """Serialize a series object to csv or json bytes (lossless round-trip)."""
    if fmt not in ("csv", "json"):
        raise ValueError(f"format must be csv or json, got {fmt!r}")
    if isinstance(data, SnapshotCounts):
        if fmt == "csv":
            rows = [
                f"{i},{n},{e},{ev}"
                for i, (n, e, ev) in enumerate(
                    zip(data.num_nodes, data.num_edges_unique, data.num_events)
                )
            ]
            return _csv_bytes("snapshot,num_nodes,num_edges,num_events", rows, line_ending)
        payload = {
            "num_nodes": list(data.num_nodes),
            "num_edges_unique": list(data.num_edges_unique),
            "num_events": list(data.num_events),
        }
    elif isinstance(data, DegreeSeries):
        if fmt == "csv":
            rows = [f"{i},{v!r}" for i, v in enumerate(data.avg_degree)]
            return _csv_bytes("snapshot,avg_degree", rows, line_ending)
        payload = {"avg_degree": list(data.avg_degree), "overall_mean": data.overall_mean}
    elif isinstance(data, TeaSeries):
        if fmt == "csv":
            rows = [f"{i},{n},{r}" for i, (n, r) in enumerate(zip(data.new, data.repeated))]
            return _csv_bytes("snapshot,new,repeated", rows, line_ending)
        payload = {"new": list(data.new), "repeated": list(data.repeated)}
    elif isinstance(data, TetMatrix):
        bits = ["".join(map(str, row)) for row in matrix_rows(data)]
        if fmt == "csv":
            rows = [
                f"{e.src},{e.dst},{f},{l},{b}"
                for e, f, l, b in zip(data.edges, data.first_seen, data.last_seen, bits)
            ]
            return _csv_bytes("src,dst,first_seen,last_seen,presence", rows, line_ending)
        payload = {
            "edges": [[e.src, e.dst] for e in data.edges],
            "first_seen": list(data.first_seen),
            "last_seen": list(data.last_seen),
            "presence": bits,
        }
    else:
        raise TypeError(f"cannot export {type(data).__name__}")
    return (json.dumps(payload, indent=2) + "\n").encode("utf-8")


def matrix_rows(data: TetMatrix) -> list[list[int]]:
    return data.presence.tolist()


def load_series(kind: str, fmt: str, payload: bytes):
    """Inverse of export_series; ``kind`` is counts | degree | tea | tet."""
    text = payload.decode("utf-8")
    if fmt == "json":
        obj = json.loads(text)
        if kind == "counts":
            return SnapshotCounts(
                num_nodes=tuple(obj["num_nodes"]),
                num_edges_unique=tuple(obj["num_edges_unique"]),
                num_events=tuple(obj["num_events"]),
            )
        if kind == "degree":
            return DegreeSeries(avg_degree=tuple(obj["avg_degree"]), overall_mean=obj["overall_mean"])
        if kind == "tea":
            return TeaSeries(new=tuple(obj["new"]), repeated=tuple(obj["repeated"]))
        if kind == "tet":
            return TetMatrix(
                edges=tuple(EdgeKey(s, d) for s, d in obj["edges"]),
                first_seen=tuple(obj["first_seen"]),
                last_seen=tuple(obj["last_seen"]),
                presence=np.array([[int(ch) for ch in b] for b in obj["presence"]], dtype=np.uint8),
            )
        raise ValueError(f"unknown series kind {kind!r}")
    if fmt != "csv":
        raise ValueError(f"format must be csv or json, got {fmt!r}")
    lines = [ln for ln in text.split("\n") if ln not in ("", "\r")]
    body = [ln.rstrip("\r").split(",") for ln in lines[1:]]
    if kind == "counts":
        return SnapshotCounts(
            num_nodes=tuple(int(r[1]) for r in body),
            num_edges_unique=tuple(int(r[2]) for r in body),
            num_events=tuple(int(r[3]) for r in body),
        )
    if kind == "degree":
        avg = tuple(float(r[1]) for r in body)
        arr = np.array(avg, dtype=np.float64)
        nonempty = arr > 0
        overall = float(np.mean(arr[nonempty])) if nonempty.any() else 0.0
        return DegreeSeries(avg_degree=avg, overall_mean=overall)
    if kind == "tea":
        return TeaSeries(
            new=tuple(int(r[1]) for r in body), repeated=tuple(int(r[2]) for r in body)
        )
    if kind == "tet":
        return TetMatrix(
            edges=tuple(EdgeKey(int(r[0]), int(r[1])) for r in body),
            first_seen=tuple(int(r[2]) for r in body),
            last_seen=tuple(int(r[3]) for r in body),
            presence=np.array([[int(ch) for ch in r[4]] for r in body], dtype=np.uint8),
        )
    raise ValueError(f"unknown series kind {kind!r}")
