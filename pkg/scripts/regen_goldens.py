#!/usr/bin/env python3
"""Regenerate the golden SVG files under tests/golden/.

Run after any intentional change to chart rendering, then review the diff:
golden tests assert byte equality against these files.
"""

from pathlib import Path

import numpy as np

from tempograph.core import EdgeKey
from tempograph.stats import DegreeSeries, SnapshotCounts, TeaSeries, TetMatrix
from tempograph.viz import (
    render_counts_chart,
    render_degree_chart,
    render_tea_chart,
    render_tet_chart,
)

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "tests" / "golden"


def golden_cases():
    return {
        "counts_single_point.svg": (
            render_counts_chart,
            SnapshotCounts(num_nodes=(3,), num_edges_unique=(2,), num_events=(5,)),
        ),
        "degree_constant.svg": (
            render_degree_chart,
            DegreeSeries(avg_degree=(3.0, 3.0, 3.0), overall_mean=3.0),
        ),
        "degree_two_point.svg": (
            render_degree_chart,
            DegreeSeries(avg_degree=(1.0, 3.0), overall_mean=2.0),
        ),
        "tea_single_bar.svg": (
            render_tea_chart,
            TeaSeries(new=(1,), repeated=(0,)),
        ),
        "tea_two_bars.svg": (
            render_tea_chart,
            TeaSeries(new=(2, 1), repeated=(0, 1)),
        ),
        "tet_two_edges.svg": (
            render_tet_chart,
            TetMatrix(
                edges=(EdgeKey(0, 1), EdgeKey(1, 2)),
                first_seen=(0, 1),
                last_seen=(1, 2),
                presence=np.array([[1, 1, 0], [0, 1, 1]], dtype=np.uint8),
            ),
        ),
        "tet_saturated.svg": (
            render_tet_chart,
            TetMatrix(
                edges=(EdgeKey(0, 1), EdgeKey(1, 0)),
                first_seen=(0, 0),
                last_seen=(2, 2),
                presence=np.ones((2, 3), dtype=np.uint8),
            ),
        ),
    }


def main() -> None:
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    for name, (render, data) in golden_cases().items():
        (GOLDEN_DIR / name).write_bytes(render(data))
        print(f"wrote {GOLDEN_DIR / name}")


if __name__ == "__main__":
    main()
