import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from tempograph import (
    Granularity,
    SplitSpec,
    average_degree_series,
    average_node_activity,
    chronological_split,
    discretize_bins,
    novelty,
    reoccurrence,
    snapshot_counts,
    summarize,
    surprise,
    tea_series,
    tet_matrix,
)
from tempograph.core import EdgeKey
from tempograph.errors import DegenerateSplit, EmptyTest, EmptyTrain, TooManyRows

from conftest import event_lists, stream_of


def seq_of(edge_sets):
    """SnapshotSequence whose snapshot t holds exactly edge_sets[t].

    Times equal bin indices, so bins:k with k == len(edge_sets) maps time t
    to snapshot t (width 1); empty slots are padded with a placeholder that
    keeps t_min/t_max anchored.
    """
    events = []
    for t, es in enumerate(edge_sets):
        for u, v in sorted(es):
            events.append((u, v, t))
    times = [t for _, _, t in events]
    k = len(edge_sets)
    assert min(times) == 0 and max(times) == k - 1, "first and last slot must be nonempty"
    return discretize_bins(stream_of(events), k)


# -- snapshot counts ------------------------------------------------------------


def test_counts_small():
    seq = seq_of([{(0, 1), (1, 2)}])
    counts = snapshot_counts(seq)
    assert counts.num_nodes == (3,)
    assert counts.num_edges_unique == (2,)
    assert counts.num_events == (2,)


def test_counts_empty_snapshot():
    seq = seq_of([{(0, 1)}, set(), {(0, 1)}])
    counts = snapshot_counts(seq)
    assert counts.num_nodes[1] == 0
    assert counts.num_edges_unique[1] == 0
    assert counts.num_events[1] == 0


def test_counts_events_vs_unique():
    seq = discretize_bins(stream_of([(0, 1, 0), (0, 1, 1), (1, 0, 2)]), 1)
    counts = snapshot_counts(seq)
    assert counts.num_events == (3,)
    assert counts.num_edges_unique == (2,)


# -- node activity ---------------------------------------------------------------


def test_activity_direct_formula():
    # node A in all 4 snapshots, node B in 2 of them -> (1.0 + 0.5) / 2
    events = [(0, 0, 0), (0, 0, 1), (0, 0, 2), (0, 0, 3), (1, 1, 0), (1, 1, 1)]
    seq = discretize_bins(stream_of(events), 4)
    assert average_node_activity(seq) == pytest.approx(0.75, abs=1e-15)


def test_activity_everyone_everywhere():
    seq = seq_of([{(0, 1)}, {(0, 1)}, {(1, 0)}])
    assert average_node_activity(seq) == 1.0


def test_activity_empty_snapshot_denominator():
    seq = seq_of([{(0, 1)}, set(), {(0, 1)}])
    assert average_node_activity(seq) == pytest.approx(2 / 3)
    assert average_node_activity(seq, include_empty=False) == 1.0


# -- degree series ---------------------------------------------------------------


def test_degree_single_edge():
    seq = seq_of([{(0, 1)}])
    series = average_degree_series(seq)
    assert series.avg_degree == (1.0,)
    assert series.overall_mean == 1.0


def test_degree_self_loop_counts_twice():
    seq = seq_of([{(0, 0)}])
    assert average_degree_series(seq).avg_degree == (2.0,)


def test_degree_empty_snapshot_excluded_from_mean():
    seq = seq_of([{(0, 1)}, set(), {(0, 1), (1, 2), (2, 0)}])
    series = average_degree_series(seq)
    assert series.avg_degree[1] == 0.0
    assert series.overall_mean == pytest.approx((1.0 + 2.0) / 2)


# -- TEA ---------------------------------------------------------------------------


def test_tea_repetition():
    series = tea_series(seq_of([{(0, 1)}, {(0, 1)}]))
    assert list(zip(series.new, series.repeated)) == [(1, 0), (0, 1)]


def test_tea_running_set():
    series = tea_series(seq_of([{(0, 1)}, {(1, 2)}, {(0, 1), (2, 3)}]))
    assert list(zip(series.new, series.repeated)) == [(1, 0), (1, 0), (1, 1)]


def test_tea_disjoint_snapshots():
    series = tea_series(seq_of([{(0, 1)}, {(1, 2)}, {(2, 3)}]))
    assert series.repeated == (0, 0, 0)


def test_tea_first_snapshot_no_repeats():
    series = tea_series(seq_of([{(0, 1), (1, 2)}, {(0, 1)}]))
    assert series.repeated[0] == 0


# -- TET ---------------------------------------------------------------------------


def test_tet_direct_construction():
    seq = seq_of([{(0, 1)}, {(0, 1), (1, 2)}, {(1, 2)}])
    m = tet_matrix(seq)
    assert m.edges == (EdgeKey(0, 1), EdgeKey(1, 2))
    assert m.first_seen == (0, 1)
    assert m.last_seen == (1, 2)
    assert m.presence.tolist() == [[1, 1, 0], [0, 1, 1]]


def test_tet_single_snapshot():
    m = tet_matrix(seq_of([{(0, 1), (1, 2), (2, 0)}]))
    assert m.first_seen == (0, 0, 0)
    assert m.last_seen == (0, 0, 0)


def test_tet_row_cap():
    seq = seq_of([{(0, 1), (1, 2), (2, 3)}])
    with pytest.raises(TooManyRows):
        tet_matrix(seq, row_cap=2)


def test_tet_row_order_breaks_ties_by_endpoints():
    seq = seq_of([{(2, 0), (0, 1), (1, 1)}])
    m = tet_matrix(seq)
    assert m.edges == (EdgeKey(0, 1), EdgeKey(1, 1), EdgeKey(2, 0))


def test_tet_column_sums_match_unique_counts():
    seq = seq_of([{(0, 1)}, {(0, 1), (1, 2)}, set(), {(2, 3)}])
    m = tet_matrix(seq)
    assert m.presence.sum(axis=0).tolist() == list(seq.unique_edge_counts)


# -- indices -------------------------------------------------------------------------


def test_novelty_by_hand():
    assert novelty(seq_of([{(0, 1), (1, 2)}, {(0, 1), (2, 3)}])) == pytest.approx(0.75)


def test_novelty_all_new():
    assert novelty(seq_of([{(0, 1)}, {(1, 2)}, {(2, 3)}])) == 1.0


def test_novelty_identical_snapshots():
    seq = seq_of([{(0, 1)}] * 4)
    assert novelty(seq) == pytest.approx(0.25)


def test_novelty_empty_snapshot_denominator():
    seq = seq_of([{(0, 1)}, set(), {(0, 1)}])
    assert novelty(seq) == pytest.approx(0.5)
    assert novelty(seq, include_empty=True) == pytest.approx(1 / 3)


def test_reoccurrence_examples():
    a, b, c, d = (0, 1), (1, 2), (2, 3), (3, 4)
    assert reoccurrence({a, b, c}, {b, c, d}) == pytest.approx(2 / 3)
    assert reoccurrence({a}, {b}) == 0.0
    assert reoccurrence({a, b}, {a, b, c}) == 1.0
    with pytest.raises(EmptyTrain):
        reoccurrence(set(), {a})


def test_surprise_examples():
    a, b, c, d = (0, 1), (1, 2), (2, 3), (3, 4)
    assert surprise({a, b, c}, {b, c, d}) == pytest.approx(1 / 3)
    assert surprise({a, b}, {a}) == 0.0
    assert surprise({a}, {b}) == 1.0
    with pytest.raises(EmptyTest):
        surprise({a}, set())


# -- cross-op invariants ---------------------------------------------------------------


@given(event_lists(), st.integers(1, 10))
def test_tea_novelty_consistency(events, k):
    seq = discretize_bins(stream_of(events), k)
    series = tea_series(seq)
    ratios = np.array(
        [n / (n + r) for n, r in zip(series.new, series.repeated) if n + r > 0],
        dtype=np.float64,
    )
    assert novelty(seq) == float(ratios.sum() / len(ratios))


@given(event_lists(), st.integers(1, 10))
def test_tet_tea_consistency(events, k):
    seq = discretize_bins(stream_of(events), k)
    series = tea_series(seq)
    m = tet_matrix(seq)
    for t in range(k):
        assert sum(1 for f in m.first_seen if f == t) == series.new[t]


@given(
    st.sets(st.tuples(st.integers(0, 6), st.integers(0, 6)), min_size=1),
    st.sets(st.tuples(st.integers(0, 6), st.integers(0, 6)), min_size=1),
)
def test_reoccurrence_surprise_duality(train, test):
    inter = len(train & test)
    assert round(reoccurrence(train, test) * len(train)) == inter
    assert round((1.0 - surprise(train, test)) * len(test)) == inter


@given(event_lists(), st.integers(1, 8), st.integers(1, 1000))
def test_translation_invariance(events, k, shift):
    base = stream_of(events)
    moved = stream_of([(u, v, t + shift) for u, v, t in events])
    sa, sb = discretize_bins(base, k), discretize_bins(moved, k)
    assert np.array_equal(sa.bins, sb.bins)
    assert tea_series(sa) == tea_series(sb)
    assert novelty(sa) == novelty(sb)
    assert average_node_activity(sa) == average_node_activity(sb)


@given(event_lists(max_events=30), st.sampled_from([2, 3, 10]))
def test_scale_invariance_of_order_statistics(events, factor):
    # multiplying timestamps preserves order and distinctness, so the
    # split-based indices and raw counts are unchanged
    base = stream_of(events)
    scaled = stream_of([(u, v, t * factor) for u, v, t in events])
    assert oracle.unique_edge_count(list(base)) == oracle.unique_edge_count(list(scaled))
    assert oracle.unique_step_count(list(base)) == oracle.unique_step_count(list(scaled))
    try:
        train_a, test_a = chronological_split(base, SplitSpec())
    except DegenerateSplit:
        with pytest.raises(DegenerateSplit):
            chronological_split(scaled, SplitSpec())
        return
    train_b, test_b = chronological_split(scaled, SplitSpec())
    assert reoccurrence(train_a, test_a) == reoccurrence(train_b, test_b)
    assert surprise(train_a, test_a) == surprise(train_b, test_b)


# -- summarize ----------------------------------------------------------------------


def test_summarize_toy_smoke():
    stream = stream_of([(0, 1, 0), (1, 2, 9)])
    report = summarize(stream, Granularity(bins=2))
    assert report.num_nodes == 3
    assert report.num_events == 2
    assert report.num_unique_edges == 2
    assert report.num_unique_steps == 2
    assert report.duration == (0, 9, "unknown")
    for value in (report.reoccurrence, report.surprise, report.node_activity, report.novelty):
        assert 0.0 <= value <= 1.0
    assert report.discretization_tag == "bins:2"


def test_summarize_delegates():
    events = [(i % 4, (i + 1) % 4, i) for i in range(40)]
    stream = stream_of(events)
    g = Granularity(bins=5)
    report = summarize(stream, g, SplitSpec(train_fraction=0.75))
    seq = discretize_bins(stream, 5)
    assert report.novelty == novelty(seq)
    assert report.node_activity == average_node_activity(seq)
    train, test = chronological_split(stream, SplitSpec(train_fraction=0.75))
    assert report.reoccurrence == reoccurrence(train, test)
    assert report.surprise == surprise(train, test)


def test_summarize_propagates_degenerate_split():
    stream = stream_of([(0, 1, 5), (1, 2, 5)])
    with pytest.raises(DegenerateSplit):
        summarize(stream, Granularity(bins=1))


def test_report_json_stable_and_parseable():
    import json

    stream = stream_of([(0, 1, 0), (1, 2, 9)])
    report = summarize(stream, Granularity(bins=2))
    text = report.to_json()
    assert text == report.to_json()
    data = json.loads(text)
    assert list(data) == [
        "num_nodes", "num_events", "num_unique_edges", "num_unique_steps",
        "duration", "reoccurrence", "surprise", "node_activity", "novelty",
        "discretization_tag",
    ]


def test_report_table_alignment():
    stream = stream_of([(0, 1, 0), (1, 2, 9)])
    table = summarize(stream, Granularity(bins=2)).to_table()
    head, row, _ = table.split("\n")
    assert len(head) == len(row)
    assert "Reoccurrence" in head


def test_report_rejects_out_of_range_index():
    from tempograph.stats import StatsReport

    with pytest.raises(ValueError):
        StatsReport(
            num_nodes=1, num_events=1, num_unique_edges=1, num_unique_steps=1,
            duration=(0, 1, "unknown"), reoccurrence=1.5, surprise=0.0,
            node_activity=0.0, novelty=0.0, discretization_tag="bins:1",
        )


# -- oracle spot checks ----------------------------------------------------------------


@settings(max_examples=80)
@given(event_lists(), st.integers(1, 12))
def test_stats_match_oracle(events, k):
    stream = stream_of(events)
    seq = discretize_bins(stream, k)
    sets = oracle.edge_sets(list(stream), k)
    series = tea_series(seq)
    assert list(zip(series.new, series.repeated)) == oracle.tea(sets)
    assert novelty(seq) == pytest.approx(oracle.novelty(sets), abs=1e-12)
    assert average_node_activity(seq) == pytest.approx(
        oracle.node_activity(sets, stream.num_nodes), abs=1e-12
    )
    m = tet_matrix(seq)
    got = [
        ((e.src, e.dst), f, l, tuple(row))
        for e, f, l, row in zip(m.edges, m.first_seen, m.last_seen, m.presence.tolist())
    ]
    assert got == [((src, dst), f, l, pres) for src, dst, f, l, pres in oracle.tet(sets)]
