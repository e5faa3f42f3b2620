from collections import Counter

import numpy as np
import pytest
from hypothesis import given

from tempograph import build_stream, unique_edges, unique_timestamps
from tempograph.core import EdgeEvent, EdgeKey, assemble_stream, num_unique_edges, unique_pairs
from tempograph.errors import EmptyInput, TimestampOverflow

from conftest import event_lists, stream_of


def test_build_stream_first_appearance_ids_and_sort():
    stream = build_stream([("a", "b", 5), ("c", "a", 2)])
    assert stream.labels == ("a", "b", "c")
    assert list(stream) == [EdgeEvent(2, 0, 2), EdgeEvent(0, 1, 5)]
    assert stream.meta == {"t_min": 2, "t_max": 5, "num_nodes": 3, "num_events": 2}


def test_build_stream_self_loop():
    stream = build_stream([("x", "x", 0)])
    assert list(stream) == [EdgeEvent(0, 0, 0)]
    assert stream.num_nodes == 1


def test_build_stream_empty():
    with pytest.raises(EmptyInput):
        build_stream([])


def test_build_stream_rejects_fractional_timestamp():
    with pytest.raises(TimestampOverflow):
        build_stream([("a", "b", 2.5)])
    # integral floats are fine
    assert build_stream([("a", "b", 2.0)]).t_min == 2


def test_build_stream_timestamp_overflow():
    with pytest.raises(TimestampOverflow):
        build_stream([("a", "b", 2**63)])
    assert build_stream([("a", "b", 2**63 - 1)]).t_max == 2**63 - 1


def test_build_stream_sort_stability():
    # events with equal timestamps keep input order
    stream = build_stream([("a", "b", 7), ("c", "d", 7), ("e", "f", 7)])
    assert [e.src for e in stream] == [0, 2, 4]


def test_build_stream_undirected_normalization():
    stream = build_stream([("a", "b", 1), ("b", "a", 2)], undirected=True)
    assert unique_edges(stream) == {(0, 1)}


def test_duplicate_events_retained():
    stream = build_stream([("a", "b", 1), ("a", "b", 1)])
    assert stream.num_events == 2


def test_unique_edges_dedup():
    stream = stream_of([(0, 1, 1), (0, 1, 2), (1, 0, 3)])
    assert unique_edges(stream) == {(0, 1), (1, 0)}
    assert num_unique_edges(stream) == 2


def test_unique_edges_single_event():
    assert len(unique_edges(stream_of([(3, 4, 0)]))) == 1


def test_unique_timestamps():
    stream = stream_of([(0, 0, 1), (0, 0, 1), (0, 0, 2), (0, 0, 5)])
    assert unique_timestamps(stream) == 3


def test_edgekey_equality_is_directed():
    assert EdgeKey(1, 2) != EdgeKey(2, 1)
    assert EdgeKey(1, 2) == (1, 2)


@given(event_lists())
def test_round_trip_multiset(events):
    stream = stream_of(events)
    expected = Counter((f"n{u}", f"n{v}", t) for u, v, t in events)
    assert Counter(stream.triplets()) == expected


@given(event_lists())
def test_dense_ids_and_monotone_time(events):
    stream = stream_of(events)
    seen = set(stream.src.tolist()) | set(stream.dst.tolist())
    assert seen == set(range(stream.num_nodes))
    assert max(seen) + 1 == stream.num_nodes
    assert np.all(np.diff(stream.time) >= 0)


@given(event_lists())
def test_count_bounds(events):
    stream = stream_of(events)
    assert num_unique_edges(stream) <= stream.num_events
    assert unique_timestamps(stream) <= stream.num_events


def test_stream_equality():
    a = stream_of([(0, 1, 1), (1, 2, 2)])
    b = stream_of([(0, 1, 1), (1, 2, 2)])
    c = stream_of([(0, 1, 1), (1, 2, 3)])
    assert a == b
    assert a != c


def test_assemble_stream_keeps_given_ids():
    stream = assemble_stream([1, 0], [0, 1], [5, 2], ["x", "y"])
    assert list(stream) == [EdgeEvent(0, 1, 2), EdgeEvent(1, 0, 5)]


def test_unique_pairs_matches_naive():
    rng = np.random.default_rng(7)
    a = rng.integers(0, 5, 200)
    b = rng.integers(0, 9, 200)
    ua, ub = unique_pairs(a.astype(np.int64), b.astype(np.int64), 9)
    assert sorted(zip(ua.tolist(), ub.tolist())) == sorted(set(zip(a.tolist(), b.tolist())))
    assert list(zip(ua.tolist(), ub.tolist())) == sorted(set(zip(a.tolist(), b.tolist())))


def test_unique_pairs_lexsort_fallback_agrees():
    rng = np.random.default_rng(11)
    a = rng.integers(0, 50, 500).astype(np.int64)
    b = rng.integers(0, 40, 500).astype(np.int64)
    fast = unique_pairs(a, b, 40)
    slow = unique_pairs(a, b, 2**63)  # forces the lexsort path
    assert np.array_equal(fast[0], slow[0])
    assert np.array_equal(fast[1], slow[1])
