import random

import pytest
from hypothesis import strategies as st

from tempograph import build_stream


def labeled(events):
    """(u, v, t) int triplets -> (str, str, t) for build_stream."""
    return [(f"n{u}", f"n{v}", t) for u, v, t in events]


def stream_of(events, **kwargs):
    """Build an EventStream from int triplets (labels are stringified ids)."""
    return build_stream(labeled(events), **kwargs)


@st.composite
def event_lists(draw, max_events=50, max_nodes=10, max_time=20):
    return draw(
        st.lists(
            st.tuples(
                st.integers(0, max_nodes - 1),
                st.integers(0, max_nodes - 1),
                st.integers(0, max_time - 1),
            ),
            min_size=1,
            max_size=max_events,
        )
    )


def random_events(rng: random.Random, max_events=50, max_nodes=10, max_time=20):
    n = rng.randint(1, max_events)
    nodes = rng.randint(1, max_nodes)
    return [
        (rng.randrange(nodes), rng.randrange(nodes), rng.randrange(max_time))
        for _ in range(n)
    ]


@pytest.fixture
def toy_csv(tmp_path):
    path = tmp_path / "toy.csv"
    path.write_text("a,b,5\nc,a,2\n", encoding="utf-8")
    return path
