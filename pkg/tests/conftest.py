import numpy as np
import pytest
from hypothesis import strategies as st

from jisolve.generators import GenParams, gen_cisl
from jisolve.graph import ColoredIntervalGraph


@pytest.fixture
def e1():
    """a[1,2]{1}, b[2,3]{2}, c[3,4]{2}, unit weights."""
    return ColoredIntervalGraph.from_lists([(1, 2), (2, 3), (3, 4)], [[1], [2], [2]])


def random_jisp(rng, n, c, gamma, weighted=False):
    """JISP instance: uniform endpoints in [1, c], one uniform color per vertex."""
    a = rng.integers(1, c + 1, size=n)
    b = rng.integers(1, c + 1, size=n)
    colors = rng.integers(1, gamma + 1, size=n)
    weights = rng.integers(1, 11, size=n) if weighted else None
    return ColoredIntervalGraph.from_arrays(np.minimum(a, b), np.maximum(a, b),
                                            np.arange(n + 1), colors, weights)


def random_cisl(seed, n, c, gamma, weighted):
    g = gen_cisl(GenParams(n=n, c=c, gamma=gamma, seed=seed))
    return g if weighted else g.with_unit_weights()


@st.composite
def interval_lists(draw, max_n=12, max_coord=15):
    n = draw(st.integers(0, max_n))
    pairs = []
    for _ in range(n):
        a = draw(st.integers(1, max_coord))
        b = draw(st.integers(1, max_coord))
        pairs.append((min(a, b), max(a, b)))
    return pairs


@st.composite
def cisl_graphs(draw, max_n=10, max_coord=10, max_gamma=5, weighted=True):
    pairs = draw(interval_lists(max_n=max_n, max_coord=max_coord))
    gamma = draw(st.integers(1, max_gamma))
    lists = [draw(st.sets(st.integers(1, gamma), min_size=1, max_size=gamma)) for _ in pairs]
    weights = [draw(st.integers(0, 9)) if weighted else 1 for _ in pairs]
    return ColoredIntervalGraph.from_lists(pairs, lists, weights)
