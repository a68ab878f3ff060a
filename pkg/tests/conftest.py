import itertools

import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from exactgraphs.graph import Graph, Partition

_ACCEPTANCE_LINES = []

# exhaustive checks inside property tests make per-example timing unpredictable
settings.register_profile("exactgraphs", deadline=None)
settings.load_profile("exactgraphs")


def random_graph(rng, n, p=0.5, weights=None):
    """G(n, p); ``weights=(lo, hi)`` draws integer weights uniformly from lo..hi."""
    edges = []
    for i, j in itertools.combinations(range(n), 2):
        if rng.random() < p:
            w = int(rng.integers(weights[0], weights[1] + 1)) if weights else 1
            edges.append((i, j, w))
    return Graph(n, tuple(edges))


def random_connected_graph(rng, n, p=0.5):
    while True:
        g = random_graph(rng, n, p)
        if g.is_connected():
            return g


def proper_partitions(n):
    """Every bipartition with vertex 0 in S and both sides nonempty."""
    for k in range(1, 1 << (n - 1)):
        yield Partition.from_index(n, k)


def all_labeled_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(pairs[i] for i in range(len(pairs)) if mask >> i & 1))


def cut_table(g):
    """Cut value of every partition index, by direct evaluation over edges."""
    n = g.n
    k = np.arange(1 << (n - 1))
    bits = np.zeros((k.size, n), dtype=np.int64)
    bits[:, 1:] = (k[:, None] >> np.arange(n - 1)) & 1
    total = np.zeros(k.size, dtype=float)
    for u, v, w in g.edges:
        total += w * (bits[:, u] != bits[:, v])
    return total


def brute_mcut(g):
    return cut_table(g).max()


@st.composite
def graphs(draw, min_n=1, max_n=8, weighted=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    if weighted:
        ws = draw(st.lists(st.integers(1, 5), min_size=len(pairs), max_size=len(pairs)))
    else:
        ws = [1] * len(pairs)
    return Graph(n, tuple((u, v, w) for (u, v), c, w in zip(pairs, chosen, ws) if c))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
