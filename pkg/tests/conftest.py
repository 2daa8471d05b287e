import random
from itertools import combinations

import pytest

from chordal_forge.graph_core import Graph


def all_edges(n):
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def complete_graph(n):
    return Graph.from_edge_list(n, all_edges(n))


def cycle_graph(n):
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def random_gnm(n, m, seed):
    rng = random.Random(seed)
    edges = all_edges(n)
    idx = list(range(len(edges)))
    for i in range(m):
        j = rng.randrange(i, len(idx))
        idx[i], idx[j] = idx[j], idx[i]
    return Graph.from_edge_list(n, [edges[idx[i]] for i in range(m)])


def every_graph(n):
    """All labeled graphs on n vertices (use only for small n)."""
    edges = all_edges(n)
    for size in range(len(edges) + 1):
        for subset in combinations(edges, size):
            yield Graph.from_edge_list(n, subset)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)
