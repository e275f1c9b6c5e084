import itertools
import random

import pytest
from hypothesis import strategies as st

from connforce.graph import Graph, is_connected, new_graph


def double_star() -> Graph:
    """S_{2,2}: centres 0-1, leaves 2,3 on 0 and 4,5 on 1."""
    return new_graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])


def spider(legs: int, length: int) -> Graph:
    edges = []
    nxt = 1
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return new_graph(nxt, edges)


def triangle_with_pendant() -> Graph:
    """Triangle 0,1,2 with leaf 3 on vertex 0."""
    return new_graph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


def net() -> Graph:
    return new_graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return new_graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, connected: bool = False) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, chosen) if keep]
    if connected:
        # thread a random spanning tree through so the draw is always connected
        order = draw(st.permutations(range(n)))
        for i in range(1, n):
            edges.append((order[i], order[draw(st.integers(0, i - 1))]))
    return new_graph(n, edges)


@st.composite
def graph_and_set(draw, max_n: int = 10, connected: bool = False):
    g = draw(graphs(1, max_n, connected))
    members = draw(st.sets(st.integers(0, g.n - 1)))
    return g, g.vertex_set(members)


@pytest.fixture
def rng():
    return random.Random(12345)


__all__ = ["double_star", "spider", "triangle_with_pendant", "net", "random_graph", "graphs", "is_connected"]
