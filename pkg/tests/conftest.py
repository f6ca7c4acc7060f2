"""Shared fixtures: the diamond worked example and random graph corpora."""

from __future__ import annotations

import random

import pytest

from treecount import Graph

# 4-cycle 1-2-3-4 plus the chord 1-3; it has exactly 8 spanning trees.
DIAMOND_EDGES = [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]

# All eight spanning trees of the diamond, as edge subsets.
DIAMOND_TREES = [
    {(1, 4), (3, 4), (2, 3)},
    {(3, 4), (2, 3), (1, 2)},
    {(2, 3), (1, 2), (1, 4)},
    {(1, 2), (1, 4), (3, 4)},
    {(1, 4), (1, 3), (2, 3)},
    {(1, 4), (1, 2), (1, 3)},
    {(3, 4), (2, 3), (1, 3)},
    {(3, 4), (1, 3), (1, 2)},
]


@pytest.fixture
def diamond() -> Graph:
    return Graph(4, DIAMOND_EDGES)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if rng.random() < p
    ]
    return Graph(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if g.is_connected():
            return g
