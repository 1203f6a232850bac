from __future__ import annotations

import random

import pytest

from wordrep.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    extremal8,
    path_graph,
    wheel_graph,
)


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def w5() -> Graph:
    return wheel_graph(5)


@pytest.fixture
def p3() -> Graph:
    return path_graph(3)


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def h8() -> Graph:
    return extremal8()


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)
