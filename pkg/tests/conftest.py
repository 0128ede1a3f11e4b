import random

import pytest

from tweetnets.graph import Graph


def random_graph(rng: random.Random, n: int, p: float = 0.45,
                 directed: bool = False, max_weight: int = 3) -> Graph:
    """Random simple graph with at least one edge (weights 1..max_weight)."""
    while True:
        g = Graph(directed=directed)
        for i in range(n):
            g.add_node(i)
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < p:
                    if directed and rng.random() < 0.5:
                        g.add_edge(j, i, weight=rng.randint(1, max_weight))
                    else:
                        g.add_edge(i, j, weight=rng.randint(1, max_weight))
        if g.number_of_edges() > 0:
            return g


def two_triangles(bridge: bool = False) -> Graph:
    g = Graph(directed=False)
    for a, b in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]:
        g.add_edge(a, b)
    if bridge:
        g.add_edge(2, 3)
    return g


@pytest.fixture
def corpus500():
    from tweetnets.synthetic import synthetic_tweets

    return synthetic_tweets(500, seed=11)
