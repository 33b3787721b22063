import random

import pytest

from lionsweep.graphs import make_graph


def random_connected_graph(rng: random.Random, n_min=2, n_max=12):
    """Random connected simple graph: a random spanning tree plus extra edges."""
    n = rng.randint(n_min, n_max)
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    extra = rng.randint(0, n)
    for _ in range(extra):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return make_graph(n, edges)


@pytest.fixture
def rng():
    return random.Random(20240517)
