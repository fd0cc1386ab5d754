import pytest

from curvflow import _backend
from curvflow import generators as gen
from curvflow.graph import Graph


@pytest.fixture(params=["numba", "numpy"])
def backend(request):
    """Run the decorated test under each kernel backend."""
    previous = _backend.active_backend()
    _backend.set_backend(request.param)
    yield request.param
    _backend.set_backend(previous)


@pytest.fixture
def triangle():
    return gen.clique(3)


@pytest.fixture
def barbell5():
    return gen.barbell(5)


def random_connected_graph(rng, n_lo=6, n_hi=20):
    """Small random graph guaranteed to have at least one edge."""
    n = int(rng.integers(n_lo, n_hi + 1))
    p = float(rng.uniform(0.15, 0.5))
    g = gen.erdos_renyi(n, p, seed=int(rng.integers(0, 2**32)))
    if g.edge_count == 0:
        g = Graph.from_edges(n, [(0, 1)])
    return g


def adjacency_oracle(g):
    """Plain python adjacency sets, built from the edge list only."""
    adj = {v: set() for v in range(g.node_count)}
    for u, v in g.edge_list:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def triangle_count_oracle(g, u, v):
    """Triple loop over all nodes."""
    adj = adjacency_oracle(g)
    return sum(1 for w in range(g.node_count) if w not in (u, v) and w in adj[u] and w in adj[v])


def degree_oracle(g, v):
    return sum(1 for a, b in g.edge_list if v in (a, b))
