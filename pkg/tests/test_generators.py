import pytest

from curvflow import generators as gen


def test_clique_shape():
    g = gen.clique(6)
    assert g.node_count == 6
    assert g.edge_count == 15
    assert all(d == 5 for d in g.degrees)


def test_path_shape():
    g = gen.path(5)
    assert g.edge_count == 4
    assert sorted(g.degrees.tolist()) == [1, 1, 2, 2, 2]


def test_binary_tree_shape():
    g = gen.binary_tree(3)
    assert g.node_count == 7
    assert g.edge_count == 6
    assert g.degrees[0] == 2  # root


def test_grid_shape():
    g = gen.grid(3, 4)
    assert g.node_count == 12
    assert g.edge_count == 3 * 3 + 2 * 4  # horizontal + vertical


def test_barbell_bridge():
    g = gen.barbell(5)
    assert g.node_count == 10
    assert g.edge_count == 2 * 10 + 1
    assert g.has_edge(4, 5)
    assert g.degrees[4] == 5 and g.degrees[5] == 5


def test_erdos_renyi_deterministic():
    a = gen.erdos_renyi(50, 0.2, seed=99)
    b = gen.erdos_renyi(50, 0.2, seed=99)
    assert a == b
    c = gen.erdos_renyi(50, 0.2, seed=100)
    assert a != c


def test_erdos_renyi_bounds():
    assert gen.erdos_renyi(10, 0.0, seed=1).edge_count == 0
    assert gen.erdos_renyi(10, 1.0, seed=1).edge_count == 45
    with pytest.raises(ValueError):
        gen.erdos_renyi(10, 1.5, seed=1)
