import numpy as np
import pytest

from conftest import adjacency_oracle, random_connected_graph

from curvflow import generators as gen
from curvflow.errors import (
    DirectedInputError,
    EdgeListParseError,
    EmptyInputError,
    InvalidPairError,
)
from curvflow.graph import (
    Graph,
    NodeLabelMap,
    common_neighbors,
    degree,
    largest_connected_component,
    load_edge_list,
    write_edge_list,
)


def _write(tmp_path, text, name="g.edgelist"):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_load_drops_duplicates_and_self_loops(tmp_path):
    g, labels, report = load_edge_list(_write(tmp_path, "a b\nb a\na a\n"))
    assert g.node_count == 2
    assert g.edge_list == [(0, 1)]
    assert report.duplicate_edges == 1
    assert report.self_loops == 1
    assert labels.label(0) == "a" and labels.label(1) == "b"


def test_load_triangle(tmp_path):
    g, _, report = load_edge_list(_write(tmp_path, "0 1\n1 2\n2 0\n"))
    assert g.node_count == 3
    assert g.edge_count == 3
    assert report.duplicate_edges == 0 and report.self_loops == 0


def test_load_skips_comments_and_blanks(tmp_path):
    g, _, _ = load_edge_list(_write(tmp_path, "# header\n\nx y\n\n# tail\ny z\n"))
    assert g.node_count == 3
    assert g.edge_count == 2


def test_load_malformed_line_reports_number(tmp_path):
    path = _write(tmp_path, "a b\na b c\n")
    with pytest.raises(EdgeListParseError) as err:
        load_edge_list(path)
    assert err.value.line_number == 2


def test_load_zero_edges_is_error(tmp_path):
    with pytest.raises(EmptyInputError):
        load_edge_list(_write(tmp_path, "# only comments\na a\n"))


def test_reject_directed_policy(tmp_path):
    path = _write(tmp_path, "a b\n")
    with pytest.raises(DirectedInputError):
        load_edge_list(path, directed_policy="reject-directed")
    sym = _write(tmp_path, "a b\nb a\n", name="sym.edgelist")
    g, _, _ = load_edge_list(sym, directed_policy="reject-directed")
    assert g.edge_count == 1


def test_symmetrize_makes_arcs_undirected(tmp_path):
    g, labels, _ = load_edge_list(_write(tmp_path, "a b\nb c\nc a\n"))
    for u, v in g.edge_list:
        assert v in g.neighbors(u) and u in g.neighbors(v)


def test_lcc_two_triangles_ties_to_smallest_index():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    lcc = largest_connected_component(g)
    assert lcc == gen.clique(3)


def test_lcc_connected_graph_unchanged():
    g = gen.path(4)
    assert largest_connected_component(g) == g


def test_lcc_k5_plus_isolated_edge():
    edges = [(i, j) for i in range(5) for j in range(i + 1, 5)] + [(5, 6)]
    g = Graph.from_edges(7, edges)

    # brute-force component enumeration: grow sets until closed under adjacency
    adj = adjacency_oracle(g)
    comps = []
    todo = set(range(g.node_count))
    while todo:
        comp = {min(todo)}
        while True:
            grown = comp | {w for v in comp for w in adj[v]}
            if grown == comp:
                break
            comp = grown
        comps.append(comp)
        todo -= comp
    assert max(len(c) for c in comps) == 5

    assert largest_connected_component(g) == gen.clique(5)


def test_lcc_idempotent():
    rng = np.random.Generator(np.random.PCG64(5))
    for _ in range(20):
        g = gen.erdos_renyi(int(rng.integers(4, 25)), 0.15, seed=int(rng.integers(0, 1000)))
        if g.edge_count == 0:
            continue
        once = largest_connected_component(g)
        assert largest_connected_component(once) == once


def test_degree_examples():
    assert degree(gen.clique(4), 2) == 3
    assert degree(gen.path(2), 0) == 1
    star = Graph.from_edges(7, [(0, i) for i in range(1, 7)])
    assert degree(star, 0) == 6


def test_degree_out_of_range():
    with pytest.raises(IndexError):
        degree(gen.path(3), 3)


def test_common_neighbors_examples(triangle):
    assert common_neighbors(triangle, 0, 1).tolist() == [2]
    assert common_neighbors(gen.path(3), 0, 2).tolist() == [1]
    k5 = gen.clique(5)
    assert common_neighbors(k5, 1, 3).tolist() == [0, 2, 4]


def test_common_neighbors_same_node_rejected(triangle):
    with pytest.raises(InvalidPairError):
        common_neighbors(triangle, 1, 1)


def test_common_neighbors_symmetric():
    rng = np.random.Generator(np.random.PCG64(7))
    for _ in range(10):
        g = random_connected_graph(rng)
        for u, v in g.edge_list[:20]:
            assert common_neighbors(g, u, v).tolist() == common_neighbors(g, v, u).tolist()


def test_round_trip_preserves_canonical_edges(tmp_path):
    rng = np.random.Generator(np.random.PCG64(11))
    for trial in range(10):
        g = random_connected_graph(rng)
        labels = NodeLabelMap(tuple(f"node-{i}" for i in range(g.node_count)))
        path = tmp_path / f"round-{trial}.edgelist"
        write_edge_list(g, labels, path)
        g2, labels2, _ = load_edge_list(path)
        # map reloaded edges back through the original label map
        edges = set()
        for u, v in g2.edge_list:
            a = labels.index(labels2.label(u))
            b = labels.index(labels2.label(v))
            edges.add((a, b) if a < b else (b, a))
        assert edges == set(g.edge_list)


def test_graph_invariants_random():
    rng = np.random.Generator(np.random.PCG64(13))
    for _ in range(15):
        g = random_connected_graph(rng)
        degrees = g.degrees
        assert degrees.sum() == 2 * g.edge_count
        for v in range(g.node_count):
            row = g.neighbors(v)
            assert v not in row
            assert len(set(row.tolist())) == len(row)
            assert (np.diff(row) > 0).all() or len(row) < 2
            for w in row:
                assert v in g.neighbors(int(w))


def test_graph_arrays_read_only(triangle):
    with pytest.raises(ValueError):
        triangle.indices[0] = 99
