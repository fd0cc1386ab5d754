"""Synthetic graph families used by the CLI, tests, and benchmarks."""

from __future__ import annotations

import numpy as np

from .graph import Graph


def clique(k: int) -> Graph:
    """Complete graph K_k."""
    if k < 1:
        raise ValueError("clique needs k >= 1")
    return Graph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def path(n: int) -> Graph:
    """Path on n nodes, 0-1-2-...-(n-1)."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def binary_tree(levels: int) -> Graph:
    """Full binary tree with the given number of node levels (2^levels - 1 nodes).

    Node 0 is the root; node i has children 2i+1 and 2i+2.
    """
    if levels < 1:
        raise ValueError("binary_tree needs levels >= 1")
    n = 2**levels - 1
    edges = []
    for i in range(n):
        for c in (2 * i + 1, 2 * i + 2):
            if c < n:
                edges.append((i, c))
    return Graph.from_edges(n, edges)


def grid(rows: int, cols: int) -> Graph:
    """Rectangular grid graph, row-major node numbering."""
    if rows < 1 or cols < 1:
        raise ValueError("grid needs rows, cols >= 1")
    edges = []
    for r in range(rows):
        for c in range(cols):
            i = r * cols + c
            if c + 1 < cols:
                edges.append((i, i + 1))
            if r + 1 < rows:
                edges.append((i, i + cols))
    return Graph.from_edges(rows * cols, edges)


def barbell(m: int) -> Graph:
    """Two K_m cliques joined by a single bridge edge (m-1, m).

    Nodes 0..m-1 form the first clique, m..2m-1 the second; the bridge is the
    prototypical bottleneck edge.
    """
    if m < 2:
        raise ValueError("barbell needs m >= 2")
    edges = [(i, j) for i in range(m) for j in range(i + 1, m)]
    edges += [(m + i, m + j) for i in range(m) for j in range(i + 1, m)]
    edges.append((m - 1, m))
    return Graph.from_edges(2 * m, edges)


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with a pinned PCG64 stream: each pair (i, j), i < j, is drawn
    in row order, so a given (n, p, seed) always yields the same graph."""
    if n < 1:
        raise ValueError("erdos_renyi needs n >= 1")
    if not (0.0 <= p <= 1.0):
        raise ValueError("p must lie in [0, 1]")
    rng = np.random.Generator(np.random.PCG64(seed))
    edges = []
    for i in range(n - 1):
        hits = np.nonzero(rng.random(n - i - 1) < p)[0]
        edges.extend((i, i + 1 + int(j)) for j in hits)
    return Graph.from_edges(n, edges)
