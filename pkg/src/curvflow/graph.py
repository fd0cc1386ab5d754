"""Immutable undirected simple graphs with CSR adjacency, plus edge-list I/O.

Node identity is a dense 0-based index; external string labels are kept in a
separate :class:`NodeLabelMap` so datasets with arbitrary ID schemes round-trip.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import (
    DirectedInputError,
    EdgeListParseError,
    EmptyGraphError,
    EmptyInputError,
    InvalidPairError,
)


@dataclass(frozen=True)
class Graph:
    """Undirected unweighted simple graph in CSR form.

    ``indptr``/``indices`` follow the usual CSR convention; every row of
    ``indices`` is sorted ascending, which makes neighbor intersection a
    two-pointer merge. Arrays are marked read-only after construction.
    """

    indptr: np.ndarray
    indices: np.ndarray

    def __post_init__(self):
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)

    @staticmethod
    def from_edges(node_count: int, edges) -> "Graph":
        """Build a graph from an iterable of (u, v) pairs.

        Pairs are canonicalized and deduplicated; self-loops are rejected
        because they indicate a caller bug (ingestion strips them earlier).
        """
        edge_set = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop ({u},{u}) not allowed")
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise ValueError(f"edge ({u},{v}) out of range for n={node_count}")
            edge_set.add((u, v) if u < v else (v, u))
        counts = np.zeros(node_count + 1, dtype=np.int64)
        for u, v in edge_set:
            counts[u + 1] += 1
            counts[v + 1] += 1
        indptr = np.cumsum(counts)
        indices = np.empty(int(indptr[-1]), dtype=np.int64)
        cursor = indptr[:-1].copy()
        for u, v in sorted(edge_set):
            indices[cursor[u]] = v
            cursor[u] += 1
            indices[cursor[v]] = u
            cursor[v] += 1
        for i in range(node_count):
            indices[indptr[i]:indptr[i + 1]].sort()
        return Graph(indptr=indptr, indices=indices)

    @staticmethod
    def from_adjacency_sets(adjacency) -> "Graph":
        """Build from one set of neighbor indices per node (must be symmetric)."""
        n = len(adjacency)
        indptr = np.zeros(n + 1, dtype=np.int64)
        for i, nbrs in enumerate(adjacency):
            indptr[i + 1] = indptr[i] + len(nbrs)
        indices = np.empty(int(indptr[-1]), dtype=np.int64)
        for i, nbrs in enumerate(adjacency):
            row = np.fromiter(nbrs, dtype=np.int64, count=len(nbrs))
            row.sort()
            indices[indptr[i]:indptr[i + 1]] = row
        return Graph(indptr=indptr, indices=indices)

    @property
    def node_count(self) -> int:
        return len(self.indptr) - 1

    @property
    def edge_count(self) -> int:
        return len(self.indices) // 2

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted neighbor indices of ``v`` (a read-only view)."""
        self._check_node(v)
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.indices[self.indptr[u]:self.indptr[u + 1]]
        pos = np.searchsorted(row, v)
        return pos < len(row) and row[pos] == v

    @property
    def edge_list(self) -> list[tuple[int, int]]:
        """Canonical edges (u, v) with u < v, sorted lexicographically."""
        return list(zip(self.edge_u.tolist(), self.edge_v.tolist()))

    @property
    def edge_u(self) -> np.ndarray:
        self._build_edge_arrays()
        return self._edge_u

    @property
    def edge_v(self) -> np.ndarray:
        self._build_edge_arrays()
        return self._edge_v

    def _build_edge_arrays(self):
        if hasattr(self, "_edge_u"):
            return
        n = self.node_count
        src = np.repeat(np.arange(n, dtype=np.int64), np.diff(self.indptr))
        mask = src < self.indices
        eu = src[mask]
        ev = self.indices[mask]
        eu.setflags(write=False)
        ev.setflags(write=False)
        # rows are sorted, so (eu, ev) is already lexicographic
        object.__setattr__(self, "_edge_u", eu)
        object.__setattr__(self, "_edge_v", ev)

    def adjacency_sets(self) -> list[set[int]]:
        """Mutable copy of the adjacency, for rewiring working state."""
        return [set(self.neighbors(v).tolist()) for v in range(self.node_count)]

    def _check_node(self, v: int):
        if not (0 <= v < self.node_count):
            raise IndexError(f"node index {v} out of range [0, {self.node_count})")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.node_count == other.node_count
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )


@dataclass(frozen=True)
class NodeLabelMap:
    """Bijection between external string labels and internal dense indices."""

    labels: tuple[str, ...]
    index_of: dict[str, int] = field(repr=False, default=None)

    def __post_init__(self):
        if self.index_of is None:
            object.__setattr__(
                self, "index_of", {lab: i for i, lab in enumerate(self.labels)}
            )
        if len(self.index_of) != len(self.labels):
            raise ValueError("labels are not unique")

    @staticmethod
    def identity(n: int) -> "NodeLabelMap":
        return NodeLabelMap(labels=tuple(str(i) for i in range(n)))

    def label(self, index: int) -> str:
        return self.labels[index]

    def index(self, label: str) -> int:
        return self.index_of[label]

    def __len__(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class LoadReport:
    """What ingestion dropped: duplicate data lines and self-loop lines."""

    duplicate_edges: int
    self_loops: int


def load_edge_list(path, directed_policy: str = "symmetrize"):
    """Read an edge-list file into (Graph, NodeLabelMap, LoadReport).

    Format: UTF-8 text, ``#`` comment lines and blank lines ignored, each data
    line exactly two whitespace-separated labels. Duplicate edges and
    self-loops are dropped and counted. Under ``symmetrize`` every arc (u,v)
    yields the undirected edge {u,v}; under ``reject-directed`` an arc whose
    reverse is missing raises :class:`DirectedInputError`.
    """
    if directed_policy not in ("symmetrize", "reject-directed"):
        raise ValueError(f"unknown directed_policy {directed_policy!r}")
    path = Path(path)
    labels: list[str] = []
    index_of: dict[str, int] = {}
    arcs: set[tuple[int, int]] = set()
    edges: set[tuple[int, int]] = set()
    duplicates = 0
    self_loops = 0

    def intern(label: str) -> int:
        if label not in index_of:
            index_of[label] = len(labels)
            labels.append(label)
        return index_of[label]

    with path.open("r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            tokens = line.split()
            if len(tokens) != 2:
                raise EdgeListParseError(
                    path, lineno, f"expected 2 tokens, got {len(tokens)}"
                )
            u = intern(tokens[0])
            v = intern(tokens[1])
            if u == v:
                self_loops += 1
                continue
            arcs.add((u, v))
            key = (u, v) if u < v else (v, u)
            if key in edges:
                duplicates += 1
            else:
                edges.add(key)

    if directed_policy == "reject-directed":
        for u, v in sorted(arcs):
            if (v, u) not in arcs:
                raise DirectedInputError(
                    f"arc {labels[u]!r} -> {labels[v]!r} has no reverse; "
                    "input is directed"
                )

    if not edges:
        raise EmptyInputError(f"{path}: no edges after parsing")

    graph = Graph.from_edges(len(labels), edges)
    return graph, NodeLabelMap(labels=tuple(labels)), LoadReport(duplicates, self_loops)


def write_edge_list(graph: Graph, labels: NodeLabelMap, path):
    """Write the canonical edge list, one edge per line, lines sorted.

    Each line is ``<label(u)> <label(v)>`` with (u, v) the canonical internal
    order; re-loading the file reproduces an isomorphic graph.
    """
    lines = [
        f"{labels.label(u)} {labels.label(v)}" for u, v in graph.edge_list
    ]
    lines.sort()
    Path(path).write_text("".join(line + "\n" for line in lines), encoding="utf-8")


def degree(graph: Graph, v: int) -> int:
    """Number of neighbors of ``v``."""
    graph._check_node(v)
    return int(graph.indptr[v + 1] - graph.indptr[v])


def common_neighbors(graph: Graph, u: int, v: int) -> np.ndarray:
    """Sorted N(u) ∩ N(v); its size is the triangle count of edge (u,v)."""
    if u == v:
        raise InvalidPairError(f"common_neighbors needs u != v, got {u}")
    graph._check_node(u)
    graph._check_node(v)
    return np.intersect1d(graph.neighbors(u), graph.neighbors(v))


def connected_components(graph: Graph) -> list[list[int]]:
    """Node lists of all components, each sorted, ordered by smallest member."""
    n = graph.node_count
    seen = np.zeros(n, dtype=bool)
    components = []
    for start in range(n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in graph.neighbors(x):
                if not seen[y]:
                    seen[y] = True
                    stack.append(int(y))
        comp.sort()
        components.append(comp)
    return components


def largest_component_nodes(graph: Graph) -> list[int]:
    """Sorted original indices of the largest component.

    Ties are broken by the smallest original node index contained in the
    component, so repeated runs pick the same subgraph.
    """
    if graph.node_count == 0:
        raise EmptyGraphError("graph has no nodes")
    components = connected_components(graph)
    # components are ordered by smallest member already; max() keeps the first
    # of equal-sized ones, which is the smallest-index tie-break
    return max(components, key=len)


def induced_subgraph(graph: Graph, nodes: list[int]) -> Graph:
    """Subgraph on ``nodes`` (sorted original indices), reindexed to 0..k-1."""
    remap = {old: new for new, old in enumerate(nodes)}
    edges = [
        (remap[u], remap[v])
        for u, v in graph.edge_list
        if u in remap and v in remap
    ]
    return Graph.from_edges(len(nodes), edges)


def largest_connected_component(graph: Graph) -> Graph:
    """Induced subgraph on the largest component, reindexed to contiguous ids."""
    return induced_subgraph(graph, largest_component_nodes(graph))
