"""Per-edge discrete curvature kernels and their brute-force reference oracle.

Four kinds are supported: degree-only 1D Forman, triangle-corrected augmented
Forman, the plain triangle count (Haantjes), and the balanced Forman
curvature (BFC) which also weighs diagonal-free 4-cycles. Integer-valued
kinds are computed in exact integer arithmetic; BFC is float64.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ._backend import kernels
from ._kernels_numpy import (
    KIND_AUGMENTED,
    KIND_BFC,
    KIND_FORMAN_1D,
    KIND_HAANTJES,
)
from .errors import NotAnEdgeError, OracleScaleError
from .graph import Graph

ORACLE_MAX_NODES = 64


class CurvatureKind(enum.IntEnum):
    """The four edge-curvature kinds."""

    FORMAN_1D = KIND_FORMAN_1D
    AUGMENTED_FORMAN = KIND_AUGMENTED
    HAANTJES = KIND_HAANTJES
    BALANCED_FORMAN = KIND_BFC

    @property
    def token(self) -> str:
        return _KIND_TOKENS[self]

    @staticmethod
    def from_token(token: str) -> "CurvatureKind":
        try:
            return _TOKEN_KINDS[token.lower()]
        except KeyError:
            raise ValueError(
                f"unknown curvature kind {token!r}; expected one of "
                f"{sorted(_TOKEN_KINDS)}"
            ) from None

    @property
    def integer_valued(self) -> bool:
        return self is not CurvatureKind.BALANCED_FORMAN


_KIND_TOKENS = {
    CurvatureKind.FORMAN_1D: "1d",
    CurvatureKind.AUGMENTED_FORMAN: "augmented",
    CurvatureKind.HAANTJES: "haantjes",
    CurvatureKind.BALANCED_FORMAN: "bfc",
}
_TOKEN_KINDS = {v: k for k, v in _KIND_TOKENS.items()}


@dataclass(frozen=True)
class EdgeCurvature:
    """One edge (u < v) with its curvature value under ``kind``."""

    u: int
    v: int
    kind: CurvatureKind
    value: float


class BfcParts(NamedTuple):
    """Intermediate quantities of the BFC kernel for one edge."""

    triangles: int
    s_u: int
    s_v: int
    gamma_max: int


def _canonical_edge(graph: Graph, u: int, v: int) -> tuple[int, int]:
    graph._check_node(u)
    graph._check_node(v)
    if u == v or not graph.has_edge(u, v):
        raise NotAnEdgeError(u, v)
    return (u, v) if u < v else (v, u)


def forman_1d(graph: Graph, u: int, v: int) -> int:
    """4 - (deg(u) + deg(v)); at most 2, attained by an isolated edge."""
    u, v = _canonical_edge(graph, u, v)
    deg = graph.degrees
    return int(4 - (deg[u] + deg[v]))


def haantjes(graph: Graph, u: int, v: int) -> int:
    """Number of triangles containing the edge, |N(u) ∩ N(v)|."""
    u, v = _canonical_edge(graph, u, v)
    return int(kernels()._tri(graph.indptr, graph.indices, u, v, -1, -1))


def forman_augmented(graph: Graph, u: int, v: int) -> int:
    """1D Forman plus 3 per triangle containing the edge."""
    u, v = _canonical_edge(graph, u, v)
    deg = graph.degrees
    t = int(kernels()._tri(graph.indptr, graph.indices, u, v, -1, -1))
    return int(4 - (deg[u] + deg[v])) + 3 * t


def balanced_forman(graph: Graph, u: int, v: int) -> float:
    """Balanced Forman curvature; 0 whenever an endpoint is a leaf."""
    u, v = _canonical_edge(graph, u, v)
    return float(
        kernels()._bfc_one(graph.indptr, graph.indices, graph.degrees, u, v, -1, -1)
    )


def balanced_forman_components(graph: Graph, u: int, v: int) -> BfcParts:
    """Expose the BFC kernel's triangle count, s values, and gamma_max.

    s_u counts neighbors of ``u`` that close a diagonal-free 4-cycle through
    the edge (likewise s_v); gamma_max is the largest number of such cycles
    sharing one non-endpoint node (0 when there are none).
    """
    u0, v0 = _canonical_edge(graph, u, v)
    if (u0, v0) != (u, v):
        t, s_v, s_u, gmax = kernels().bfc_parts(
            graph.indptr, graph.indices, graph.degrees, u0, v0
        )
    else:
        t, s_u, s_v, gmax = kernels().bfc_parts(
            graph.indptr, graph.indices, graph.degrees, u0, v0
        )
    return BfcParts(int(t), int(s_u), int(s_v), int(gmax))


def edge_curvature(graph: Graph, kind: CurvatureKind, u: int, v: int) -> float:
    """Single-edge dispatch over all four kinds (float-valued)."""
    u, v = _canonical_edge(graph, u, v)
    return float(
        kernels().curv_one(
            graph.indptr, graph.indices, graph.degrees, int(kind), u, v, -1, -1
        )
    )


def edge_curvature_values(graph: Graph, kind: CurvatureKind) -> np.ndarray:
    """float64 curvature of every canonical edge, in edge_list order."""
    kind = CurvatureKind(kind)
    return kernels().curv_all(
        graph.indptr, graph.indices, graph.degrees, int(kind), graph.edge_u, graph.edge_v
    )


def all_edge_curvatures(graph: Graph, kind: CurvatureKind) -> list[EdgeCurvature]:
    """One EdgeCurvature per canonical edge, order matching ``graph.edge_list``."""
    kind = CurvatureKind(kind)
    values = edge_curvature_values(graph, kind)
    return [
        EdgeCurvature(int(u), int(v), kind, float(x))
        for u, v, x in zip(graph.edge_u, graph.edge_v, values)
    ]


def oracle_bfc(graph: Graph, u: int, v: int) -> float:
    """Reference BFC by exhaustive enumeration of 4-node subsets through the edge.

    Independent of the CSR kernels: works on plain Python sets and scans every
    ordered node pair (a, b) for the diagonal-free cycle u-a-b-v. O(n^2) pairs
    per edge, so it refuses graphs larger than ORACLE_MAX_NODES.
    """
    if graph.node_count > ORACLE_MAX_NODES:
        raise OracleScaleError(
            f"oracle limited to {ORACLE_MAX_NODES} nodes, got {graph.node_count}"
        )
    u, v = _canonical_edge(graph, u, v)
    n = graph.node_count
    adj = [set(graph.neighbors(x).tolist()) for x in range(n)]
    d1, d2 = len(adj[u]), len(adj[v])
    if min(d1, d2) == 1:
        return 0.0
    t = sum(1 for w in range(n) if w in adj[u] and w in adj[v])
    participation: dict[int, int] = {}
    k_side: set[int] = set()
    w_side: set[int] = set()
    for a in range(n):
        for b in range(n):
            if a == b or a in (u, v) or b in (u, v):
                continue
            if (
                a in adj[u]
                and a not in adj[v]
                and b in adj[v]
                and b not in adj[u]
                and b in adj[a]
            ):
                participation[a] = participation.get(a, 0) + 1
                participation[b] = participation.get(b, 0) + 1
                k_side.add(a)
                w_side.add(b)
    s1, s2 = len(k_side), len(w_side)
    dmax, dmin = max(d1, d2), min(d1, d2)
    value = 2.0 / d1 + 2.0 / d2 - 2.0 + 2.0 * t / dmax + t / dmin
    if s1 + s2 > 0:
        value += (1.0 / max(participation.values())) / dmax * (s1 + s2)
    return value
