"""Stochastic discrete curvature-flow rewiring.

Each iteration supports the minimum-curvature edge by adding one edge between
the neighborhoods of its endpoints, sampled with softmax(tau * improvement),
then optionally removes the maximum-curvature edge when its curvature exceeds
the removal bound. Runs are fully reproducible: the PRNG is pinned to numpy's
PCG64 and its name is recorded in the trace.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .curvature import CurvatureKind, edge_curvature_values
from .errors import EmptyDistributionError, EmptyGraphError, NotAnEdgeError
from .graph import Graph

RNG_NAME = "numpy-pcg64"


@dataclass(frozen=True)
class SdrfConfig:
    """Rewiring hyperparameters."""

    kind: CurvatureKind
    tau: float
    max_iterations: int
    removal_bound: float | None = None
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", CurvatureKind(self.kind))
        if not (self.tau > 0):
            raise ValueError(f"tau must be > 0, got {self.tau}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations}")
        if not (0 <= self.seed < 2**64):
            raise ValueError("seed must fit in an unsigned 64-bit integer")


class RewireAction(str, enum.Enum):
    ADDED = "added"
    REMOVED = "removed"


class SdrfTermination(str, enum.Enum):
    CONVERGED = "converged"
    MAX_ITERATIONS = "max_iterations"


@dataclass(frozen=True)
class RewireEvent:
    """One add/remove decision, with the curvature values that drove it.

    ``driving_edge``/``improvement`` are set for additions only;
    ``disconnected`` is set for removals that split the graph.
    """

    iteration: int
    action: RewireAction
    edge: tuple[int, int]
    curvature_before: float
    driving_edge: tuple[int, int] | None = None
    improvement: float | None = None
    disconnected: bool | None = None


@dataclass(frozen=True)
class RewireTrace:
    """Ordered event log; replaying it against the input graph reproduces
    the output graph exactly."""

    config: SdrfConfig
    events: tuple[RewireEvent, ...]
    termination: SdrfTermination
    edges_added: int
    edges_removed: int
    generator: str = RNG_NAME


def make_rng(seed: int) -> np.random.Generator:
    """The pinned PRNG for rewiring runs."""
    return np.random.Generator(np.random.PCG64(seed))


def softmax_sample(x, tau: float, rng: np.random.Generator) -> int:
    """Sample an index with probability softmax(tau * x).

    Numerically stabilized by subtracting max(tau * x) before exponentiating,
    so arbitrarily large tau * x never overflows. Consumes exactly one
    uniform double from ``rng`` per call (inverse-CDF sampling).
    """
    x = np.asarray(x, dtype=np.float64)
    if x.size == 0:
        raise EmptyDistributionError("cannot sample from an empty candidate set")
    if not (tau > 0):
        raise ValueError(f"tau must be > 0, got {tau}")
    z = tau * x
    if not np.isfinite(z).all():
        raise ValueError("non-finite softmax logits")
    p = np.exp(z - z.max())
    p /= p.sum()
    cdf = np.cumsum(p)
    idx = int(np.searchsorted(cdf, rng.random(), side="right"))
    return min(idx, x.size - 1)


def candidate_improvements(
    graph: Graph, kind: CurvatureKind, i: int, j: int
) -> list[tuple[tuple[int, int], float]]:
    """Legal support edges for (i, j) and their curvature improvements.

    Candidates are non-edges {k, l} with k in N(i) ∪ {i} and l in N(j) ∪ {j};
    the improvement is the change in Curv(i, j) from adding {k, l}. Pairs
    reachable from both sides are listed once, canonically, in lexicographic
    order.
    """
    if not graph.has_edge(i, j):
        raise NotAnEdgeError(i, j)
    kind = CurvatureKind(kind)
    side_i = set(graph.neighbors(i).tolist()) | {i}
    side_j = set(graph.neighbors(j).tolist()) | {j}
    pairs = set()
    for k in side_i:
        for l in side_j:
            if k == l:
                continue
            key = (k, l) if k < l else (l, k)
            if not graph.has_edge(*key):
                pairs.add(key)
    cands = sorted(pairs)
    if not cands:
        return []
    ka = np.fromiter((k for k, _ in cands), dtype=np.int64, count=len(cands))
    la = np.fromiter((l for _, l in cands), dtype=np.int64, count=len(cands))
    x = kernels().improvements(
        graph.indptr, graph.indices, graph.degrees, int(kind), i, j, ka, la
    )
    return [(pair, float(val)) for pair, val in zip(cands, x)]


def _with_edge_added(graph: Graph, a: int, b: int) -> Graph:
    indptr, indices = graph.indptr, graph.indices
    pa = int(indptr[a] + np.searchsorted(indices[indptr[a]:indptr[a + 1]], b))
    pb = int(indptr[b] + np.searchsorted(indices[indptr[b]:indptr[b + 1]], a))
    new_indices = np.insert(indices, [pa, pb], [b, a])
    span = np.arange(graph.node_count + 1)
    new_indptr = indptr + (span > a) + (span > b)
    return Graph(indptr=new_indptr, indices=new_indices)


def _with_edge_removed(graph: Graph, a: int, b: int) -> Graph:
    indptr, indices = graph.indptr, graph.indices
    pa = int(indptr[a] + np.searchsorted(indices[indptr[a]:indptr[a + 1]], b))
    pb = int(indptr[b] + np.searchsorted(indices[indptr[b]:indptr[b + 1]], a))
    new_indices = np.delete(indices, [pa, pb])
    span = np.arange(graph.node_count + 1)
    new_indptr = indptr - (span > a) - (span > b)
    return Graph(indptr=new_indptr, indices=new_indices)


def _still_connected(graph: Graph, a: int, b: int) -> bool:
    """BFS from a looking for b (used to flag disconnecting removals)."""
    seen = np.zeros(graph.node_count, dtype=bool)
    stack = [a]
    seen[a] = True
    while stack:
        x = stack.pop()
        if x == b:
            return True
        for y in graph.neighbors(x):
            if not seen[y]:
                seen[y] = True
                stack.append(int(y))
    return False


def sdrf_step(
    graph: Graph,
    config: SdrfConfig,
    rng: np.random.Generator,
    iteration: int = 0,
) -> tuple[Graph, list[RewireEvent], bool]:
    """One rewiring iteration: support the min-curvature edge, then apply the
    bounded removal on the post-addition graph. Ties in the min/max scan are
    broken by canonical edge order."""
    if graph.edge_count == 0:
        raise EmptyGraphError("sdrf needs a graph with at least one edge")
    events: list[RewireEvent] = []

    values = edge_curvature_values(graph, config.kind)
    min_idx = int(np.argmin(values))
    i = int(graph.edge_u[min_idx])
    j = int(graph.edge_v[min_idx])
    cands = candidate_improvements(graph, config.kind, i, j)
    working = graph
    if cands:
        x = np.array([imp for _, imp in cands], dtype=np.float64)
        chosen = softmax_sample(x, config.tau, rng)
        k, l = cands[chosen][0]
        working = _with_edge_added(graph, k, l)
        events.append(
            RewireEvent(
                iteration=iteration,
                action=RewireAction.ADDED,
                edge=(k, l),
                curvature_before=float(values[min_idx]),
                driving_edge=(i, j),
                improvement=float(x[chosen]),
            )
        )

    if config.removal_bound is not None and working.edge_count > 0:
        post = edge_curvature_values(working, config.kind)
        max_idx = int(np.argmax(post))
        if post[max_idx] > config.removal_bound:
            a = int(working.edge_u[max_idx])
            b = int(working.edge_v[max_idx])
            removed = _with_edge_removed(working, a, b)
            events.append(
                RewireEvent(
                    iteration=iteration,
                    action=RewireAction.REMOVED,
                    edge=(a, b),
                    curvature_before=float(post[max_idx]),
                    disconnected=not _still_connected(removed, a, b),
                )
            )
            working = removed

    return working, events, bool(events)


def run_sdrf(graph: Graph, config: SdrfConfig) -> tuple[Graph, RewireTrace]:
    """Iterate sdrf_step until a step makes no change (converged) or the
    iteration budget is exhausted."""
    if graph.edge_count == 0:
        raise EmptyGraphError("sdrf needs a graph with at least one edge")
    rng = make_rng(config.seed)
    events: list[RewireEvent] = []
    termination = SdrfTermination.MAX_ITERATIONS
    for iteration in range(config.max_iterations):
        graph, step_events, progressed = sdrf_step(graph, config, rng, iteration)
        events.extend(step_events)
        if not progressed:
            termination = SdrfTermination.CONVERGED
            break
        if graph.edge_count == 0:
            # removal pruned the last edge; nothing left to rewire
            termination = SdrfTermination.CONVERGED
            break
    trace = RewireTrace(
        config=config,
        events=tuple(events),
        termination=termination,
        edges_added=sum(1 for e in events if e.action is RewireAction.ADDED),
        edges_removed=sum(1 for e in events if e.action is RewireAction.REMOVED),
    )
    return graph, trace


def replay_trace(graph: Graph, trace: RewireTrace) -> Graph:
    """Apply the trace's events to the input graph; must reproduce the run's
    output exactly."""
    adjacency = graph.adjacency_sets()
    for event in trace.events:
        a, b = event.edge
        if event.action is RewireAction.ADDED:
            adjacency[a].add(b)
            adjacency[b].add(a)
        else:
            adjacency[a].discard(b)
            adjacency[b].discard(a)
    return Graph.from_adjacency_sets(adjacency)


def trace_to_dict(trace: RewireTrace) -> dict:
    """JSON-ready representation; schema documented in the README."""
    cfg = trace.config
    return {
        "config": {
            "kind": cfg.kind.token,
            "tau": cfg.tau,
            "max_iterations": cfg.max_iterations,
            "removal_bound": cfg.removal_bound,
            "seed": cfg.seed,
        },
        "generator": trace.generator,
        "termination": trace.termination.value,
        "edges_added": trace.edges_added,
        "edges_removed": trace.edges_removed,
        "events": [_event_to_dict(e) for e in trace.events],
    }


def _event_to_dict(event: RewireEvent) -> dict:
    out = {
        "iteration": event.iteration,
        "action": event.action.value,
        "edge": list(event.edge),
        "curvature_before": event.curvature_before,
    }
    if event.action is RewireAction.ADDED:
        out["driving_edge"] = list(event.driving_edge)
        out["improvement"] = event.improvement
    else:
        out["disconnected"] = event.disconnected
    return out


def trace_from_dict(data: dict) -> RewireTrace:
    cfg = data["config"]
    config = SdrfConfig(
        kind=CurvatureKind.from_token(cfg["kind"]),
        tau=cfg["tau"],
        max_iterations=cfg["max_iterations"],
        removal_bound=cfg["removal_bound"],
        seed=cfg["seed"],
    )
    events = []
    for e in data["events"]:
        action = RewireAction(e["action"])
        events.append(
            RewireEvent(
                iteration=e["iteration"],
                action=action,
                edge=tuple(e["edge"]),
                curvature_before=e["curvature_before"],
                driving_edge=tuple(e["driving_edge"]) if "driving_edge" in e else None,
                improvement=e.get("improvement"),
                disconnected=e.get("disconnected"),
            )
        )
    return RewireTrace(
        config=config,
        events=tuple(events),
        termination=SdrfTermination(data["termination"]),
        edges_added=data["edges_added"],
        edges_removed=data["edges_removed"],
        generator=data.get("generator", RNG_NAME),
    )
