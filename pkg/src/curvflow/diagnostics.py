"""Over-squashing diagnostics via powers of the normalized augmented adjacency.

The d-th power of A_hat = D_hat^{-1/2} (A + I) D_hat^{-1/2} bounds how much a
node's features can influence a node d hops away; the decay of its minimum
nonzero entry over increasing d measures how bottlenecked the graph is.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .errors import EmptyGraphError, ProfileMismatchError, ResourceBudgetError
from .graph import Graph

MEM_BUDGET_ENV = "CURVFLOW_MEM_BUDGET"
DEFAULT_MEM_BUDGET = 4 * 1024**3
UNDERFLOW_SUSPECT = 1e-300
DENSIFY_FILL = 0.5


@dataclass(frozen=True)
class NormalizedAdjacency:
    """Symmetric, entrywise-[0,1] matrix with strictly positive diagonal."""

    dimension: int
    matrix: sp.csr_matrix

    def toarray(self) -> np.ndarray:
        return self.matrix.toarray()


@dataclass(frozen=True)
class DecayProfile:
    """Minimum strictly-positive entry of each matrix power.

    ``underflow_suspect`` lists powers whose minimum positive entry fell below
    1e-300, where double-precision underflow starts deciding what counts as
    zero.
    """

    powers: tuple[int, ...]
    values: tuple[float, ...]
    underflow_suspect: tuple[int, ...] = ()

    def value_at(self, power: int) -> float:
        try:
            return self.values[self.powers.index(power)]
        except ValueError:
            raise ProfileMismatchError(f"power {power} not in profile") from None


@dataclass(frozen=True)
class ProfileComparison:
    """Per-power after/before ratios plus the improvement verdict."""

    powers: tuple[int, ...]
    ratios: tuple[float, ...]
    threshold_power: int
    improved: bool

    def to_dict(self) -> dict:
        return {
            "powers": list(self.powers),
            "ratios": list(self.ratios),
            "threshold_power": self.threshold_power,
            "improved": self.improved,
        }


def normalized_augmented_adjacency(graph: Graph) -> NormalizedAdjacency:
    """D_hat^{-1/2} (A + I) D_hat^{-1/2} as sparse CSR."""
    n = graph.node_count
    if n == 0:
        raise EmptyGraphError("graph has no nodes")
    adjacency = sp.csr_matrix(
        (np.ones(len(graph.indices)), graph.indices, graph.indptr),
        shape=(n, n),
    )
    augmented = (adjacency + sp.eye(n, format="csr")).tocoo()
    degrees_hat = graph.degrees + 1
    # one rounding step per entry: 1/sqrt(d_i * d_j), not (1/sqrt(d_i))*(1/sqrt(d_j))
    data = 1.0 / np.sqrt(degrees_hat[augmented.row] * degrees_hat[augmented.col])
    matrix = sp.csr_matrix((data, (augmented.row, augmented.col)), shape=(n, n))
    return NormalizedAdjacency(dimension=n, matrix=matrix)


def _mem_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(MEM_BUDGET_ENV)
    return int(env) if env else DEFAULT_MEM_BUDGET


def _check_dense_budget(n: int, budget: int):
    # three n x n float64 arrays live during a dense multiply step
    needed = 3 * 8 * n * n
    if needed > budget:
        raise ResourceBudgetError(
            f"dense {n}x{n} power computation needs ~{needed} bytes, "
            f"budget is {budget} (set {MEM_BUDGET_ENV} to raise it)"
        )


def _min_positive_sparse(matrix: sp.csr_matrix) -> float:
    matrix.eliminate_zeros()
    if matrix.nnz == 0:
        raise ArithmeticError("matrix power has no positive entries")
    return float(matrix.data.min())


def _min_positive_dense(matrix: np.ndarray) -> float:
    positive = matrix[matrix > 0.0]
    if positive.size == 0:
        raise ArithmeticError("matrix power has no positive entries")
    return float(positive.min())


def iter_powers(graph: Graph, d_max: int, mem_budget: int | None = None):
    """Yield (d, A_hat^d) for d = 1..d_max by repeated multiplication.

    Powers stay sparse until fill-in exceeds 50%, then densify (guarded by the
    memory budget, default 4 GiB or ``CURVFLOW_MEM_BUDGET``); yielded matrices
    are scipy CSR while sparse and ndarray afterwards.
    """
    if d_max < 1:
        raise ValueError(f"d_max must be >= 1, got {d_max}")
    budget = _mem_budget(mem_budget)
    base = normalized_augmented_adjacency(graph).matrix
    n = graph.node_count
    current_sparse: sp.csr_matrix | None = base.copy()
    current_dense: np.ndarray | None = None
    for d in range(1, d_max + 1):
        if d > 1:
            if current_dense is None:
                current_sparse = (base @ current_sparse).tocsr()
            else:
                current_dense = base @ current_dense
        if current_dense is None:
            current_sparse.eliminate_zeros()
            if current_sparse.nnz > DENSIFY_FILL * n * n:
                _check_dense_budget(n, budget)
                current_dense = current_sparse.toarray()
                current_sparse = None
        yield d, (current_sparse if current_dense is None else current_dense)


def min_nonzero_powers(
    graph: Graph, d_max: int, mem_budget: int | None = None
) -> DecayProfile:
    """Decay profile for d = 1..d_max: the minimum strictly-positive entry of
    each power. Entries that underflow to exact 0.0 count as zero."""
    powers = []
    values = []
    suspects = []
    for d, matrix in iter_powers(graph, d_max, mem_budget):
        if sp.issparse(matrix):
            value = _min_positive_sparse(matrix)
        else:
            value = _min_positive_dense(matrix)
        powers.append(d)
        values.append(value)
        if value < UNDERFLOW_SUSPECT:
            suspects.append(d)
    return DecayProfile(
        powers=tuple(powers), values=tuple(values), underflow_suspect=tuple(suspects)
    )


def compare_profiles(
    before: DecayProfile,
    after: DecayProfile,
    powers,
    threshold_power: int = 0,
) -> ProfileComparison:
    """after/before ratio at each requested power.

    ``improved`` is true iff after >= before (non-strict) at every requested
    power greater than ``threshold_power``.
    """
    powers = [int(p) for p in powers]
    ratios = []
    improved = True
    for p in powers:
        b = before.value_at(p)
        a = after.value_at(p)
        ratios.append(a / b)
        if p > threshold_power and a < b:
            improved = False
    return ProfileComparison(
        powers=tuple(powers),
        ratios=tuple(ratios),
        threshold_power=threshold_power,
        improved=improved,
    )


def spectral_radius_estimate(
    nadj: NormalizedAdjacency, iterations: int = 200, seed: int = 0
) -> float:
    """Power-iteration estimate of the spectral radius (expected <= 1)."""
    rng = np.random.Generator(np.random.PCG64(seed))
    v = rng.standard_normal(nadj.dimension)
    v /= np.linalg.norm(v)
    radius = 0.0
    for _ in range(iterations):
        w = nadj.matrix @ v
        norm = np.linalg.norm(w)
        if norm == 0.0:
            return 0.0
        radius = norm
        v = w / norm
    return float(radius)


def profile_csv_text(profile: DecayProfile) -> str:
    """CSV with header ``power,min_nonzero``, scientific notation values."""
    lines = ["power,min_nonzero"]
    for p, v in zip(profile.powers, profile.values):
        lines.append(f"{p},{v:.6e}")
    return "".join(line + "\n" for line in lines)
