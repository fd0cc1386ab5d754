"""Discrete edge curvatures, stochastic curvature-flow rewiring, and
over-squashing diagnostics for undirected unweighted graphs."""

from ._backend import active_backend, set_backend
from .curvature import (
    BfcParts,
    CurvatureKind,
    EdgeCurvature,
    all_edge_curvatures,
    balanced_forman,
    balanced_forman_components,
    edge_curvature,
    edge_curvature_values,
    forman_1d,
    forman_augmented,
    haantjes,
    oracle_bfc,
)
from .diagnostics import (
    DecayProfile,
    NormalizedAdjacency,
    ProfileComparison,
    compare_profiles,
    min_nonzero_powers,
    normalized_augmented_adjacency,
)
from .graph import (
    Graph,
    LoadReport,
    NodeLabelMap,
    common_neighbors,
    degree,
    largest_connected_component,
    load_edge_list,
    write_edge_list,
)
from .sdrf import (
    RewireAction,
    RewireEvent,
    RewireTrace,
    SdrfConfig,
    SdrfTermination,
    candidate_improvements,
    replay_trace,
    run_sdrf,
    sdrf_step,
    softmax_sample,
)

__version__ = "0.1.0"
