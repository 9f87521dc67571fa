"""Exact and adaptive-sampling approximation of betweenness centrality."""

__version__ = "0.1.0"

from .graph import (
    BfsResult,
    EdgeListParseError,
    Graph,
    bfs_sssp,
    bfs_truncated,
    canonical_edge_text,
    load_edge_list,
    parse_edge_list,
)
from .exact import (
    accumulate_dependencies,
    brandes_bc,
    dependency_table,
    pair_dependency,
    pair_dependency_table,
    write_bc_csv,
)
from .sampling import (
    EstimateRun,
    GuaranteeParams,
    PairSample,
    estimate_bc_pair,
    estimate_bc_vertex,
    theorem_params_pair,
    theorem_params_vertex,
)
from .model import (
    ModelDist,
    Moments,
    StoppingReport,
    bound_deviation,
    bound_termination,
    sample_piece_marginal,
    simulate_stopping,
    stick_breaking_sample,
)
from .manifest import RunManifest, manifest_for_run, replay, verify_replay

__all__ = [
    "__version__",
    "Graph",
    "BfsResult",
    "EdgeListParseError",
    "parse_edge_list",
    "load_edge_list",
    "bfs_sssp",
    "bfs_truncated",
    "canonical_edge_text",
    "accumulate_dependencies",
    "brandes_bc",
    "pair_dependency",
    "dependency_table",
    "pair_dependency_table",
    "write_bc_csv",
    "EstimateRun",
    "PairSample",
    "GuaranteeParams",
    "estimate_bc_vertex",
    "estimate_bc_pair",
    "theorem_params_vertex",
    "theorem_params_pair",
    "ModelDist",
    "Moments",
    "StoppingReport",
    "stick_breaking_sample",
    "sample_piece_marginal",
    "bound_termination",
    "bound_deviation",
    "simulate_stopping",
    "RunManifest",
    "manifest_for_run",
    "replay",
    "verify_replay",
]
