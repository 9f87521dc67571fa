"""Persisted run manifests: every estimator invocation can be re-executed
bit-identically from its manifest (wall time is recorded but never compared)."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from . import __version__
from .graph import Graph, load_edge_list
from .sampling import EstimateRun, estimate_bc_pair, estimate_bc_vertex

__all__ = ["RunManifest", "manifest_for_run", "replay", "verify_replay"]


@dataclass(frozen=True)
class RunManifest:
    tool_version: str
    method: str
    dataset: str
    target_id: int
    c: float
    seed: int
    max_samples: int
    estimate: float
    k: int
    S: float
    capped: bool
    settled: int
    wall_time_s: float

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RunManifest":
        return cls(**json.loads(text))


def manifest_for_run(run: EstimateRun, g: Graph, dataset: str, wall_time_s: float) -> RunManifest:
    """Record one estimator run; the target is stored as its original ID."""
    return RunManifest(
        tool_version=__version__,
        method=run.method,
        dataset=dataset,
        target_id=int(g.original_ids[run.target]),
        c=run.c,
        seed=run.seed,
        max_samples=run.max_samples,
        estimate=run.estimate,
        k=run.k,
        S=run.S,
        capped=run.capped,
        settled=run.settled,
        wall_time_s=wall_time_s,
    )


def replay(manifest: RunManifest, g: Graph | None = None) -> EstimateRun:
    """Re-execute the run a manifest describes (loading its dataset unless a
    graph is supplied)."""
    if g is None:
        g = load_edge_list(manifest.dataset)
    target = g.index_of(manifest.target_id)
    estimator = estimate_bc_vertex if manifest.method == "vertex" else estimate_bc_pair
    return estimator(g, target, manifest.c, seed=manifest.seed, max_samples=manifest.max_samples)


def verify_replay(manifest: RunManifest, g: Graph | None = None) -> bool:
    """True iff replaying reproduces estimate, k and S bit-identically."""
    run = replay(manifest, g)
    return run.estimate == manifest.estimate and run.k == manifest.k and run.S == manifest.S
