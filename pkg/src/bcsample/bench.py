"""Benchmark machinery behind the CLI: c-sweeps against the exact oracle,
numerical model checks, and vertex-vs-pair cost comparison.

All CSV output is deterministic for fixed seeds; wall times go to stdout,
never into CSV rows.  Every CSV carries a '#' preamble with the seed and
parameters that regenerate it.
"""

from __future__ import annotations

import csv
import math
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy import integrate, stats

from . import __version__
from .exact import brandes_bc
from .graph import Graph
from .manifest import RunManifest, manifest_for_run
from .model import (
    ModelDist,
    bound_deviation,
    bound_termination,
    sample_piece_marginal,
    simulate_stopping,
)
from .sampling import estimate_bc_pair, estimate_bc_vertex

__all__ = [
    "SweepRecord",
    "CheckRow",
    "CostRecord",
    "run_sweep",
    "run_model_checks",
    "run_cost_comparison",
    "exact_bc_cached",
    "default_target",
    "write_sweep_csv",
    "write_check_csv",
    "write_cost_csv",
    "HAND_VALUES",
]

SWEEP_HEADER = ["c", "mean_k", "mean_factor_diff", "inv_factor_diff"]


def _fmt(x) -> str:
    return repr(float(x))


@dataclass(frozen=True)
class SweepRecord:
    """One c-grid point averaged over seeded replications."""

    dataset: str
    target_id: int
    method: str
    c: float
    mean_k: float
    mean_factor_diff: float
    replications: int
    seed_base: int


def run_sweep(
    g: Graph,
    target: int,
    method: str,
    c_grid,
    replications: int,
    seed_base: int,
    exact_value: float,
    dataset: str,
    max_samples: int | None = None,
) -> tuple[list[SweepRecord], list[RunManifest]]:
    """Run ``replications`` seeded estimator runs per c value.

    Replication r uses seed ``seed_base + r``; the factor difference of a run
    is |estimate - exact| / exact, which needs exact > 0.
    """
    if exact_value <= 0:
        raise ValueError("sweep target must have nonzero exact BC")
    estimator = {"vertex": estimate_bc_vertex, "pair": estimate_bc_pair}[method]
    records: list[SweepRecord] = []
    manifests: list[RunManifest] = []
    for c in c_grid:
        ks = []
        diffs = []
        for rep in range(replications):
            t0 = time.perf_counter()
            run = estimator(g, target, c, seed=seed_base + rep, max_samples=max_samples)
            wall = time.perf_counter() - t0
            ks.append(run.k)
            diffs.append(abs(run.estimate - exact_value) / exact_value)
            manifests.append(manifest_for_run(run, g, dataset, wall))
        records.append(
            SweepRecord(
                dataset=dataset,
                target_id=int(g.original_ids[target]),
                method=method,
                c=float(c),
                mean_k=float(np.mean(ks)),
                mean_factor_diff=float(np.mean(diffs)),
                replications=replications,
                seed_base=seed_base,
            )
        )
    return records, manifests


def write_sweep_csv(records: list[SweepRecord], fh) -> None:
    r0 = records[0]
    fh.write(f"# bcsample {__version__} sweep\n")
    fh.write(
        f"# dataset={r0.dataset} target={r0.target_id} method={r0.method}"
        f" reps={r0.replications} seed_base={r0.seed_base}\n"
    )
    writer = csv.writer(fh)
    writer.writerow(SWEEP_HEADER)
    for r in records:
        inv = math.inf if r.mean_factor_diff == 0 else 1.0 / r.mean_factor_diff
        writer.writerow([_fmt(r.c), _fmt(r.mean_k), _fmt(r.mean_factor_diff), _fmt(inv)])


def default_target(bc: np.ndarray) -> int:
    """Highest exact-BC vertex (lowest index on ties)."""
    return int(np.argmax(bc))


def exact_bc_cached(dataset_path, g: Graph) -> np.ndarray:
    """Exact BC for a dataset, cached beside it as <name>.exact-bc.csv."""
    cache = Path(str(dataset_path) + ".exact-bc.csv")
    if cache.exists():
        with open(cache, newline="") as fh:
            reader = csv.reader(fh)
            next(reader)
            rows = {int(vid): float(val) for vid, val in reader}
        return np.array([rows[int(v)] for v in g.original_ids])
    bc = brandes_bc(g)
    with open(cache, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["vertex_id", "bc"])
        for v in range(g.n):
            writer.writerow([int(g.original_ids[v]), _fmt(bc[v])])
    return bc


# --- model checks -----------------------------------------------------------

# Hand-computed bound values the evaluators must reproduce exactly.
HAND_VALUES = {
    "termination_bound_eps0.25_c1": (lambda: bound_termination(0.25, 1.0), 1.0 / 36.0),
    "termination_bound_eps0.5_c1": (lambda: bound_termination(0.5, 1.0), 0.5),
    "termination_bound_eps0.1_c2": (lambda: bound_termination(0.1, 2.0), 0.001 / 3.61),
    "deviation_bound_vertex_vacuous": (lambda: bound_deviation(0.25, 1.0, 16.0, 4, "vertex"), 4.0),
    "deviation_bound_vertex_eighth": (lambda: bound_deviation(0.5, 2.0, 2.0, 4, "vertex"), 0.125),
}


@dataclass(frozen=True)
class CheckRow:
    formula: str
    analytic: float
    empirical: float
    stderr: float
    seed: int
    status: str


def _row(formula, analytic, empirical, stderr, seed, ok) -> CheckRow:
    return CheckRow(formula, float(analytic), float(empirical), float(stderr), seed, "pass" if ok else "fail")


def _quad(f, a, b) -> float:
    val, _ = integrate.quad(f, a, b, epsabs=1e-9, epsrel=1e-9, limit=200)
    return val


def _rel_close(a, b, tol) -> bool:
    return abs(a - b) <= tol * max(abs(a), abs(b))


def _closed_form_rows(seed: int) -> list[CheckRow]:
    rows = []
    for pieces in (2, 3, 10, 100):
        for A in (1.0, 5.0):
            dist = ModelDist(pieces=pieces, A=A, kind="vertex" if pieces < 50 else "pair")
            m = dist.moments()
            tag = f"p{pieces}_A{A:g}"
            total = _quad(lambda x: float(dist.pdf(x)), 0.0, A)
            rows.append(_row(f"pdf_integral_{tag}", 1.0, total, 0.0, seed, _rel_close(1.0, total, 1e-6)))
            mean_q = _quad(lambda x: x * float(dist.pdf(x)), 0.0, A)
            rows.append(_row(f"mean_quadrature_{tag}", m.mean, mean_q, 0.0, seed, _rel_close(m.mean, mean_q, 1e-6)))
            m2_q = _quad(lambda x: x * x * float(dist.pdf(x)), 0.0, A)
            rows.append(
                _row(f"second_moment_quadrature_{tag}", m.second_moment, m2_q, 0.0, seed, _rel_close(m.second_moment, m2_q, 1e-6))
            )
            # Derivative check in survival space stays well-scaled at both tails.
            xs = np.linspace(0.01 * A, 0.99 * A, 1000)
            h = 1e-6 * A
            deriv = (dist.sf(xs - h) - dist.sf(xs + h)) / (2 * h)
            rel = float(np.max(np.abs(deriv - dist.pdf(xs)) / dist.pdf(xs)))
            rows.append(_row(f"cdf_pdf_derivative_{tag}", 0.0, rel, 0.0, seed, rel < 1e-4))
    return rows


def _monte_carlo_rows(seed: int, ks_samples: int) -> list[CheckRow]:
    rows = []
    for i, pieces in enumerate((2, 3, 10, 100)):
        A = 1.0
        dist = ModelDist(pieces=pieces, A=A, kind="vertex")
        draws = sample_piece_marginal(pieces, A, ks_samples, seed + i)
        ks = stats.kstest(draws, dist.cdf).statistic
        rows.append(_row(f"stick_breaking_ks_p{pieces}", 0.0, ks, 0.0, seed + i, ks < 0.005))
        m = dist.moments()
        se_mean = draws.std(ddof=1) / math.sqrt(ks_samples)
        rows.append(
            _row(f"stick_breaking_mean_p{pieces}", m.mean, draws.mean(), se_mean, seed + i, abs(draws.mean() - m.mean) <= 3 * se_mean)
        )
        var = draws.var(ddof=1)
        centered = draws - draws.mean()
        se_var = math.sqrt(max((centered**4).mean() - var**2, 0.0) / ks_samples)
        rows.append(
            _row(f"stick_breaking_variance_p{pieces}", m.variance, var, se_var, seed + i, abs(var - m.variance) <= 3 * se_var)
        )
    return rows


def _bound_grid_rows(seed: int) -> list[CheckRow]:
    # Compatibility caps: Var <= A and E[X^2] <= 2A whenever A <= n^2.
    rows = []
    n = 32
    for A in np.linspace(0.5, n * n, 8):
        dist = ModelDist.vertex(n, float(A))
        m = dist.moments()
        rows.append(_row(f"variance_cap_A{A:g}", A, m.variance, 0.0, seed, m.variance <= A))
        rows.append(_row(f"second_moment_cap_A{A:g}", 2 * A, m.second_moment, 0.0, seed, m.second_moment <= 2 * A))
    return rows


def _stopping_rows(seed: int, stopping_runs: int) -> list[CheckRow]:
    rows = []
    n = 32
    epsilons = (0.1, 0.25, 0.4)
    d_values = (0.5, 1.0, 2.0)
    grids = {
        "vertex": ((64.0, 256.0), (1.0, 2.0, 5.0)),
        "pair": ((256.0, 768.0), (1.0, 2.0)),
    }
    sub = 0
    for kind, (A_values, c_values) in grids.items():
        for A in A_values:
            dist = ModelDist.vertex(n, A) if kind == "vertex" else ModelDist.pair(n, A)
            mass = n * n if kind == "vertex" else n * n * (n - 1)
            k_eps = {eps: eps * (mass / A) ** (2.0 / 3.0) for eps in epsilons}
            dev_ks = tuple(sorted({math.ceil(k) for k in k_eps.values()}))
            for c in c_values:
                sub += 1
                report = simulate_stopping(
                    dist, c, n, seed=seed + sub, runs=stopping_runs,
                    deviation_ks=dev_ks if c == 1.0 else (),
                )
                tag = f"{kind}_A{A:g}_c{c:g}"
                ok = abs(report.variate_mean - dist.mean) <= 3 * report.variate_se
                rows.append(_row(f"variate_mean_{tag}", dist.mean, report.variate_mean, report.variate_se, seed + sub, ok))
                for eps, k in k_eps.items():
                    p, se = report.termination_prob(k)
                    bound = bound_termination(eps, c)
                    rows.append(
                        _row(f"termination_{tag}_eps{eps:g}", bound, p, se, seed + sub, p <= bound + 3 * se)
                    )
                if c == 1.0:
                    for eps in epsilons:
                        k = math.ceil(k_eps[eps])
                        for d in d_values:
                            p, se = report.deviation_freq(k, d)
                            bound = bound_deviation(eps, d, A, n, kind)
                            rows.append(
                                _row(
                                    f"deviation_{tag}_eps{eps:g}_d{d:g}", bound, p, se, seed + sub,
                                    p <= bound + 3 * se,
                                )
                            )
    return rows


def run_model_checks(
    seed: int = 20240,
    ks_samples: int = 1_000_000,
    stopping_runs: int = 100_000,
    corrupt: str | None = None,
) -> list[CheckRow]:
    """Every analytic formula checked against an independent numerical route.

    ``corrupt`` perturbs one hand-computed expected value (a test hook for
    the failure path); it must name a hand-value row.
    """
    if corrupt is not None and corrupt not in HAND_VALUES:
        raise ValueError(f"--corrupt must name one of {sorted(HAND_VALUES)}")
    rows: list[CheckRow] = []
    for name, (evaluate, expected) in HAND_VALUES.items():
        if corrupt == name:
            expected = expected * 1.01 + 1e-9
        got = evaluate()
        rows.append(_row(name, expected, got, 0.0, seed, _rel_close(expected, got, 1e-12)))
    rows.extend(_closed_form_rows(seed))
    rows.extend(_monte_carlo_rows(seed, ks_samples))
    rows.extend(_bound_grid_rows(seed))
    rows.extend(_stopping_rows(seed, stopping_runs))
    return rows


def write_check_csv(rows: list[CheckRow], fh) -> None:
    fh.write(f"# bcsample {__version__} model-check\n")
    writer = csv.writer(fh)
    writer.writerow(["formula", "analytic", "empirical", "stderr", "seed", "status"])
    for r in rows:
        writer.writerow([r.formula, _fmt(r.analytic), _fmt(r.empirical), _fmt(r.stderr), r.seed, r.status])


# --- cost comparison --------------------------------------------------------


@dataclass(frozen=True)
class CostRecord:
    method: str
    c: float
    replications: int
    seed_base: int
    mean_k: float
    mean_settled_per_sample: float
    wall_time_s: float


def run_cost_comparison(
    g: Graph,
    target: int,
    c: float,
    replications: int,
    seed_base: int,
    max_samples: int | None = None,
) -> list[CostRecord]:
    """Both estimators at equal c; settled-vertices-per-sample is the cost
    proxy (a pair sample's truncated search vs a full SSSP per vertex sample)."""
    out = []
    for method, estimator in (("vertex", estimate_bc_vertex), ("pair", estimate_bc_pair)):
        t0 = time.perf_counter()
        ks = []
        per_sample = []
        for rep in range(replications):
            run = estimator(g, target, c, seed=seed_base + rep, max_samples=max_samples)
            ks.append(run.k)
            per_sample.append(run.settled / run.k)
        out.append(
            CostRecord(
                method=method,
                c=float(c),
                replications=replications,
                seed_base=seed_base,
                mean_k=float(np.mean(ks)),
                mean_settled_per_sample=float(np.mean(per_sample)),
                wall_time_s=time.perf_counter() - t0,
            )
        )
    return out


def write_cost_csv(records: list[CostRecord], fh) -> None:
    fh.write(f"# bcsample {__version__} compare-cost\n")
    writer = csv.writer(fh)
    writer.writerow(["method", "c", "reps", "seed_base", "mean_k", "mean_settled_per_sample"])
    for r in records:
        writer.writerow([r.method, _fmt(r.c), r.replications, r.seed_base, _fmt(r.mean_k), _fmt(r.mean_settled_per_sample)])
