"""Shared test helpers: seeded random graphs and population-level simulation
of the adaptive stopping rule.

The population simulators draw i.i.d. uniform indices into a finite
contribution table, exactly the law of the estimators' per-sample
contributions on a fixed graph (a bridge the sampling tests pin by comparing
estimator traces against the tables entry by entry).  They make the >= 2000
run statistical suites cheap enough to run on every test invocation.
"""

from __future__ import annotations

import numpy as np

from bcsample import Graph, bfs_sssp


def gnp_edges(n: int, p: float, rng) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]


def random_graph(n: int, p: float, seed: int) -> Graph | None:
    """G(n, p) with all n vertices present, or None for this seed."""
    rng = np.random.default_rng(seed)
    edges = gnp_edges(n, p, rng)
    if not edges:
        return None
    g = Graph.from_edges(edges)
    return g if g.n == n else None


def random_graphs(count: int, n_max: int, p: float, seed0: int):
    """Yield ``count`` random graphs with 3..n_max vertices (seeded scan)."""
    produced = 0
    seed = seed0
    rng = np.random.default_rng(seed0)
    while produced < count:
        n = int(rng.integers(3, n_max + 1))
        g = random_graph(n, p, seed)
        seed += 1
        if g is not None:
            produced += 1
            yield g


def random_connected_graph(n: int, p: float, seed0: int) -> Graph:
    for seed in range(seed0, seed0 + 1000):
        g = random_graph(n, p, seed)
        if g is not None and bfs_sssp(g, 0).order.size == n:
            return g
    raise RuntimeError("no connected graph found in seed range")


def population_stop_counts(pop: np.ndarray, threshold: float, runs: int, max_k: int, seed: int) -> np.ndarray:
    """Per-run 1-based index where the running sum first exceeds the
    threshold (0 if never within max_k), drawing uniformly from ``pop``."""
    rng = np.random.default_rng(seed)
    out = np.zeros(runs, dtype=np.int64)
    chunk = max(1, 2_000_000 // max_k)
    done = 0
    while done < runs:
        rows = min(chunk, runs - done)
        draws = pop[rng.integers(0, pop.size, size=(rows, max_k))]
        exceeded = draws.cumsum(axis=1) > threshold
        stopped = exceeded.any(axis=1)
        out[done : done + rows] = np.where(stopped, exceeded.argmax(axis=1) + 1, 0)
        done += rows
    return out


def population_prefix_sums(pop: np.ndarray, runs: int, k: int, seed: int) -> np.ndarray:
    """(runs, k) cumulative sums of uniform draws from ``pop``."""
    rng = np.random.default_rng(seed)
    draws = pop[rng.integers(0, pop.size, size=(runs, k))]
    return draws.cumsum(axis=1)


def binom_se(p: float, runs: int) -> float:
    return float(np.sqrt(max(p * (1.0 - p), 1e-12) / runs))
