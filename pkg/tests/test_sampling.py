from __future__ import annotations

import math

import numpy as np
import pytest

from bcsample import (
    PairSample,
    bfs_sssp,
    brandes_bc,
    dependency_table,
    estimate_bc_pair,
    estimate_bc_vertex,
    pair_dependency,
    pair_dependency_table,
    theorem_params_pair,
    theorem_params_vertex,
)

from helpers import random_graphs


def test_vertex_path3_terminates_at_four(path3):
    # per-source contributions are {0: 1, 1: 0, 2: 1}; S grows in unit steps
    # past c*n = 3, so the loop always exits at S = 4
    table = dependency_table(path3, 1)
    assert list(table) == [1, 0, 1]
    for seed in range(8):
        run = estimate_bc_vertex(path3, 1, 1.0, seed=seed, max_samples=1000, record_trace=True)
        assert run.S == 4.0
        assert run.k >= 4
        assert run.estimate == 3 * 4.0 / run.k
        assert not run.capped
        for source, x in run.trace:
            assert x == table[source]


def test_vertex_zero_bc_target_caps(star4):
    run = estimate_bc_vertex(star4, 1, 1.0, seed=3, max_samples=10)
    assert run.capped
    assert run.k == 10
    assert run.estimate == 0.0
    assert run.S == 0.0


def test_vertex_determinism(random32):
    a = estimate_bc_vertex(random32, 3, 1.5, seed=99, record_trace=True)
    b = estimate_bc_vertex(random32, 3, 1.5, seed=99, record_trace=True)
    assert (a.estimate, a.k, a.S, a.trace) == (b.estimate, b.k, b.S, b.trace)
    c = estimate_bc_vertex(random32, 3, 1.5, seed=100)
    assert (a.estimate, a.k) != (c.estimate, c.k)


def test_vertex_normal_termination_exceeds_threshold(random32):
    run = estimate_bc_vertex(random32, 3, 2.0, seed=5)
    assert not run.capped
    assert run.S > 2.0 * random32.n
    assert run.k >= 1


def test_vertex_parameter_errors(path3):
    with pytest.raises(ValueError):
        estimate_bc_vertex(path3, 1, 0.9, seed=1)
    with pytest.raises(ValueError):
        estimate_bc_vertex(path3, 5, 1.0, seed=1)
    with pytest.raises(ValueError):
        estimate_bc_vertex(path3, 1, 1.0, seed=1, max_samples=0)


def test_vertex_trace_matches_dependency_table(random32):
    # bridge: each sampled contribution equals the exact per-source dependency
    table = dependency_table(random32, 3)
    run = estimate_bc_vertex(random32, 3, 1.0, seed=11, record_trace=True)
    for source, x in run.trace:
        assert x == table[source]
        assert 0.0 <= x <= random32.n - 2


def test_vertex_infinite_c_disables_stopping(path3):
    run = estimate_bc_vertex(path3, 1, math.inf, seed=2, max_samples=6)
    assert run.capped and run.k == 6


def test_pair_cycle_contributions(cycle4):
    table = pair_dependency_table(cycle4, 0)
    nonzero = {(u, v): table[u, v] for u in range(4) for v in range(4) if table[u, v]}
    assert nonzero == {(1, 3): 0.5, (3, 1): 0.5}
    # exact mean over all 12 ordered pairs is BC(0)/(n(n-1)) = 1/12
    mask = ~np.eye(4, dtype=bool)
    assert table[mask].mean() == pytest.approx(1 / 12)


def test_pair_path3_per_sample_expectation(path3):
    table = pair_dependency_table(path3, 1)
    mask = ~np.eye(3, dtype=bool)
    # contributions 1 for (0,2) and (2,0); scaled mean recovers BC(1) = 2
    assert table[mask].sum() == 2.0
    assert 3 * 2 * table[mask].mean() == pytest.approx(2.0)


def test_pair_trace_matches_table_and_range(random32):
    table = pair_dependency_table(random32, 3)
    run = estimate_bc_pair(random32, 3, 1.0, seed=17, record_trace=True)
    assert run.k == len(run.trace)
    assert run.settled == sum(s.bfs_cost for s in run.trace)
    for s in run.trace:
        assert isinstance(s, PairSample)
        assert s.u != s.v
        assert 0.0 <= s.contribution <= 1.0
        assert s.contribution == table[s.u, s.v]
    assert run.S == pytest.approx(sum(s.contribution for s in run.trace), abs=1e-12)


def test_pair_determinism_and_estimate_scaling(hub32):
    a = estimate_bc_pair(hub32, 0, 1.0, seed=4, record_trace=True)
    b = estimate_bc_pair(hub32, 0, 1.0, seed=4, record_trace=True)
    assert (a.estimate, a.k, a.S, a.trace) == (b.estimate, b.k, b.S, b.trace)
    n = hub32.n
    assert a.estimate == n * (n - 1) * a.S / a.k
    assert not a.capped and a.S > n


def test_pair_samples_touching_target_contribute_zero(path3):
    run = estimate_bc_pair(path3, 1, 1.0, seed=0, max_samples=50, record_trace=True)
    for s in run.trace:
        if 1 in (s.u, s.v):
            assert s.contribution == 0.0
            assert s.bfs_cost == 0
        # a truncated search on path3 can never settle more than 3 vertices
        assert s.bfs_cost <= 3


def test_pair_parameter_errors(path3):
    with pytest.raises(ValueError):
        estimate_bc_pair(path3, 1, 0.5, seed=1)


def test_pair_handles_disconnected_pairs():
    from bcsample import Graph

    g = Graph.from_edges([(0, 1), (1, 2), (3, 4)])
    table = pair_dependency_table(g, 1)
    assert table[0, 2] == 1.0
    assert table[3, 4] == 0.0 and table[0, 3] == 0.0
    run = estimate_bc_pair(g, 1, 1.0, seed=8, max_samples=40, record_trace=True)
    for s in run.trace:
        assert s.contribution == table[s.u, s.v]


def test_truncated_equals_full_pair_dependency():
    # the early-stopped search must count exactly the same shortest paths
    for g in random_graphs(15, 8, 0.4, seed0=5200):
        for t in range(g.n):
            bt = bfs_sssp(g, t)
            for u in range(g.n):
                bu = bfs_sssp(g, u)
                for v in range(g.n):
                    if u == v:
                        continue
                    got = pair_dependency(g, u, v, t, bt)
                    if (
                        t in (u, v)
                        or np.isinf(bt.dist[u])
                        or np.isinf(bt.dist[v])
                        or np.isinf(bu.dist[v])
                        or bt.dist[u] + bt.dist[v] != bu.dist[v]
                    ):
                        assert got == 0.0
                    else:
                        assert got == bt.sigma[u] * bt.sigma[v] / bu.sigma[v]


def test_exact_per_sample_means(path3, star4, cycle4, random32, hub32):
    for g in (path3, star4, cycle4, random32, hub32):
        bc = brandes_bc(g)
        n = g.n
        for target in (0, int(np.argmax(bc))):
            dep = dependency_table(g, target)
            assert abs(dep.mean() - bc[target] / n) <= 1e-9
            pairs = pair_dependency_table(g, target)[~np.eye(n, dtype=bool)]
            assert abs(pairs.mean() - bc[target] / (n * (n - 1))) <= 1e-9


def test_guarantee_params_vertex_examples():
    p = theorem_params_vertex(0.25, 8, 1.0)
    assert p.success_prob_lb == pytest.approx(0.5)
    assert p.factor == pytest.approx(2.0)
    assert p.samples == pytest.approx(1.0)
    p = theorem_params_vertex(0.1, 1000, 1.0)
    assert p.success_prob_lb == pytest.approx(0.8)
    assert p.factor == pytest.approx(1.0)
    assert p.samples == pytest.approx(10.0)


def test_guarantee_params_pair_examples():
    p = theorem_params_pair(0.1, 1000, 1001, 1.0)
    assert p.samples == pytest.approx(100.0)
    assert p.factor == pytest.approx(0.1)
    assert p.success_prob_lb == pytest.approx(0.8)
    p = theorem_params_pair(0.25, 1, 2, 1.0)
    assert p.samples == pytest.approx(0.25)
    assert p.factor == pytest.approx(4.0)
    assert p.success_prob_lb == pytest.approx(0.5)


def test_pair_factor_beats_vertex_factor():
    rng = np.random.default_rng(0)
    for _ in range(100):
        eps = float(rng.uniform(0.01, 0.49))
        t = float(rng.uniform(1, 1e6))
        n = int(rng.integers(3, 10**6))
        c = float(rng.uniform(1, 10))
        assert theorem_params_pair(eps, t, n, c).factor < theorem_params_vertex(eps, t, c).factor


def test_guarantee_params_domain_errors():
    for bad in (0.0, 0.5, -0.1, 0.7):
        with pytest.raises(ValueError):
            theorem_params_vertex(bad, 10)
    with pytest.raises(ValueError):
        theorem_params_vertex(0.25, 0.5)
    with pytest.raises(ValueError):
        theorem_params_vertex(0.25, 10, 0.5)
    with pytest.raises(ValueError):
        theorem_params_pair(0.25, 10, 1)
