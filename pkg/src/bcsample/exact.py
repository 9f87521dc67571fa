"""Exact betweenness centrality (Brandes) and single-target oracles.

BC follows the ordered-pair convention with no 1/2 normalization: BC(v) is
summed over all ordered (s, t) pairs with s != t != v, so values lie in
[0, n^2] and the sampling estimators' n*S/k and n*(n-1)*S/k scalings are
exact.  Pairs touching the target and disconnected pairs contribute 0.
"""

from __future__ import annotations

import csv

import numpy as np

from .graph import BfsResult, Graph, _bfs, bfs_sssp

__all__ = [
    "accumulate_dependencies",
    "brandes_bc",
    "pair_dependency",
    "dependency_table",
    "pair_dependency_table",
    "write_bc_csv",
]


def accumulate_dependencies(g: Graph, b: BfsResult) -> np.ndarray:
    """Per-vertex dependency of ``b.source`` on every vertex.

    Walks the BFS levels in decreasing distance, pushing
    sigma[v]/sigma[t] * (1 + delta[t]) across each predecessor edge (v, t).
    Requires a full BFS; truncated results are rejected.
    """
    if b.frontier_limit is not None:
        raise ValueError("dependency accumulation needs an untruncated BFS")
    n = g.n
    delta = np.zeros(n)
    for tails, heads in reversed(b.transitions):
        contrib = b.sigma[tails] / b.sigma[heads] * (1.0 + delta[heads])
        delta += np.bincount(tails, weights=contrib, minlength=n)
    # The source is an endpoint of every path counted above, never interior.
    delta[b.source] = 0.0
    return delta


def brandes_bc(g: Graph) -> np.ndarray:
    """Exact BC for every vertex: bc[v] = sum over sources of delta_s(v)."""
    bc = np.zeros(g.n)
    for s in range(g.n):
        bc += accumulate_dependencies(g, _bfs(g, s))
    return bc


def _pair_dependency_with_cost(
    g: Graph, u: int, v: int, t: int, bfs_from_t: BfsResult
) -> tuple[float, int]:
    """Pair dependency of t on (u, v) plus the vertices settled computing it.

    Runs one BFS from u stopped as soon as v's level is settled; everything
    else comes from the precomputed BFS from t (undirected symmetry gives
    d(u,t) = d(t,u) and sigma_ut = sigma_tu).
    """
    if t == u or t == v:
        return 0.0, 0
    d_tu = bfs_from_t.dist[u]
    d_tv = bfs_from_t.dist[v]
    if np.isinf(d_tu) or np.isinf(d_tv):
        # t cannot lie on a u-v shortest path; covers disconnected pairs too.
        return 0.0, 0
    bu = _bfs(g, u, stop_vertex=v)
    cost = int(bu.order.size)
    if d_tu + d_tv != bu.dist[v]:
        return 0.0, cost
    return float(bfs_from_t.sigma[u] * bfs_from_t.sigma[v] / bu.sigma[v]), cost


def pair_dependency(g: Graph, u: int, v: int, t: int, bfs_from_t: BfsResult) -> float:
    """Fraction of shortest u-v paths passing through t (0 if t is u or v)."""
    if u == v:
        raise ValueError("pair dependency needs distinct endpoints")
    if bfs_from_t.source != t or bfs_from_t.frontier_limit is not None:
        raise ValueError("bfs_from_t must be a full BFS rooted at t")
    value, _ = _pair_dependency_with_cost(g, u, v, t, bfs_from_t)
    return value


def dependency_table(g: Graph, target: int) -> np.ndarray:
    """delta_s(target) for every source s; its mean is exactly bc[target]/n."""
    return np.array([accumulate_dependencies(g, _bfs(g, s))[target] for s in range(g.n)])


def pair_dependency_table(g: Graph, target: int) -> np.ndarray:
    """n x n matrix of pair dependencies of ``target``.

    Entry [u, v] is the fraction of shortest u-v paths through the target;
    rows/columns touching the target and the diagonal are 0.  Summing the
    whole matrix reproduces bc[target].
    """
    n = g.n
    bt = bfs_sssp(g, target)
    table = np.zeros((n, n))
    for u in range(n):
        if u == target or np.isinf(bt.dist[u]):
            continue
        bu = _bfs(g, u)
        mask = np.isfinite(bu.dist) & (bt.dist[u] + bt.dist == bu.dist)
        mask[u] = False
        mask[target] = False
        table[u, mask] = bt.sigma[u] * bt.sigma[mask] / bu.sigma[mask]
    return table


def write_bc_csv(g: Graph, bc: np.ndarray, fh) -> None:
    """Write exact BC as ``vertex_id,bc`` rows keyed by original IDs."""
    writer = csv.writer(fh)
    writer.writerow(["vertex_id", "bc"])
    for v in range(g.n):
        writer.writerow([int(g.original_ids[v]), repr(float(bc[v]))])
