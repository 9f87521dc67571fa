"""Undirected graph in compressed adjacency form plus BFS shortest-path machinery.

Graphs are immutable after construction (adjacency arrays are marked
read-only) and safe to share across threads; every BFS owns its scratch
arrays.
"""

from __future__ import annotations

import gzip
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

__all__ = [
    "Graph",
    "BfsResult",
    "EdgeListParseError",
    "parse_edge_list",
    "load_edge_list",
    "bfs_sssp",
    "bfs_truncated",
    "canonical_edge_text",
]


class EdgeListParseError(ValueError):
    """Malformed edge-list input; ``lineno`` is 1-based."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(eq=False)
class Graph:
    """Undirected, unweighted graph over dense vertex indices [0, n).

    ``indptr``/``adj`` form a CSR adjacency with sorted neighbor lists and
    both directions of every edge, so ``adj.size == 2 * m``.  ``original_ids``
    maps dense index -> external ID; dense indices are assigned by ascending
    external ID, which makes parsing deterministic and round-trippable.
    """

    indptr: np.ndarray
    adj: np.ndarray
    original_ids: np.ndarray
    _dense_of: dict[int, int] = field(repr=False)

    def __post_init__(self):
        for a in (self.indptr, self.adj, self.original_ids):
            a.setflags(write=False)

    @property
    def n(self) -> int:
        return self.indptr.size - 1

    @property
    def m(self) -> int:
        return self.adj.size // 2

    def neighbors(self, v: int) -> np.ndarray:
        return self.adj[self.indptr[v] : self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def index_of(self, original_id: int) -> int:
        """Dense index for an external vertex ID."""
        return self._dense_of[original_id]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.adj, other.adj)
            and np.array_equal(self.original_ids, other.original_ids)
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @classmethod
    def from_edges(cls, pairs) -> "Graph":
        """Build a graph from (id, id) pairs.

        Self-loops are dropped; duplicate edges and directed duplicates
        (u,v)/(v,u) collapse into one undirected edge.
        """
        arr = np.asarray(list(pairs), dtype=np.int64).reshape(-1, 2)
        if arr.size:
            arr = arr[arr[:, 0] != arr[:, 1]]
        if arr.size == 0:
            raise ValueError("graph has no edges")
        ids = np.unique(arr)
        dense = np.searchsorted(ids, arr)
        lo = np.minimum(dense[:, 0], dense[:, 1])
        hi = np.maximum(dense[:, 0], dense[:, 1])
        und = np.unique(np.stack([lo, hi], axis=1), axis=0)
        n = ids.size
        tails = np.concatenate([und[:, 0], und[:, 1]])
        heads = np.concatenate([und[:, 1], und[:, 0]])
        order = np.lexsort((heads, tails))
        tails, heads = tails[order], heads[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(tails, minlength=n), out=indptr[1:])
        dense_of = {int(orig): i for i, orig in enumerate(ids)}
        return cls(indptr=indptr, adj=heads, original_ids=ids, _dense_of=dense_of)

    def _edges_from(self, frontier: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """All (tail, head) adjacency entries whose tail is in ``frontier``."""
        starts = self.indptr[frontier]
        counts = self.indptr[frontier + 1] - starts
        total = int(counts.sum())
        tails = np.repeat(frontier, counts)
        offsets = np.concatenate(([0], np.cumsum(counts)[:-1]))
        pos = np.arange(total, dtype=np.int64) - np.repeat(offsets, counts) + np.repeat(starts, counts)
        return tails, self.adj[pos]


@dataclass(eq=False)
class BfsResult:
    """Single-source shortest-path data from one BFS.

    ``dist`` uses ``inf`` for unreachable vertices (never a large integer, so
    distance sums stay overflow-free).  ``sigma`` holds shortest-path counts
    as float64.  ``order`` lists settled vertices in nondecreasing distance.
    ``frontier_limit`` is None for an exhaustive search, otherwise the deepest
    fully settled distance; vertices beyond it are unreported.

    ``transitions[i]`` holds the predecessor edges (tails at distance i,
    heads at distance i+1) discovered while settling level i+1; they drive
    both dependency accumulation and the ``preds`` accessor.
    """

    source: int
    dist: np.ndarray
    sigma: np.ndarray
    order: np.ndarray
    frontier_limit: int | None
    transitions: list[tuple[np.ndarray, np.ndarray]] = field(repr=False)
    _pred_cache: tuple[np.ndarray, np.ndarray] | None = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return self.dist.size

    def preds(self, v: int) -> np.ndarray:
        """Predecessors of ``v`` on shortest paths from the source."""
        if self._pred_cache is None:
            if self.transitions:
                tails = np.concatenate([t for t, _ in self.transitions])
                heads = np.concatenate([h for _, h in self.transitions])
            else:
                tails = heads = np.empty(0, dtype=np.int64)
            by_head = np.argsort(heads, kind="stable")
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            np.cumsum(np.bincount(heads, minlength=self.n), out=indptr[1:])
            self._pred_cache = (indptr, tails[by_head])
        indptr, tails = self._pred_cache
        return tails[indptr[v] : indptr[v + 1]]


def _bfs(g: Graph, source: int, stop_dist: int | None = None, stop_vertex: int | None = None) -> BfsResult:
    """Level-synchronous BFS with shortest-path counting.

    Whole levels are settled at a time, so any early stop leaves every
    reported level with final dist/sigma values.  ``stop_dist`` stops after
    settling that distance; ``stop_vertex`` stops once the level containing
    it is complete.
    """
    n = g.n
    dist = np.full(n, np.inf)
    sigma = np.zeros(n)
    dist[source] = 0.0
    sigma[source] = 1.0
    levels = [np.array([source], dtype=np.int64)]
    transitions: list[tuple[np.ndarray, np.ndarray]] = []
    frontier = levels[0]
    level = 0
    truncated = False
    while frontier.size:
        if stop_vertex is not None and dist[stop_vertex] <= level:
            truncated = True
            break
        if stop_dist is not None and level >= stop_dist:
            # Peek one step: only flag truncation if something was cut off.
            _, heads = g._edges_from(frontier)
            truncated = bool(np.isinf(dist[heads]).any())
            break
        tails, heads = g._edges_from(frontier)
        fresh = np.unique(heads[np.isinf(dist[heads])])
        if fresh.size == 0:
            break
        dist[fresh] = level + 1
        on_shortest = dist[heads] == level + 1
        pt, ph = tails[on_shortest], heads[on_shortest]
        sigma += np.bincount(ph, weights=sigma[pt], minlength=n)
        transitions.append((pt, ph))
        levels.append(fresh)
        frontier = fresh
        level += 1
    return BfsResult(
        source=source,
        dist=dist,
        sigma=sigma,
        order=np.concatenate(levels),
        frontier_limit=level if truncated else None,
        transitions=transitions,
    )


def bfs_sssp(g: Graph, source: int) -> BfsResult:
    """Full BFS from ``source``: exact dist, sigma, preds over its component."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range [0, {g.n})")
    return _bfs(g, source)


def bfs_truncated(g: Graph, source: int, stop_dist: int) -> BfsResult:
    """BFS stopped after distance ``stop_dist`` is fully settled."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range [0, {g.n})")
    if stop_dist < 0:
        raise ValueError("stop_dist must be >= 0")
    return _bfs(g, source, stop_dist=stop_dist)


def parse_edge_list(stream) -> Graph:
    """Parse a SNAP-style edge list: '#' comments, two integer IDs per line.

    ``stream`` is any iterable of text or byte lines.  Raises
    EdgeListParseError with the offending line number on malformed input and
    ValueError if no edges remain.
    """
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.decode() if isinstance(raw, (bytes, bytearray)) else raw
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(lineno, f"expected two fields, got {len(parts)}: {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(lineno, f"non-integer vertex ID in {line!r}") from None
        pairs.append((a, b))
    if not pairs:
        raise ValueError("empty edge list")
    return Graph.from_edges(pairs)


def load_edge_list(path) -> Graph:
    """Parse an edge-list file; '.gz' files are decompressed transparently."""
    path = Path(path)
    opener = gzip.open if path.suffix == ".gz" else open
    with opener(path, "rt") as fh:
        return parse_edge_list(fh)


def canonical_edge_text(g: Graph) -> str:
    """Canonical serialization: sorted 'u v' lines with u < v, original IDs."""
    lines = []
    for u in range(g.n):
        for v in g.neighbors(u):
            if v > u:
                lines.append(f"{g.original_ids[u]} {g.original_ids[v]}")
    return "\n".join(lines) + "\n"
