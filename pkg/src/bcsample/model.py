"""Analytic model of per-sample dependency contributions, with bounds and a
Monte Carlo harness to validate every formula numerically.

The model treats the target's total dependency mass A as a stick of length A
cut at uniformly random points into ``pieces`` sub-intervals (n pieces for
vertex sampling, n*(n-1) for pair sampling); one sample's contribution is one
piece.  Real-graph contribution distributions are *not* assumed to follow
this law -- empirical moments are reported alongside model moments, never
asserted equal.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ModelDist",
    "Moments",
    "stick_breaking_sample",
    "sample_piece_marginal",
    "bound_termination",
    "bound_deviation",
    "simulate_stopping",
    "StoppingReport",
]


@dataclass(frozen=True)
class Moments:
    mean: float
    variance: float
    second_moment: float


@dataclass(frozen=True)
class ModelDist:
    """Distribution of one sample's contribution under the uniform-cut model.

    cdf(x) = 1 - (1 - x/A)^(pieces-1) on (0, A), clamped to 0 below and 1
    above; mean A/pieces, variance (pieces-1)*A^2/(pieces^2*(pieces+1)).
    """

    pieces: int
    A: float
    kind: str

    def __post_init__(self):
        if self.A <= 0:
            raise ValueError("total mass A must be positive")
        if self.pieces < 2:
            raise ValueError("model needs at least 2 pieces")
        if self.kind not in ("vertex", "pair"):
            raise ValueError(f"unknown model kind {self.kind!r}")

    @classmethod
    def vertex(cls, n: int, A: float) -> "ModelDist":
        return cls(pieces=n, A=A, kind="vertex")

    @classmethod
    def pair(cls, n: int, A: float) -> "ModelDist":
        return cls(pieces=n * (n - 1), A=A, kind="pair")

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        return 1.0 - np.power(1.0 - np.clip(x, 0.0, self.A) / self.A, self.pieces - 1)

    def sf(self, x):
        """Survival function 1 - cdf, computed directly so deep tails keep
        full floating-point resolution."""
        x = np.asarray(x, dtype=float)
        return np.power(1.0 - np.clip(x, 0.0, self.A) / self.A, self.pieces - 1)

    def pdf(self, x):
        x = np.asarray(x, dtype=float)
        p = self.pieces
        inside = (x > 0.0) & (x < self.A)
        base = np.where(inside, 1.0 - x / self.A, 1.0)
        return np.where(inside, (p - 1) / self.A * np.power(base, p - 2), 0.0)

    def moments(self) -> Moments:
        p = self.pieces
        return Moments(
            mean=self.A / p,
            variance=(p - 1) * self.A**2 / (p**2 * (p + 1)),
            second_moment=2.0 * self.A**2 / (p * (p + 1)),
        )

    @property
    def mean(self) -> float:
        return self.moments().mean

    @property
    def variance(self) -> float:
        return self.moments().variance


def _as_rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def stick_breaking_sample(pieces: int, A: float, seed) -> np.ndarray:
    """Lengths of ``pieces`` sub-intervals cut by uniform points on (0, A).

    The last piece is computed by subtraction so the lengths sum to A up to
    one rounding.  ``seed`` may be an int or a Generator.
    """
    if pieces < 1:
        raise ValueError("pieces must be >= 1")
    if A <= 0:
        raise ValueError("A must be positive")
    rng = _as_rng(seed)
    if pieces == 1:
        return np.array([A])
    cuts = np.sort(rng.uniform(0.0, A, size=pieces - 1))
    lengths = np.empty(pieces)
    lengths[0] = cuts[0]
    lengths[1:-1] = np.diff(cuts)
    lengths[-1] = A - cuts[-1]
    return lengths


def sample_piece_marginal(pieces: int, A: float, size: int, seed) -> np.ndarray:
    """``size`` draws of a single piece length (the partition's first piece,
    i.e. the minimum cut point), generated literally from uniform cuts.

    Chunked so memory stays bounded for large ``size`` * ``pieces``.
    """
    if pieces < 1:
        raise ValueError("pieces must be >= 1")
    rng = _as_rng(seed)
    if pieces == 1:
        return np.full(size, float(A))
    out = np.empty(size)
    chunk = max(1, 4_000_000 // (pieces - 1))
    done = 0
    while done < size:
        rows = min(chunk, size - done)
        cuts = rng.uniform(0.0, A, size=(rows, pieces - 1))
        out[done : done + rows] = cuts.min(axis=1)
        done += rows
    return out


def bound_termination(epsilon: float, c: float) -> float:
    """Upper bound eps^3/(c-eps)^2 on the probability of stopping within
    eps*(n^2/A)^(2/3) samples (same form for vertex and pair sampling)."""
    if not 0 < epsilon < c:
        raise ValueError("requires 0 < epsilon < c")
    return epsilon**3 / (c - epsilon) ** 2


def bound_deviation(epsilon: float, d: float, A: float, n: int, kind: str) -> float:
    """Upper bound on P[|scaled mean - A| >= d*A] for k >= eps*(mass/A)^(2/3)
    samples, where mass is n^2 (vertex) or n^2*(n-1) (pair).

    Returns the raw value even when vacuous (> 1); interpretation is the
    caller's.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if d <= 0:
        raise ValueError("d must be positive")
    if not 0 < A <= n * n:
        raise ValueError("requires 0 < A <= n^2")
    if kind == "vertex":
        mass = float(n) ** 2
    elif kind == "pair":
        mass = float(n) ** 2 * (n - 1)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return (A / mass) ** (2.0 / 3.0) / (epsilon * d * d)


@dataclass
class StoppingReport:
    """Empirical behavior of the S > c*n stopping rule under the model.

    ``stop_counts[i]`` is the 1-based sample index where run i first exceeded
    the threshold, or 0 if it never did within ``max_k``.  ``sums_at`` maps a
    checkpoint k to the per-run partial sums of the first k draws.
    """

    pieces: int
    A: float
    c: float
    n: int
    runs: int
    seed: int
    max_k: int
    stop_counts: np.ndarray
    first_draws: np.ndarray
    sums_at: dict[int, np.ndarray]

    @property
    def variate_mean(self) -> float:
        return float(self.first_draws.mean())

    @property
    def variate_se(self) -> float:
        return float(self.first_draws.std(ddof=1) / np.sqrt(self.runs))

    def termination_prob(self, k: float) -> tuple[float, float]:
        """Fraction of runs that stopped within k samples, with its SE."""
        hit = (self.stop_counts > 0) & (self.stop_counts <= k)
        p = float(hit.mean())
        return p, float(np.sqrt(p * (1.0 - p) / self.runs))

    def deviation_freq(self, k: int, d: float) -> tuple[float, float]:
        """Fraction of runs whose scaled k-sample mean misses A by >= d*A."""
        sums = self.sums_at[k]
        scaled = self.pieces * sums / k
        p = float((np.abs(scaled - self.A) >= d * self.A).mean())
        return p, float(np.sqrt(p * (1.0 - p) / self.runs))


def simulate_stopping(
    dist: ModelDist,
    c: float,
    n: int,
    *,
    seed: int,
    runs: int,
    max_k: int | None = None,
    deviation_ks: tuple[int, ...] = (),
) -> StoppingReport:
    """Simulate the adaptive stopping rule on i.i.d. model variates.

    Variates are single piece lengths; Beta(1, pieces-1) scaled by A is used
    as the draw (the exact law of the minimum of pieces-1 uniform cuts, i.e.
    the first piece) so large volumes stay cheap.  Chunked over runs.
    """
    if runs < 1:
        raise ValueError("runs must be >= 1")
    threshold = c * n
    if max_k is None:
        if not np.isfinite(threshold):
            raise ValueError("max_k is required when c*n is not finite")
        max_k = int(np.ceil(4.0 * threshold / dist.mean)) + 64
    if any(k < 1 or k > max_k for k in deviation_ks):
        raise ValueError("deviation checkpoints must lie in [1, max_k]")
    rng = np.random.default_rng(seed)
    stop_counts = np.zeros(runs, dtype=np.int64)
    first_draws = np.empty(runs)
    sums_at = {k: np.empty(runs) for k in deviation_ks}
    chunk = max(1, 4_000_000 // max_k)
    done = 0
    while done < runs:
        rows = min(chunk, runs - done)
        draws = dist.A * rng.beta(1.0, dist.pieces - 1, size=(rows, max_k))
        csum = draws.cumsum(axis=1)
        exceeded = csum > threshold
        stopped = exceeded.any(axis=1)
        idx = exceeded.argmax(axis=1) + 1
        stop_counts[done : done + rows] = np.where(stopped, idx, 0)
        first_draws[done : done + rows] = draws[:, 0]
        for k in deviation_ks:
            sums_at[k][done : done + rows] = csum[:, k - 1]
        done += rows
    return StoppingReport(
        pieces=dist.pieces,
        A=dist.A,
        c=c,
        n=n,
        runs=runs,
        seed=seed,
        max_k=max_k,
        stop_counts=stop_counts,
        first_draws=first_draws,
        sums_at=sums_at,
    )
