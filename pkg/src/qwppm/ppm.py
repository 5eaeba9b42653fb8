"""
Quantum walk with periodic position measurement.

The walk runs coherently for d steps, the position is measured, the coin
is re-prepared in (|L><L| + |R><R|)/2, and the cycle repeats M times.
Each block displacement Y has the law of the d-step mixed-coin walk and
the blocks are i.i.d., so the final position X_t = Y_1 + ... + Y_M has
the M-fold convolution power of the block law.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .coin import CoinOperator
from .walk import PositionDistribution, mixed_coin_distribution

__all__ = [
    "RNG_ALGORITHM",
    "PpmSchedule",
    "schedule_from",
    "block_distribution",
    "convolve",
    "convolve_power",
    "ppm_distribution",
    "sample_trajectories",
    "sample_trajectory",
    "moments",
    "variance",
]

# Identifier recorded in reports; trajectories are reproducible given the
# seed and this algorithm (numpy PCG64, one uniform per block, inverse CDF).
RNG_ALGORITHM = "numpy-pcg64-inverse-cdf-v1"


@dataclass(frozen=True)
class PpmSchedule:
    """d coherent steps per block, M blocks, realized final time t = d*M."""

    d: int
    M: int
    beta: float | None = None

    def __post_init__(self):
        if int(self.d) != self.d or int(self.M) != self.M:
            raise ValueError("d and M must be integers")
        if self.d < 1 or self.M < 1:
            raise ValueError(f"need d >= 1 and M >= 1, got d={self.d}, M={self.M}")
        if self.beta is not None and not 0.0 <= self.beta <= 1.0:
            raise ValueError(f"beta must lie in [0, 1], got {self.beta!r}")

    @property
    def t(self) -> int:
        return self.d * self.M


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def schedule_from(t_target: int, beta: float) -> PpmSchedule:
    """
    Schedule with d ~ t^beta.

    d = max(1, round(t_target**beta)), M = max(1, round(t_target / d)),
    rounding half up.  The realized ``t = d*M`` may differ from t_target.
    """
    if t_target < 1:
        raise ValueError(f"t_target must be >= 1, got {t_target}")
    if not 0.0 <= beta <= 1.0:
        raise ValueError(f"beta must lie in [0, 1], got {beta!r}")
    d = max(1, _round_half_up(t_target**beta))
    M = max(1, _round_half_up(t_target / d))
    return PpmSchedule(d, M, beta)


@lru_cache(maxsize=64)
def block_distribution(c: CoinOperator, d: int) -> PositionDistribution:
    """Law of one block displacement Y^(d): the d-step mixed-coin walk."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    return mixed_coin_distribution(c, d)


def convolve(p: PositionDistribution, q: PositionDistribution) -> PositionDistribution:
    """Law of the sum of independent variables with laws p and q."""
    # direct summation, not FFT: no cancellation, so masses stay >= 0
    return PositionDistribution(p.offset + q.offset, np.convolve(p.mass, q.mass))


def convolve_power(p: PositionDistribution, M: int) -> PositionDistribution:
    """M-fold self-convolution by binary exponentiation."""
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    result = None
    base = p
    while True:
        if M & 1:
            result = base if result is None else convolve(result, base)
        M >>= 1
        if not M:
            return result
        base = convolve(base, base)


def ppm_distribution(c: CoinOperator, s: PpmSchedule) -> PositionDistribution:
    """Exact law of X_t for the walk measured every ``s.d`` steps, ``s.M`` times."""
    return convolve_power(block_distribution(c, s.d), s.M)


def sample_trajectories(c: CoinOperator, s: PpmSchedule, n_samples: int, seed: int) -> np.ndarray:
    """
    Draw ``n_samples`` independent final positions X_t.

    Row i uses M uniforms from PCG64(seed) in row-major order and maps each
    through the inverse CDF of the block law.
    """
    block = block_distribution(c, s.d)
    cdf = np.cumsum(block.mass)
    rng = np.random.Generator(np.random.PCG64(seed))
    u = rng.random((n_samples, s.M)) * cdf[-1]
    idx = np.searchsorted(cdf, u, side="right")
    np.minimum(idx, block.mass.size - 1, out=idx)
    return (idx + block.offset).sum(axis=1)


def sample_trajectory(c: CoinOperator, s: PpmSchedule, seed: int) -> int:
    """One Monte Carlo draw of X_t; deterministic for a fixed seed."""
    return int(sample_trajectories(c, s, 1, seed)[0])


def moments(p: PositionDistribution, order: int) -> float:
    """Raw moment sum_x x**order p(x) for order 1 or 2."""
    if order not in (1, 2):
        raise ValueError(f"order must be 1 or 2, got {order}")
    x = p.positions.astype(np.float64)
    return float(np.dot(x**order, p.mass))


def variance(p: PositionDistribution) -> float:
    m1 = moments(p, 1)
    return moments(p, 2) - m1 * m1
