"""
Exact amplitude evolution of the discrete-time quantum walk on Z.

One step is U = S (I x H): the coin acts on the chirality at every site,
then L-amplitude moves to x-1 and R-amplitude to x+1.  States are stored
densely over the window [-n, n]; sites of the wrong parity are stored but
stay zero.

The mixed initial coin (|L><L| + |R><R|)/2 is handled as the equal
average of the two pure-start distributions, which is exact because both
evolution and the Born rule are linear in the density operator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .coin import CoinOperator

__all__ = [
    "NORM_TOL",
    "WalkerState",
    "PositionDistribution",
    "initial_pure",
    "step",
    "evolve",
    "measure_position",
    "pure_distribution",
    "mixed_coin_distribution",
]

NORM_TOL = 1e-10

Chirality = Literal["L", "R"]


@dataclass(frozen=True)
class WalkerState:
    """
    Chirality amplitudes on the window [-radius, radius].

    ``left[i]`` and ``right[i]`` hold psi_L(x), psi_R(x) at x = i - radius.
    """

    left: np.ndarray
    right: np.ndarray
    step_count: int = 0

    def __post_init__(self):
        if self.left.shape != self.right.shape or self.left.ndim != 1 or self.left.size % 2 != 1:
            raise ValueError("left/right must be 1-d arrays of equal odd length")

    @property
    def radius(self) -> int:
        return (self.left.size - 1) // 2

    @property
    def positions(self) -> np.ndarray:
        return np.arange(-self.radius, self.radius + 1)

    @property
    def norm(self) -> float:
        return float(np.sum(np.abs(self.left) ** 2 + np.abs(self.right) ** 2))


@dataclass(frozen=True, eq=False)
class PositionDistribution:
    """
    Finitely supported probability mass function on Z.

    ``mass[i]`` is the probability of site ``offset + i``.  Construction
    checks that masses are finite, nonnegative and sum to 1 within
    ``NORM_TOL``.
    """

    offset: int
    mass: np.ndarray

    def __post_init__(self):
        mass = np.asarray(self.mass, dtype=np.float64)
        if mass.ndim != 1 or mass.size == 0:
            raise ValueError("mass must be a non-empty 1-d array")
        if not np.all(np.isfinite(mass)) or np.any(mass < 0):
            raise ValueError("masses must be finite and nonnegative")
        total = float(mass.sum())
        if abs(total - 1.0) > NORM_TOL:
            raise ValueError(f"masses sum to {total!r}, not 1 within {NORM_TOL:g}")
        mass.setflags(write=False)
        object.__setattr__(self, "mass", mass)
        object.__setattr__(self, "offset", int(self.offset))

    @classmethod
    def from_dict(cls, pmf: dict[int, float]) -> PositionDistribution:
        lo, hi = min(pmf), max(pmf)
        mass = np.zeros(hi - lo + 1)
        for x, p in pmf.items():
            mass[x - lo] = p
        return cls(lo, mass)

    @classmethod
    def delta(cls, x: int = 0) -> PositionDistribution:
        return cls(x, np.ones(1))

    @property
    def positions(self) -> np.ndarray:
        return np.arange(self.offset, self.offset + self.mass.size)

    @property
    def support(self) -> tuple[int, int]:
        """Smallest and largest site carrying positive mass."""
        nz = np.flatnonzero(self.mass)
        return self.offset + int(nz[0]), self.offset + int(nz[-1])

    def pmf(self, x: int) -> float:
        i = x - self.offset
        return float(self.mass[i]) if 0 <= i < self.mass.size else 0.0

    def as_dict(self) -> dict[int, float]:
        return {int(x): float(p) for x, p in zip(self.positions, self.mass) if p != 0.0}

    def __eq__(self, other):
        if not isinstance(other, PositionDistribution):
            return NotImplemented
        return self.offset == other.offset and np.array_equal(self.mass, other.mass)

    def __repr__(self):
        lo, hi = self.support
        return f"PositionDistribution(support=[{lo}, {hi}], sites={self.mass.size})"


def initial_pure(chirality: Chirality) -> WalkerState:
    """Walker localized at x = 0 in chirality ``"L"`` or ``"R"``."""
    if chirality not in ("L", "R"):
        raise ValueError(f"chirality must be 'L' or 'R', got {chirality!r}")
    left = np.zeros(1, dtype=np.complex128)
    right = np.zeros(1, dtype=np.complex128)
    (left if chirality == "L" else right)[0] = 1.0
    return WalkerState(left, right, 0)


def step(s: WalkerState, c: CoinOperator) -> WalkerState:
    """Apply U = S (I x H) once; the window grows by one site on each side."""
    n = s.left.size
    left = np.zeros(n + 2, dtype=np.complex128)
    right = np.zeros(n + 2, dtype=np.complex128)
    # old index j (site x) -> new index j (site x-1) for L, j+2 (site x+1) for R
    left[:n] = c.a * s.left + c.b * s.right
    right[2:] = c.c * s.left + c.d * s.right
    return WalkerState(left, right, s.step_count + 1)


def evolve(s: WalkerState, c: CoinOperator, n: int) -> WalkerState:
    """Apply ``step`` n times."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    for _ in range(n):
        s = step(s, c)
    return s


def measure_position(s: WalkerState) -> PositionDistribution:
    """Born-rule position law: P(x) = |psi_L(x)|^2 + |psi_R(x)|^2."""
    mass = np.abs(s.left) ** 2 + np.abs(s.right) ** 2
    return PositionDistribution(-s.radius, mass)


def pure_distribution(c: CoinOperator, n: int, chirality: Chirality) -> PositionDistribution:
    return measure_position(evolve(initial_pure(chirality), c, n))


def mixed_coin_distribution(c: CoinOperator, n: int) -> PositionDistribution:
    """Position law after n steps from x = 0 with coin state (|L><L| + |R><R|)/2."""
    pl = measure_position(evolve(initial_pure("L"), c, n))
    pr = measure_position(evolve(initial_pure("R"), c, n))
    return PositionDistribution(pl.offset, 0.5 * (pl.mass + pr.mass))
