"""
Limit laws for the periodically measured walk and goodness-of-fit tools.

With d ~ t^beta the scaled position X_t / t^theta, theta = (1 + beta)/2,
converges in distribution to

    N(0, 1)                          beta = 0
    N(0, 1 - sqrt(1 - |a|^2))        0 < beta < 1
    K(|a|)                           beta = 1

where K(r) is the Konno law with density

    f(x; r) = sqrt(1 - r^2) / (pi (1 - x^2) sqrt(r^2 - x^2)),  |x| < r.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np
from scipy import integrate

from .walk import PositionDistribution

__all__ = [
    "LawTag",
    "LimitLaw",
    "ScalingExponent",
    "StepCDF",
    "scaling_exponent",
    "limit_law_for",
    "sigma_squared",
    "konno_density",
    "konno_cdf",
    "konno_cdf_quadrature",
    "konno_moment",
    "konno_second_moment",
    "normal_density",
    "normal_cdf",
    "scaled_empirical_cdf",
    "ks_distance",
]


class LawTag(str, enum.Enum):
    STANDARD_NORMAL = "STANDARD_NORMAL"
    NORMAL_SIGMA2 = "NORMAL_SIGMA2"
    KONNO = "KONNO"


@dataclass(frozen=True)
class LimitLaw:
    tag: LawTag
    sigma2: float | None = None
    r: float | None = None

    def __post_init__(self):
        if self.tag is LawTag.NORMAL_SIGMA2 and not (self.sigma2 is not None and 0.0 < self.sigma2 < 1.0):
            raise ValueError(f"NORMAL_SIGMA2 needs sigma2 in (0, 1), got {self.sigma2!r}")
        if self.tag is LawTag.KONNO and not (self.r is not None and 0.0 < self.r < 1.0):
            raise ValueError(f"KONNO needs r in (0, 1), got {self.r!r}")

    @property
    def variance(self) -> float:
        if self.tag is LawTag.STANDARD_NORMAL:
            return 1.0
        if self.tag is LawTag.NORMAL_SIGMA2:
            return self.sigma2
        return sigma_squared(self.r)

    def cdf(self, x):
        if self.tag is LawTag.KONNO:
            return konno_cdf(x, self.r)
        return normal_cdf(x, 0.0, self.variance)

    def pdf(self, x):
        if self.tag is LawTag.KONNO:
            return konno_density(x, self.r)
        return normal_density(x, 0.0, self.variance)

    def __call__(self, x):
        return self.cdf(x)


@dataclass(frozen=True)
class ScalingExponent:
    beta: float
    theta: float


def scaling_exponent(beta: float) -> ScalingExponent:
    """theta = (1 + beta)/2, the exponent normalizing X_t."""
    _check_beta(beta)
    return ScalingExponent(beta, (1.0 + beta) / 2.0)


def _check_beta(beta: float) -> None:
    if not 0.0 <= beta <= 1.0:
        raise ValueError(f"beta must lie in [0, 1], got {beta!r}")


def _check_r(r: float, name: str = "r") -> None:
    if not 0.0 < r < 1.0:
        raise ValueError(f"{name} must lie in (0, 1), got {r!r}")


def limit_law_for(beta: float, a_mag: float) -> LimitLaw:
    """Limit law of X_t / t^((1+beta)/2) for a coin with |a| = a_mag."""
    _check_beta(beta)
    _check_r(a_mag, "a_mag")
    if beta == 0.0:
        return LimitLaw(LawTag.STANDARD_NORMAL)
    if beta == 1.0:
        return LimitLaw(LawTag.KONNO, r=a_mag)
    return LimitLaw(LawTag.NORMAL_SIGMA2, sigma2=sigma_squared(a_mag))


def sigma_squared(a_mag: float) -> float:
    """1 - sqrt(1 - |a|^2), the variance of the intermediate-regime normal law."""
    _check_r(a_mag, "a_mag")
    # a^2 / (1 + sqrt(1 - a^2)) avoids cancellation for small |a|
    return a_mag * a_mag / (1.0 + math.sqrt(1.0 - a_mag * a_mag))


def konno_density(x, r: float):
    """
    Konno density f(x; r), zero outside the open interval (-r, r).

    Accepts scalars or arrays.
    """
    _check_r(r)
    x = np.asarray(x, dtype=np.float64)
    inside = np.abs(x) < r
    xi = np.where(inside, x, 0.0)
    val = np.sqrt(1.0 - r * r) / (np.pi * (1.0 - xi * xi) * np.sqrt(r * r - xi * xi))
    out = np.where(inside, val, 0.0)
    return float(out) if out.ndim == 0 else out


def konno_cdf(x, r: float):
    """
    Konno distribution function, 1/2 + arctan(sqrt(1-r^2) x / sqrt(r^2-x^2)) / pi
    on (-r, r).  Checked against ``konno_cdf_quadrature`` in the tests.
    """
    _check_r(r)
    x = np.asarray(x, dtype=np.float64)
    inside = np.abs(x) < r
    xi = np.where(inside, x, 0.0)
    val = 0.5 + np.arctan2(math.sqrt(1.0 - r * r) * xi, np.sqrt(r * r - xi * xi)) / np.pi
    out = np.where(inside, val, np.where(x >= r, 1.0, 0.0))
    return float(out) if out.ndim == 0 else out


def _konno_angle_integrand(theta: float, r: float, power: int) -> float:
    # x = r sin(theta): f(x) dx = sqrt(1-r^2) / (pi (1 - r^2 sin^2 theta)) dtheta
    x = r * math.sin(theta)
    return x**power * math.sqrt(1.0 - r * r) / (math.pi * (1.0 - x * x))


def konno_cdf_quadrature(x: float, r: float) -> float:
    """Konno CDF by adaptive quadrature in the angle variable x = r sin(theta)."""
    _check_r(r)
    if x <= -r:
        return 0.0
    if x >= r:
        return 1.0
    upper = math.asin(x / r)
    val, _ = integrate.quad(_konno_angle_integrand, -math.pi / 2, upper, args=(r, 0), epsabs=1e-13, epsrel=1e-13)
    return val


def konno_moment(r: float, power: int) -> float:
    """integral of x**power f(x; r) dx by quadrature."""
    _check_r(r)
    val, _ = integrate.quad(
        _konno_angle_integrand, -math.pi / 2, math.pi / 2, args=(r, power), epsabs=1e-13, epsrel=1e-13
    )
    return val


def konno_second_moment(r: float) -> float:
    return konno_moment(r, 2)


def normal_density(x, mean: float, variance: float):
    if not variance > 0:
        raise ValueError(f"variance must be positive, got {variance!r}")
    z = (np.asarray(x, dtype=np.float64) - mean) / math.sqrt(variance)
    out = np.exp(-0.5 * z * z) / math.sqrt(2.0 * math.pi * variance)
    return float(out) if out.ndim == 0 else out


_erfc = np.vectorize(math.erfc, otypes=[np.float64])


def normal_cdf(x, mean: float, variance: float):
    """Normal distribution function via the C library erfc (double-precision accurate)."""
    if not variance > 0:
        raise ValueError(f"variance must be positive, got {variance!r}")
    z = (np.asarray(x, dtype=np.float64) - mean) / math.sqrt(2.0 * variance)
    out = 0.5 * _erfc(-z)
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True, eq=False)
class StepCDF:
    """
    Right-continuous step CDF with jumps at ``points`` (increasing) reaching
    ``cum`` (cumulative probability at and including each point).
    """

    points: np.ndarray
    cum: np.ndarray

    def __call__(self, x):
        idx = np.searchsorted(self.points, x, side="right")
        vals = np.concatenate(([0.0], self.cum))[idx]
        return float(vals) if np.ndim(vals) == 0 else vals

    def left_limit(self, x):
        idx = np.searchsorted(self.points, x, side="left")
        vals = np.concatenate(([0.0], self.cum))[idx]
        return float(vals) if np.ndim(vals) == 0 else vals


def scaled_empirical_cdf(p: PositionDistribution, t: int, theta: float) -> StepCDF:
    """CDF of X / t^theta for X distributed as p."""
    keep = p.mass > 0
    points = p.positions[keep] / float(t) ** theta
    return StepCDF(points, np.cumsum(p.mass[keep]))


Law = Union[LimitLaw, StepCDF, Callable]


def ks_distance(empirical: StepCDF, law: Law) -> float:
    """
    sup_x |F_emp(x) - F_law(x)|.

    ``law`` may be continuous (a ``LimitLaw`` or any CDF callable), in which
    case the supremum is attained at a jump of ``empirical`` from one side.
    If ``law`` is another ``StepCDF`` both sides of every jump of either
    function are compared.
    """
    if isinstance(law, StepCDF):
        pts = np.union1d(empirical.points, law.points)
        right = np.abs(empirical(pts) - law(pts))
        left = np.abs(empirical.left_limit(pts) - law.left_limit(pts))
        return float(max(right.max(), left.max()))
    f_law = np.asarray(law(empirical.points), dtype=np.float64)
    before = np.concatenate(([0.0], empirical.cum[:-1]))
    return float(max(np.abs(empirical.cum - f_law).max(), np.abs(before - f_law).max()))
