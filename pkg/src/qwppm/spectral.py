"""
Momentum-space analysis of the walk.

With psi_hat(k) = sum_x psi(x) e^{ikx}, one step acts as

    H_hat(k) = diag(e^{-ik}, e^{ik}) H,

and the characteristic function of a d-step block started from the mixed
coin is the k-average of (1/2) Tr[H_hat^d(k + xi) H_hat^d(k)^dagger].

Eigenphase conventions
----------------------
``eigenphases(c, k)`` returns the phases of the roots of

    z^2 - 2 r e^{i delta/2} cos(delta' + k) z + e^{i delta} = 0,

r = |a|, delta = arg det H, delta' = arg a - delta/2.  These are the
eigenvalues of diag(e^{ik}, e^{-ik}) H = H_hat(-k); the sign flip of k
leaves every full-period integral unchanged.  The ``+`` branch is the
root whose phase relative to delta/2 lies in [0, pi), which gives

    phi_plus(k) = delta/2 + arccos(r cos(delta' + k)),

continuous in k for 0 < r < 1.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .coin import CoinOperator, TrivialCoinError
from .walk import PositionDistribution

__all__ = [
    "DEFAULT_QUAD_POINTS",
    "FourierCoin",
    "EigenphasePair",
    "fourier_coin",
    "fourier_coin_stack",
    "eigenphases",
    "group_velocity_sq",
    "sigma_squared_quadrature",
    "block_char_fn",
    "char_fn_from_distribution",
]

DEFAULT_QUAD_POINTS = 1024


@dataclass(frozen=True, eq=False)
class FourierCoin:
    k: float
    matrix: np.ndarray


@dataclass(frozen=True)
class EigenphasePair:
    k: float
    phi_plus: float
    phi_minus: float
    z_plus: complex
    z_minus: complex
    r: float
    delta: float
    delta_prime: float

    def quadratic_coeffs(self) -> tuple[complex, complex]:
        """(2 r e^{i delta/2} cos(delta' + k), e^{i delta}): root sum and product."""
        linear = 2.0 * self.r * cmath.exp(0.5j * self.delta) * math.cos(self.delta_prime + self.k)
        return linear, cmath.exp(1j * self.delta)


def _phase_data(c: CoinOperator) -> tuple[float, float, float]:
    if not c.nontrivial:
        raise TrivialCoinError("eigenphase analysis needs a coin with abcd != 0")
    r = abs(c.a)
    delta = cmath.phase(c.det)
    return r, delta, cmath.phase(c.a) - 0.5 * delta


def fourier_coin(c: CoinOperator, k: float) -> FourierCoin:
    """H_hat(k) = diag(e^{-ik}, e^{ik}) H."""
    return FourierCoin(k, fourier_coin_stack(c, np.asarray([k], dtype=np.float64))[0])


def fourier_coin_stack(c: CoinOperator, ks: np.ndarray) -> np.ndarray:
    """H_hat evaluated on an array of momenta; shape (len(ks), 2, 2)."""
    ks = np.asarray(ks, dtype=np.float64)
    phases = np.stack([np.exp(-1j * ks), np.exp(1j * ks)], axis=-1)
    return phases[..., :, None] * c.matrix


def eigenphases(c: CoinOperator, k: float) -> EigenphasePair:
    """
    Eigenphases (phi_plus, phi_minus) of diag(e^{ik}, e^{-ik}) H.

    The roots are computed numerically from the matrix, then labelled by
    the branch rule in the module docstring.  Raises ``TrivialCoinError``
    for coins with abcd = 0.
    """
    r, delta, delta_prime = _phase_data(c)
    m = np.array([[cmath.exp(1j * k), 0], [0, cmath.exp(-1j * k)]]) @ c.matrix
    z1, z2 = np.linalg.eigvals(m)
    # phase relative to delta/2, folded into (-pi, pi]
    half = cmath.exp(0.5j * delta)
    rel1 = cmath.phase(z1 / half)
    rel2 = cmath.phase(z2 / half)
    # relative phases are +-arccos(r cos(.)), bounded away from 0 and pi
    if rel1 >= rel2:
        zp, zm, relp, relm = z1, z2, rel1, rel2
    else:
        zp, zm, relp, relm = z2, z1, rel2, rel1
    return EigenphasePair(
        k=float(k),
        phi_plus=0.5 * delta + relp,
        phi_minus=0.5 * delta + relm,
        z_plus=complex(zp),
        z_minus=complex(zm),
        r=r,
        delta=delta,
        delta_prime=delta_prime,
    )


def group_velocity_sq(c: CoinOperator, k):
    """
    h(k)^2 = r^2 sin^2(delta' + k) / (1 - r^2 cos^2(delta' + k)).

    Square of d phi_plus / dk in the ``eigenphases`` convention.  Accepts
    scalar or array ``k``.
    """
    r, _, delta_prime = _phase_data(c)
    u = np.asarray(k, dtype=np.float64) + delta_prime
    cs = np.cos(u)
    out = r * r * np.sin(u) ** 2 / (1.0 - r * r * cs * cs)
    return float(out) if out.ndim == 0 else out


def sigma_squared_quadrature(c: CoinOperator, n_points: int = DEFAULT_QUAD_POINTS) -> float:
    """(1/2pi) integral of h(k)^2 over one period, periodic trapezoidal rule."""
    if n_points < 16:
        raise ValueError(f"n_points must be >= 16, got {n_points}")
    ks = 2.0 * np.pi * np.arange(n_points) / n_points
    return float(np.mean(group_velocity_sq(c, ks)))


def block_char_fn(c: CoinOperator, d: int, xi: float, n_points: int = DEFAULT_QUAD_POINTS) -> complex:
    """
    E[exp(i xi Y)] for one d-step block from the mixed coin.

    Periodic trapezoidal rule in k; the integrand is a trigonometric
    polynomial of degree <= 2d in k, so the rule is exact once n_points > 2d.
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    ks = 2.0 * np.pi * np.arange(n_points) / n_points
    u_shift = np.linalg.matrix_power(fourier_coin_stack(c, ks + xi), d)
    u_base = np.linalg.matrix_power(fourier_coin_stack(c, ks), d)
    # Tr[A B^dagger] = sum_ij A_ij conj(B_ij)
    tr = np.einsum("kij,kij->k", u_shift, u_base.conj())
    return complex(0.5 * tr.mean())


def char_fn_from_distribution(p: PositionDistribution, xi):
    """sum_x p(x) e^{i xi x}; ``xi`` may be scalar or array."""
    xi = np.asarray(xi, dtype=np.float64)
    vals = np.exp(1j * np.multiply.outer(xi, p.positions)) @ p.mass
    return complex(vals) if vals.ndim == 0 else vals
