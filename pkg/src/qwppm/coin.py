"""
Quantum coin operators for the one-dimensional walk.

A coin is a 2x2 unitary acting on the chirality basis |L> = (1, 0)^T,
|R> = (0, 1)^T:

    H = [[a, b],
         [c, d]]

Coins can be built from their four entries (``make_coin``), from the
four-parameter form (``coin_from_params``), or from one of the named
constructors (``hadamard``, ``dirac_coin``).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "UNITARITY_TOL",
    "CoinError",
    "NonUnitaryCoinError",
    "TrivialCoinError",
    "CoinOperator",
    "CoinParams",
    "make_coin",
    "coin_from_params",
    "params_of",
    "hadamard",
    "dirac_coin",
]

UNITARITY_TOL = 1e-12


class CoinError(ValueError):
    """Invalid coin specification."""


class NonUnitaryCoinError(CoinError):
    pass


class TrivialCoinError(CoinError):
    """Raised when abcd = 0 and the caller did not allow trivial coins."""


@dataclass(frozen=True)
class CoinOperator:
    """
    Validated 2x2 unitary coin.

    Use ``make_coin`` rather than the bare constructor; the constructor
    performs no checks. ``nontrivial`` records whether abcd != 0, which
    every limit-law result in this package assumes.
    """

    a: complex
    b: complex
    c: complex
    d: complex
    nontrivial: bool = True

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=np.complex128)

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    @property
    def a_mag(self) -> float:
        return abs(self.a)

    def __iter__(self):
        return iter((self.a, self.b, self.c, self.d))


@dataclass(frozen=True)
class CoinParams:
    """Four-parameter form H(r, phi, psi, delta) with 0 < r < 1."""

    r: float
    phi: float = 0.0
    psi: float = 0.0
    delta: float = 0.0

    def __post_init__(self):
        for name in ("r", "phi", "psi", "delta"):
            if not math.isfinite(getattr(self, name)):
                raise CoinError(f"{name} must be finite, got {getattr(self, name)!r}")
        if not 0.0 < self.r < 1.0:
            raise CoinError(f"r must lie in (0, 1), got {self.r!r}")


def _unitarity_defects(a: complex, b: complex, c: complex, d: complex) -> tuple[float, float, float]:
    col_norm = abs(abs(a) ** 2 + abs(c) ** 2 - 1.0)
    col_orth = abs(a * b.conjugate() + c * d.conjugate())
    det_mod = abs(abs(a * d - b * c) - 1.0)
    return col_norm, col_orth, det_mod


def make_coin(a: complex, b: complex, c: complex, d: complex, *, allow_trivial: bool = False) -> CoinOperator:
    """
    Validate four entries and return a ``CoinOperator``.

    Parameters
    ----------
    a, b, c, d : complex
        Matrix entries in the (|L>, |R>) basis.
    allow_trivial : bool
        If False (default), a coin with abcd = 0 raises ``TrivialCoinError``.
        If True it is returned with ``nontrivial=False``.

    Raises
    ------
    NonUnitaryCoinError
        If |a|^2 + |c|^2 = 1, a b* + c d* = 0 or |ad - bc| = 1 is violated
        by more than ``UNITARITY_TOL``.
    TrivialCoinError
        If abcd = 0 and ``allow_trivial`` is False.
    """
    entries = tuple(complex(z) for z in (a, b, c, d))
    if not all(cmath.isfinite(z) for z in entries):
        raise CoinError(f"coin entries must be finite, got {entries!r}")
    col_norm, col_orth, det_mod = _unitarity_defects(*entries)
    if max(col_norm, col_orth, det_mod) > UNITARITY_TOL:
        raise NonUnitaryCoinError(
            "coin is not unitary: "
            f"||a|^2+|c|^2-1| = {col_norm:.3e}, |ab*+cd*| = {col_orth:.3e}, "
            f"||det|-1| = {det_mod:.3e} (tolerance {UNITARITY_TOL:g})"
        )
    nontrivial = all(z != 0 for z in entries)
    if not nontrivial and not allow_trivial:
        raise TrivialCoinError(f"trivial coin (abcd = 0): {entries!r}")
    return CoinOperator(*entries, nontrivial=nontrivial)


def coin_from_params(p: CoinParams) -> CoinOperator:
    """
    Coin from the four-parameter form::

        [[ r e^{i phi},                  sqrt(1-r^2) e^{i psi}      ],
         [ -sqrt(1-r^2) e^{-i(psi-delta)}, r e^{-i(phi-delta)}      ]]
    """
    s = math.sqrt(1.0 - p.r * p.r)
    return make_coin(
        p.r * cmath.exp(1j * p.phi),
        s * cmath.exp(1j * p.psi),
        -s * cmath.exp(-1j * (p.psi - p.delta)),
        p.r * cmath.exp(-1j * (p.phi - p.delta)),
    )


def params_of(c: CoinOperator) -> CoinParams:
    """Recover (r, phi, psi, delta) from a non-trivial coin; angles in (-pi, pi]."""
    if not c.nontrivial:
        raise TrivialCoinError("trivial coin has no four-parameter form with 0 < r < 1")
    return CoinParams(
        r=abs(c.a),
        phi=cmath.phase(c.a),
        psi=cmath.phase(c.b),
        delta=cmath.phase(c.det),
    )


def hadamard() -> CoinOperator:
    """The Hadamard coin (1/sqrt2) [[1, 1], [1, -1]]."""
    h = 1.0 / math.sqrt(2.0)
    return make_coin(h, h, h, -h)


def dirac_coin(epsilon: float) -> CoinOperator:
    """
    Coin [[cos e, -i sin e], [-i sin e, cos e]] for a lattice spacing e.

    Raises ``CoinError`` unless 0 < epsilon < pi/2.
    """
    if not 0.0 < epsilon < math.pi / 2:
        raise CoinError(f"epsilon must lie in (0, pi/2), got {epsilon!r}")
    cs, sn = math.cos(epsilon), math.sin(epsilon)
    return make_coin(cs, -1j * sn, -1j * sn, cs)
