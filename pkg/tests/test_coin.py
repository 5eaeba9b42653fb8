import cmath
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from qwppm.coin import (
    UNITARITY_TOL,
    CoinError,
    CoinParams,
    NonUnitaryCoinError,
    TrivialCoinError,
    coin_from_params,
    dirac_coin,
    hadamard,
    make_coin,
    params_of,
)

S2 = 1 / math.sqrt(2)


def assert_unitary(c):
    m = c.matrix
    np.testing.assert_allclose(m @ m.conj().T, np.eye(2), atol=UNITARITY_TOL)
    assert abs(abs(np.linalg.det(m)) - 1) < UNITARITY_TOL


def test_make_coin_accepts_hadamard_entries():
    c = make_coin(S2, S2, S2, -S2)
    assert c.nontrivial
    assert_unitary(c)


def test_identity_rejected_as_trivial():
    with pytest.raises(TrivialCoinError):
        make_coin(1, 0, 0, 1)


def test_trivial_coin_flagged_when_allowed():
    c = make_coin(1, 0, 0, 1, allow_trivial=True)
    assert not c.nontrivial


def test_non_orthogonal_columns_rejected():
    with pytest.raises(NonUnitaryCoinError):
        make_coin(S2, S2, S2, S2)


def test_non_finite_rejected():
    with pytest.raises(CoinError):
        make_coin(float("nan"), 0, 0, 1)


def test_hadamard_entries():
    c = hadamard()
    assert (c.a, c.b, c.c, c.d) == pytest.approx((S2, S2, S2, -S2), abs=1e-15)
    assert abs(c.a) ** 2 == pytest.approx(0.5, abs=1e-15)
    assert_unitary(c)


@pytest.mark.parametrize(
    "params, expected",
    [
        (CoinParams(S2, 0, 0, math.pi), (S2, S2, S2, -S2)),
        (CoinParams(0.5, 0, 0, 0), (0.5, math.sqrt(3) / 2, -math.sqrt(3) / 2, 0.5)),
    ],
)
def test_coin_from_params_entrywise(params, expected):
    c = coin_from_params(params)
    # entrywise substitution into the four-parameter form, computed here
    r, phi, psi, delta = params.r, params.phi, params.psi, params.delta
    s = math.sqrt(1 - r * r)
    by_hand = (
        r * cmath.exp(1j * phi),
        s * cmath.exp(1j * psi),
        -s * cmath.exp(-1j * (psi - delta)),
        r * cmath.exp(-1j * (phi - delta)),
    )
    for got, want, hand in zip(c, expected, by_hand):
        assert abs(got - want) < 1e-12
        assert abs(got - hand) < 1e-15
    assert_unitary(c)


@pytest.mark.parametrize("r", [0.0, 1.0, -0.2, 1.5])
def test_params_reject_r_outside_open_interval(r):
    with pytest.raises(CoinError):
        CoinParams(r)


def test_dirac_coin_pi_over_4():
    c = dirac_coin(math.pi / 4)
    for got, want in zip(c, (S2, -1j * S2, -1j * S2, S2)):
        assert abs(got - want) < 1e-15


def test_dirac_coin_pi_over_3():
    assert abs(dirac_coin(math.pi / 3).a) ** 2 == pytest.approx(0.25, abs=1e-15)


@pytest.mark.parametrize("eps", [0.0, math.pi / 2, -0.1, 2.0])
def test_dirac_coin_range(eps):
    with pytest.raises(CoinError):
        dirac_coin(eps)


angles = st.floats(-10, 10, allow_nan=False)
radii = st.floats(1e-3, 1 - 1e-3)


@given(radii, angles, angles, angles)
def test_params_always_unitary_and_roundtrip(r, phi, psi, delta):
    c = coin_from_params(CoinParams(r, phi, psi, delta))
    assert_unitary(c)
    assert c.nontrivial
    back = params_of(c)
    assert back.r == pytest.approx(r, abs=1e-12)
    assert abs(cmath.exp(1j * back.phi) - cmath.exp(1j * phi)) < 1e-12
    assert abs(cmath.exp(1j * back.delta) - cmath.exp(1j * delta)) < 1e-12


# r = cos(eps) loses sqrt(1 - r^2) precision as eps -> 0
@given(st.floats(1e-2, math.pi / 2 - 1e-6))
def test_dirac_coin_is_a_four_parameter_coin(eps):
    c = dirac_coin(eps)
    assert_unitary(c)
    fitted = coin_from_params(CoinParams(math.cos(eps), 0.0, -math.pi / 2, 0.0))
    for got, want in zip(c, fitted):
        assert abs(got - want) < 1e-12


def test_coin_is_immutable_and_hashable():
    c = hadamard()
    with pytest.raises(AttributeError):
        c.a = 0
    assert hash(c) == hash(hadamard())
