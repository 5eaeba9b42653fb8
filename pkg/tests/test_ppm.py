import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qwppm.coin import CoinParams, coin_from_params, hadamard
from qwppm.ppm import (
    PpmSchedule,
    block_distribution,
    convolve,
    convolve_power,
    moments,
    ppm_distribution,
    sample_trajectories,
    sample_trajectory,
    schedule_from,
    variance,
)
from qwppm.walk import PositionDistribution, mixed_coin_distribution

from .oracles import binomial_walk, double_sum_convolution, tv_distance

H = hadamard()
COIN = coin_from_params(CoinParams(0.4, 0.3, 1.1, 2.0))
COIN_FLIP = PositionDistribution.from_dict({-1: 0.5, 1: 0.5})


@pytest.mark.parametrize(
    "t, beta, d, M",
    [(100, 0.5, 10, 10), (100, 0.0, 1, 100), (37, 0.0, 1, 37), (100, 1.0, 100, 1), (1000, 0.5, 32, 31)],
)
def test_schedule_from(t, beta, d, M):
    s = schedule_from(t, beta)
    assert (s.d, s.M, s.t) == (d, M, d * M)


@pytest.mark.parametrize("beta", [-0.1, 1.1])
def test_schedule_rejects_beta(beta):
    with pytest.raises(ValueError):
        schedule_from(100, beta)


def test_schedule_validation():
    with pytest.raises(ValueError):
        PpmSchedule(0, 3)
    with pytest.raises(ValueError):
        schedule_from(0, 0.5)


def test_schedule_rounds_half_up():
    # d = 2, t/d = 2.5 exactly: half-up gives M = 3 where bankers' rounding gives 2
    s = schedule_from(5, math.log(2) / math.log(5))
    assert (s.d, s.M, s.t) == (2, 3, 6)


@pytest.mark.parametrize("d, expected", [(1, {-1: 0.5, 1: 0.5}), (2, {-2: 0.25, 0: 0.5, 2: 0.25})])
def test_block_distribution_small(d, expected):
    assert block_distribution(H, d).as_dict() == pytest.approx(expected, abs=1e-15)


def test_convolve_identity_and_coin_flips():
    assert convolve(PositionDistribution.delta(0), COIN_FLIP) == COIN_FLIP
    assert convolve(COIN_FLIP, COIN_FLIP).as_dict() == pytest.approx({-2: 0.25, 0: 0.5, 2: 0.25})
    assert convolve(COIN_FLIP, PositionDistribution.delta(3)).as_dict() == {2: 0.5, 4: 0.5}


def test_convolve_matches_double_sum():
    p, q = block_distribution(COIN, 5), block_distribution(COIN, 3)
    got, want = convolve(p, q).as_dict(), double_sum_convolution(p.as_dict(), q.as_dict())
    assert tv_distance(got, want) < 1e-14


def test_convolve_power_binomial():
    assert convolve_power(COIN_FLIP, 1) is COIN_FLIP
    got = convolve_power(COIN_FLIP, 4).as_dict()
    assert got == pytest.approx({-4: 1 / 16, -2: 4 / 16, 0: 6 / 16, 2: 4 / 16, 4: 1 / 16}, abs=1e-16)


@pytest.mark.parametrize("M", [1, 2, 3, 7, 16, 33, 64])
def test_convolve_power_matches_iterated(M):
    block = block_distribution(COIN, 3)
    iterated = block.as_dict()
    for _ in range(M - 1):
        iterated = double_sum_convolution(iterated, block.as_dict())
    assert tv_distance(convolve_power(block, M).as_dict(), iterated) <= 1e-9


def test_ppm_beta_zero_is_random_walk():
    got = ppm_distribution(H, PpmSchedule(1, 2))
    assert got.as_dict() == pytest.approx({-2: 0.25, 0: 0.5, 2: 0.25}, abs=1e-15)
    got = ppm_distribution(H, PpmSchedule(1, 30))
    want = binomial_walk(30)
    assert max(abs(got.pmf(x) - w) for x, w in want.items()) <= 1e-12


@pytest.mark.parametrize("coin", [H, COIN])
def test_ppm_single_block_is_pure_walk(coin):
    assert ppm_distribution(coin, PpmSchedule(40, 1)) == mixed_coin_distribution(coin, 40)


def test_ppm_crossover_variance_between_extremes():
    v = [variance(ppm_distribution(H, schedule_from(100, b))) for b in (0.0, 0.5, 1.0)]
    assert v[0] < v[1] < v[2]


@pytest.mark.parametrize("d, M", [(2, 5), (10, 10), (7, 13)])
def test_iid_additivity_of_second_moment(d, M):
    block = block_distribution(H, d)
    assert moments(block, 1) == pytest.approx(0.0, abs=1e-12)
    assert moments(ppm_distribution(H, PpmSchedule(d, M)), 2) == pytest.approx(M * moments(block, 2), abs=1e-9)


def test_moments():
    assert moments(COIN_FLIP, 1) == 0.0
    assert moments(COIN_FLIP, 2) == 1.0
    assert moments(mixed_coin_distribution(H, 2), 2) == pytest.approx(2.0, abs=1e-15)
    with pytest.raises(ValueError):
        moments(COIN_FLIP, 3)


def test_sample_trajectory_support_and_determinism():
    s = PpmSchedule(1, 1)
    assert {sample_trajectory(H, s, seed) for seed in range(50)} == {-1, 1}
    s = PpmSchedule(10, 10)
    assert sample_trajectory(H, s, 1234) == sample_trajectory(H, s, 1234)
    a = sample_trajectories(COIN, s, 100, 7)
    assert np.array_equal(a, sample_trajectories(COIN, s, 100, 7))
    # parity: every block displacement is even
    assert np.all(a % 2 == 0)


def test_sampler_mean_within_three_standard_errors():
    s = PpmSchedule(10, 10)
    exact = ppm_distribution(H, s)
    draws = sample_trajectories(H, s, 100_000, 2024)
    se = math.sqrt(variance(exact) / draws.size)
    assert abs(draws.mean() - moments(exact, 1)) < 3 * se


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 12), st.integers(1, 12))
def test_ppm_is_normalized_with_even_parity_blocks(d, M):
    p = ppm_distribution(COIN, PpmSchedule(d, M))
    assert abs(p.mass.sum() - 1) <= 1e-10
    lo, hi = p.support
    assert lo >= -d * M and hi <= d * M
    assert np.all(p.mass[(p.positions - d * M) % 2 != 0] == 0)
