"""
Discrete-time quantum walk on Z with periodic position measurement.

Exact amplitude evolution, block convolution for the measured walk, the
limit laws of the scaled position, and momentum-space (spectral) checks.
"""

from .coin import (
    CoinError,
    CoinOperator,
    CoinParams,
    NonUnitaryCoinError,
    TrivialCoinError,
    coin_from_params,
    dirac_coin,
    hadamard,
    make_coin,
    params_of,
)
from .limitlaws import (
    LawTag,
    LimitLaw,
    StepCDF,
    konno_cdf,
    konno_density,
    konno_second_moment,
    ks_distance,
    limit_law_for,
    normal_cdf,
    normal_density,
    scaled_empirical_cdf,
    scaling_exponent,
    sigma_squared,
)
from .ppm import (
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
from .spectral import (
    block_char_fn,
    char_fn_from_distribution,
    eigenphases,
    fourier_coin,
    group_velocity_sq,
    sigma_squared_quadrature,
)
from .walk import (
    PositionDistribution,
    WalkerState,
    evolve,
    initial_pure,
    measure_position,
    mixed_coin_distribution,
    step,
)

__version__ = "0.1.0"
