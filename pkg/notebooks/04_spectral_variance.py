# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # The variance from momentum space
#
# The eigenphases of the momentum-space step give a group velocity h(k);
# averaging h(k)^2 over the Brillouin zone reproduces 1 - sqrt(1 - |a|^2).
# The periodic trapezoidal rule converges geometrically.

# %%
import math

import numpy as np

from qwppm import CoinParams, coin_from_params, eigenphases, group_velocity_sq, sigma_squared, sigma_squared_quadrature

coin = coin_from_params(CoinParams(r=0.8, phi=0.4, psi=1.0, delta=0.3))
exact = sigma_squared(0.8)
for n in (16, 32, 64, 128, 256):
    print(n, abs(sigma_squared_quadrature(coin, n) - exact))

# %% [markdown]
# h(k)^2 against a finite difference of the upper eigenphase:

# %%
ks = np.linspace(0, 2 * math.pi, 9)
h = 1e-5
fd = [(eigenphases(coin, k + h).phi_plus - eigenphases(coin, k - h).phi_plus) / (2 * h) for k in ks]
print(np.c_[ks, np.square(fd), group_velocity_sq(coin, ks)])

# %% [markdown]
# The block characteristic function from momentum space matches the one
# computed from the simulated position law:

# %%
from qwppm import block_char_fn, block_distribution, char_fn_from_distribution

block = block_distribution(coin, 12)
for xi in (0.3, 1.1, 2.5):
    print(xi, block_char_fn(coin, 12, xi), char_fn_from_distribution(block, xi))
