# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # The Hadamard walk without measurement
#
# Start at the origin with the unpolarized coin state and evolve 100 steps
# coherently.  The position law is far from Gaussian: most of the mass sits
# near x = +-t/sqrt(2), with a depleted centre.

# %%
import math

import numpy as np

from qwppm import hadamard, mixed_coin_distribution, moments, variance

H = hadamard()
t = 100
p = mixed_coin_distribution(H, t)

print("support:", p.support)
print("mean:", moments(p, 1))
print("variance / t^2:", variance(p) / t**2, "(compare 1 - 1/sqrt2 =", 1 - 1 / math.sqrt(2), ")")

# %%
peak = p.positions[np.argmax(p.mass)]
print(f"peak at x = {peak}, t/sqrt2 = {t / math.sqrt(2):.1f}")

# %% [markdown]
# A coarse text histogram over bins of width 10:

# %%
for lo in range(-100, 100, 10):
    w = sum(p.pmf(x) for x in range(lo, lo + 10))
    print(f"[{lo:4d}, {lo + 10:4d})  {'#' * int(400 * w)}")
