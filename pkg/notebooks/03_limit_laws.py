# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # Convergence to the limit laws
#
# Scaling X_t by t^((1+beta)/2) gives a standard normal for beta = 0, the
# normal N(0, 1 - sqrt(1 - |a|^2)) for 0 < beta < 1 and the Konno law for
# beta = 1.  The Kolmogorov-Smirnov distance between the exact scaled law
# and its limit shrinks as t grows.

# %%
from qwppm import (
    hadamard,
    ks_distance,
    limit_law_for,
    ppm_distribution,
    scaled_empirical_cdf,
    scaling_exponent,
    schedule_from,
    variance,
)

H = hadamard()
for beta in (0.0, 0.5, 1.0):
    law = limit_law_for(beta, H.a_mag)
    theta = scaling_exponent(beta).theta
    print(f"beta={beta}: {law.tag.value}, limit variance {law.variance:.5f}")
    for t in (100, 1000, 10_000):
        if beta == 1.0 and t > 1000:
            continue
        s = schedule_from(t, beta)
        p = ppm_distribution(H, s)
        ks = ks_distance(scaled_empirical_cdf(p, s.t, theta), law)
        print(f"   t={s.t:<6} KS={ks:.4f}  Var/t^(1+beta)={variance(p) / s.t ** (1 + beta):.5f}")

# %% [markdown]
# The Konno law's second moment equals the intermediate-regime variance:

# %%
from qwppm import konno_second_moment, sigma_squared

for r in (0.3, 0.5, 0.9):
    print(r, konno_second_moment(r), sigma_squared(r))
