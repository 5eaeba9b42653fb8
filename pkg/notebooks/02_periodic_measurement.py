# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # Measuring the position every d steps
#
# With d ~ t^beta the walk interpolates between the simple random walk
# (beta = 0, measure every step) and the coherent walk (beta = 1, never
# measure before t).  Each block is an independent copy of the d-step walk,
# so the exact law at time t is a convolution power.

# %%
from qwppm import hadamard, ppm_distribution, schedule_from, variance

H = hadamard()
for beta in (0.0, 0.25, 0.5, 0.75, 1.0):
    s = schedule_from(100, beta)
    p = ppm_distribution(H, s)
    print(f"beta={beta:<5} d={s.d:<4} M={s.M:<4} t={s.t:<4} Var={variance(p):10.2f}")

# %% [markdown]
# The variance grows monotonically with beta; at beta = 0.5 it is already
# about three times the random-walk value.
#
# The same law by Monte Carlo, as a sanity check on the convolution:

# %%
from qwppm import sample_trajectories

s = schedule_from(100, 0.5)
draws = sample_trajectories(H, s, 50_000, seed=1)
print("MC variance:", draws.var(), " exact:", variance(ppm_distribution(H, s)))
