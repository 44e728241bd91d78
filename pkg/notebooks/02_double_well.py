"""
Double-well signal observed in Gaussian noise
=============================================

The signal ``dX = -4 X (X^2 - 1) dt + sqrt(2) dW`` hops between wells at
``-1`` and ``+1``; it is observed through ``dY = X dt + sqrt(0.1) dV``.
The posterior is often bimodal right after a hop, which a single Gaussian
cannot represent.  We compare the grid solution of the filtering equation
with the bootstrap and feedback particle filters and the extended
Kalman-Bucy filter.
"""

# %%
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
from scipy.stats import norm

from ctfilters.core_model import GaussianObsModel, LinearDrift, double_well_model
from ctfilters.exact_filters import GaussianBelief
from ctfilters.gaussian_approx import run_ekbf
from ctfilters.harness_cli import metric_rmse
from ctfilters.particle import run_bpf, run_fbpf
from ctfilters.pde_oracle import GridDensity, kushner_step, run_grid_filter
from ctfilters.simulate import TimeGrid, simulate_gaussian_obs, simulate_jump_diffusion

FIG = Path(__file__).with_name("figures")
FIG.mkdir(exist_ok=True)

# %%
model = double_well_model()
obs = GaussianObsModel(LinearDrift([[1.0]]), [[0.1]])
grid = TimeGrid.from_horizon(10.0, 1e-3)
rng = np.random.default_rng(5)
_, x = simulate_jump_diffusion(model, grid, seed=rng)
dY = simulate_gaussian_obs(x, obs, grid, seed=rng)

# %% [markdown]
# Grid reference, stored every 20 steps for the density plot.

# %%
frames = {}
init = GridDensity.from_pdf(norm(0, 1).pdf, -3.5, 3.5, 500)
ref = run_grid_filter(kushner_step, init, model, obs, dY, grid.dt,
                      callback=lambda k, d: frames.__setitem__(k, d.values) if k % 20 == 19 else None)
bpf = run_bpf(model, obs, dY, grid.dt, 2000, seed=rng)
fbpf = run_fbpf(model, obs, dY, grid.dt, 2000, seed=rng)
ekbf_mean, ekbf_cov = run_ekbf(model, obs, dY, grid.dt, GaussianBelief([0.0], [[1.0]]))

for name, m in [("grid", ref.means), ("bpf", bpf.means[:, 0]), ("fbpf", fbpf.means[:, 0]), ("ekbf", ekbf_mean[:, 0])]:
    print(f"{name:5s} rmse {metric_rmse(m, x[:, 0]):.3f}")

# %%
t = grid.times
keys = sorted(frames)
img = np.array([frames[k] for k in keys]).T
fig, ax = plt.subplots(2, 1, figsize=(9, 6), sharex=True)
ax[0].imshow(img, origin="lower", aspect="auto", cmap="Greys",
             extent=[t[keys[0]], t[keys[-1]], init.xmin, init.xmax], vmax=np.quantile(img, 0.99))
ax[0].plot(t, x[:, 0], "r", lw=0.8, label="signal")
ax[0].set_ylabel("x")
ax[0].legend(loc="upper right")
ax[1].plot(t, x[:, 0], "k", lw=0.6, alpha=0.5, label="signal")
ax[1].plot(t, ref.means, lw=1.2, label="grid")
ax[1].plot(t, bpf.means[:, 0], lw=0.8, label="BPF")
ax[1].plot(t, ekbf_mean[:, 0], lw=0.8, label="EKBF")
ax[1].set_xlabel("t")
ax[1].set_ylabel("posterior mean")
ax[1].legend(loc="upper right", ncol=4)
fig.tight_layout()
fig.savefig(FIG / "double_well.png", dpi=120)

# %% [markdown]
# Effective sample size of the bootstrap filter between resampling events.

# %%
fig, ax = plt.subplots(figsize=(8, 3))
ax.plot(t, bpf.ess)
ax.set_xlabel("t")
ax.set_ylabel("ESS")
fig.tight_layout()
fig.savefig(FIG / "double_well_ess.png", dpi=120)
print("resampling events:", bpf.n_resamples)
