"""
Linear-Gaussian case
====================

For ``dX = -X dt + dW`` observed through ``dY = X dt + dV`` every method
here should agree with the Kalman-Bucy filter: the extended filter exactly,
the grid solution up to discretization and the ensemble methods up to
Monte-Carlo error.  The posterior variance settles at the root of the
Riccati equation, ``sqrt(2) - 1``.
"""

# %%
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
from scipy.stats import norm

from ctfilters.core_model import GaussianObsModel, LinearDrift, linear_model
from ctfilters.exact_filters import GaussianBelief, riccati_stationary_scalar, run_kalman_bucy
from ctfilters.gaussian_approx import run_ekbf
from ctfilters.particle import run_bpf, run_enkbf, run_fbpf
from ctfilters.pde_oracle import GridDensity, kushner_step, run_grid_filter
from ctfilters.simulate import TimeGrid, simulate_gaussian_obs, simulate_jump_diffusion

FIG = Path(__file__).with_name("figures")
FIG.mkdir(exist_ok=True)

# %%
model = linear_model(A=[[-1.0]], Sigma_x=[[1.0]], mean0=[0.0], cov0=[[0.5]])
obs = GaussianObsModel(LinearDrift([[1.0]]), [[1.0]])
grid = TimeGrid.from_horizon(5.0, 1e-3)
rng = np.random.default_rng(2)
_, x = simulate_jump_diffusion(model, grid, seed=rng)
dY = simulate_gaussian_obs(x, obs, grid, seed=rng)
init = GaussianBelief([0.0], [[0.5]])

kb_mean, kb_cov = run_kalman_bucy(-1.0, 1.0, 1.0, 1.0, dY, grid.dt, init)
ek_mean, _ = run_ekbf(model, obs, dY, grid.dt, init)
print("EKBF - KBF:", np.abs(ek_mean - kb_mean).max())

# %%
dens0 = GridDensity.from_pdf(norm(0, np.sqrt(0.5)).pdf, -5, 5, 400)
grid_run = run_grid_filter(kushner_step, dens0, model, obs, dY, grid.dt)
runs = {
    "BPF": run_bpf(model, obs, dY, grid.dt, 1000, seed=rng),
    "FBPF": run_fbpf(model, obs, dY, grid.dt, 1000, seed=rng),
    "EnKBF": run_enkbf(model, obs, [[1.0]], dY, grid.dt, 1000, seed=rng),
}
for name, r in runs.items():
    print(f"{name:6s} mean gap {np.abs(r.means[:, 0] - kb_mean[:, 0]).mean():.4f}")
print(f"grid   mean gap {np.abs(grid_run.means - kb_mean[:, 0]).mean():.2e}")

# %%
t = grid.times
fig, ax = plt.subplots(2, 1, figsize=(8, 6), sharex=True)
ax[0].plot(t, kb_mean[:, 0], "k", lw=1.5, label="Kalman-Bucy")
for name, r in runs.items():
    ax[0].plot(t, r.means[:, 0], lw=0.8, label=name)
ax[0].set_ylabel("posterior mean")
ax[0].legend(loc="upper right", ncol=4)
ax[1].plot(t, kb_cov[:, 0, 0], "k", lw=1.5, label="Riccati")
ax[1].plot(t, grid_run.variances, "--", label="grid")
ax[1].plot(t, runs["FBPF"].variances[:, 0], lw=0.8, label="FBPF")
ax[1].axhline(riccati_stationary_scalar(-1, 1, 1, 1), color="grey", ls=":")
ax[1].set_xlabel("t")
ax[1].set_ylabel("posterior variance")
ax[1].legend(loc="upper right")
fig.tight_layout()
fig.savefig(FIG / "linear_gaussian.png", dpi=120)
