"""
Decoding a hidden signal from spike trains
==========================================

Two sensors with Gaussian tuning curves centred at ``-1`` and ``+1`` fire as
Poisson processes whose rates depend on the double-well signal.  Between
spikes the posterior drifts under the prior and is pushed away from the
tuning centres; at a spike it collapses onto the firing sensor's
preferred value.

The second half uses an exponential tuning curve, for which the variance
update of the Gaussian filters does not react to individual spikes.
"""

# %%
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
from scipy.stats import norm

from ctfilters.core_model import (
    ExponentialRate,
    GaussianBumpRate,
    GaussianInitial,
    JumpDiffusionModel,
    LinearDrift,
    PointProcessObsModel,
    double_well_model,
)
from ctfilters.exact_filters import GaussianBelief
from ctfilters.gaussian_approx import GaussianClosure, run_adf_pp, run_pp_ekbf
from ctfilters.particle import run_bpf
from ctfilters.pde_oracle import GridDensity, pp_kushner_step, run_grid_filter
from ctfilters.simulate import TimeGrid, simulate_jump_diffusion, simulate_pp_obs

FIG = Path(__file__).with_name("figures")
FIG.mkdir(exist_ok=True)

# %%
model = double_well_model()
sensors = PointProcessObsModel(GaussianBumpRate([50.0, 50.0], [0.05, 0.05], [[-1.0], [1.0]]), 2)
grid = TimeGrid.from_horizon(5.0, 1e-3)
rng = np.random.default_rng(14)
_, x = simulate_jump_diffusion(model, grid, seed=rng)
spikes = simulate_pp_obs(x, sensors, grid, seed=rng)
print("spikes per sensor:", spikes.sum(axis=0))

# %%
init = GridDensity.from_pdf(norm(0, 1).pdf, -3.5, 3.5, 700)
ref = run_grid_filter(pp_kushner_step, init, model, sensors, spikes, grid.dt)
bpf = run_bpf(model, sensors, spikes, grid.dt, 5000, seed=rng)
adf_mean, adf_cov = run_adf_pp(model, sensors, GaussianClosure(), spikes, grid.dt, GaussianBelief([0.0], [[1.0]]))

# %%
t = grid.times
fig, ax = plt.subplots(figsize=(9, 4))
ax.plot(t, x[:, 0], "k", lw=0.6, alpha=0.5, label="signal")
ax.plot(t, ref.means, lw=1.2, label="grid")
ax.plot(t, bpf.means[:, 0], lw=0.8, label="BPF")
ax.plot(t, adf_mean[:, 0], lw=0.8, label="ADF")
for j, c in enumerate(("C3", "C2")):
    ax.plot(t[spikes[:, j] > 0], np.full((spikes[:, j] > 0).sum(), 2.2 + 0.2 * j), "|", color=c)
ax.set_xlabel("t")
ax.set_ylabel("posterior mean")
ax.legend(loc="lower right", ncol=4)
fig.tight_layout()
fig.savefig(FIG / "spike_decoding.png", dpi=120)

# %% [markdown]
# Exponential tuning: ``h(x) = 2 exp(x / 2)`` on an Ornstein-Uhlenbeck
# signal.  The event term of the variance update cancels, so the variance
# path only moves through the continuous part of the update.

# %%
ou = JumpDiffusionModel(1, LinearDrift([[-1.0]]), [[1.0]], GaussianInitial([0.0], [[0.5]]))
neuron = PointProcessObsModel(ExponentialRate(2.0, [[0.5]]), 1)
g = TimeGrid.from_horizon(5.0, 1e-3)
_, z = simulate_jump_diffusion(ou, g, seed=3)
dN = simulate_pp_obs(z, neuron, g, seed=4)
m_ek, c_ek = run_pp_ekbf(ou, neuron, dN, g.dt, GaussianBelief([0.0], [[0.5]]))
m_adf, c_adf = run_adf_pp(ou, neuron, GaussianClosure(), dN, g.dt, GaussianBelief([0.0], [[0.5]]))
spike_steps = np.flatnonzero(dN[:, 0])
jumps = np.abs(np.diff(c_adf[:, 0, 0]))[spike_steps[spike_steps < g.n_steps - 1]]
print("largest variance change at a spike step:", jumps.max())

fig, ax = plt.subplots(figsize=(8, 3))
ax.plot(g.times, c_ek[:, 0, 0], label="PP-EKBF")
ax.plot(g.times, c_adf[:, 0, 0], label="ADF")
ax.set_xlabel("t")
ax.set_ylabel("posterior variance")
ax.legend()
fig.tight_layout()
fig.savefig(FIG / "exponential_variance.png", dpi=120)
