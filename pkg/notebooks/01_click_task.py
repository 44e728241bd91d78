"""
Two-speaker click task
======================

A hidden two-state environment switches at hazard rate ``a``.  In state 1
the left speaker clicks at ``r_plus`` and the right one at ``r_minus``; in
state 2 the roles swap.  The optimal observer tracks the log-odds of the
two states, which jumps by ``log(r_plus / r_minus)`` at every click and
relaxes toward zero in between.

Run as a script (``python notebooks/01_click_task.py``) or cell by cell.
"""

# %%
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from ctfilters.core_model import MarkovChainModel, PointProcessObsModel
from ctfilters.exact_filters import run_log_odds, run_pp_finite_state
from ctfilters.simulate import TimeGrid, simulate_markov_chain, simulate_pp_obs, table_rates

FIG = Path(__file__).with_name("figures")
FIG.mkdir(exist_ok=True)

# %% [markdown]
# Simulate the environment and the two click trains on a fine grid.

# %%
a, r_plus, r_minus = 1.0, 30.0, 10.0
chain = MarkovChainModel.symmetric_two_state(a)
rates = [[r_plus, r_minus], [r_minus, r_plus]]
grid = TimeGrid.from_horizon(4.0, 1e-4)
_, states = simulate_markov_chain(chain, grid, seed=1)
clicks = simulate_pp_obs(states, PointProcessObsModel(table_rates(rates), 2), grid, seed=2)
print("clicks per speaker:", clicks.sum(axis=0))

# %% [markdown]
# The scalar log-odds recursion and the two-state probability filter see
# the same clicks; their log-odds agree to rounding.

# %%
alpha = run_log_odds(a, r_plus, r_minus, clicks, grid.dt)
probs = run_pp_finite_state(chain, rates, clicks, grid.dt)
alpha_from_probs = np.log(probs[:, 0] / probs[:, 1])
print("max |difference|:", np.abs(alpha - alpha_from_probs).max())

# %%
t = grid.times
fig, ax = plt.subplots(2, 1, figsize=(8, 5), sharex=True)
ax[0].plot(t, alpha, lw=1.5, label="log-odds recursion")
ax[0].plot(t, alpha_from_probs, "--", lw=1, label="from state probabilities")
ax[0].set_ylabel("log-odds")
ax[0].legend(loc="upper right")
ax[1].fill_between(t, 0, states == 0, step="post", alpha=0.3, label="state 1")
ax[1].eventplot([t[clicks[:, 0] > 0], t[clicks[:, 1] > 0]], lineoffsets=[0.75, 0.25], linelengths=0.2)
ax[1].set_xlabel("t")
ax[1].set_yticks([])
fig.tight_layout()
fig.savefig(FIG / "click_task.png", dpi=120)

# %% [markdown]
# Decision accuracy at ``t = 1`` rises with the contrast ``r_plus / r_minus``.

# %%
for ratio in (1.5, 3.0, 10.0):
    rr = [[10 * ratio, 10.0], [10.0, 10 * ratio]]
    g = TimeGrid.from_horizon(1.0, 1e-3)
    correct = 0
    for seed in range(300):
        _, s = simulate_markov_chain(chain, g, seed=seed)
        dN = simulate_pp_obs(s, PointProcessObsModel(table_rates(rr), 2), g, seed=10_000 + seed)
        al = run_log_odds(a, rr[0][0], rr[0][1], dN, g.dt)
        correct += int((al[-1] < 0) == (s[-1] == 1))
    print(f"r_plus / r_minus = {ratio:4.1f}: accuracy {correct / 300:.3f}")
