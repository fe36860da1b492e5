"""1000 agents drawn uniformly on [0, 10] settle into a handful of clusters about 2 apart.

Writes four_clusters.svg next to this script and prints the cluster report.
"""
from pathlib import Path

import numpy as np

from opinionflow import SimOptions, canonicalize, cluster_report, simulate
from opinionflow.svg import line_plot

rng = np.random.default_rng(42)
state, _ = canonicalize(rng.uniform(0, 10, 1000))
traj = simulate(state, SimOptions(sample_interval=0.005), sample_times=np.linspace(0, 10, 2001))

rep = cluster_report(traj.terminal)
print(f"converged={traj.converged} at t={traj.terminal.time:.3f} after {len(traj.events)} graph changes")
for c in rep.clusters:
    print(f"  cluster at {c.position:8.4f}  weight {c.weight:5.0f}")
print("separations", np.round(rep.separations, 4).tolist(), "->", rep.overall)

k = np.searchsorted(traj.times, 10.0, side="right")
svg = line_plot(traj.times[:k], traj.opinions[:k].T, title="1000 agents, uniform on [0, 10]",
                xlabel="t", ylabel="opinion", opacity=0.15)
Path(__file__).with_name("four_clusters.svg").write_text(svg)
