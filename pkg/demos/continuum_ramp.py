"""Continuum of agents with x0(a) = 10a: Picard segments, slope envelope, terminal plateaus."""
from pathlib import Path

import numpy as np

from opinionflow import ContinuumOptions, OpinionFunction, extract_continuum_clusters, solve_continuum
from opinionflow.svg import line_plot

x0 = OpinionFunction.from_callable(lambda a: 10 * a, 512)
traj = solve_continuum(x0, 120.0, ContinuumOptions(segment_policy="adaptive"))
d = traj.diagnostics
print(f"{d['segments']} segments ({d['rejected']} rejected), worst contraction {d['max_ratio']:.3f}, "
      f"slope-envelope violations {traj.bound_violations()}")

rep = extract_continuum_clusters(traj.terminal)
print("plateaus", np.round(rep.positions, 4).tolist())
print("weights ", np.round(rep.weights, 4).tolist())
print("separations", np.round(rep.separations, 4).tolist(), "->", rep.overall)
for note in rep.notes:
    print("note:", note)

keep = np.unique(np.geomspace(1, len(traj.states), 12).astype(int) - 1)
Y = np.array([traj.states[k](x0.grid) for k in keep])
svg = line_plot(x0.grid, Y, title="x_t(a) at increasing t", xlabel="a", ylabel="opinion", opacity=0.8)
Path(__file__).with_name("continuum_ramp.svg").write_text(svg)
