"""Discrete runs sampled from x0(a) = 10a track the continuum solution better as n grows."""
from opinionflow import ContinuumOptions, OpinionFunction, approximation_error, solve_continuum

T = 0.2
x0 = OpinionFunction.from_callable(lambda a: 10 * a, 512)
cont = solve_continuum(x0, T, ContinuumOptions(store="levels"))
for n in (50, 100, 200, 400, 800):
    r = approximation_error(x0, n, T, continuum=cont)
    print(f"n={n:4d}  sup error {r.max_error:.5f}  at t=0 {r.initial_error:.5f}  "
          f"bound {r.analytic_bound:.3g}  within={r.within_bound}")
