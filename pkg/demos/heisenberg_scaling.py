#!/usr/bin/env python3
"""Scaling of the total precision bound with the photon budget.

Sweeps the mean photon number N for a phase-matched two-mode squeezed
probe split evenly between squeezing and displacement, and fits the
log-log slope of the scalar bound tr(H^-1).  Heisenberg scaling shows up
as a slope of -2; the shot-noise alternative would be -1.
"""

import numpy as np

from gaussmet import ParamVector, ResourceBudget, scalar_bound_asymptotic
from gaussmet.probe_design import SweepSpec, run_sweep

grid = (10.0, 20.0, 50.0, 100.0, 200.0, 500.0, 1000.0)
spec = SweepSpec(
    probe_family="tmss",
    budget=ResourceBudget(n_s=1.0, n_c=1.0),  # overridden per N: n_s = n_c = N/2
    swept="N",
    grid=grid,
    fixed_params=ParamVector(0.0, 0.0, 0.0, np.pi / 4),
)
rows = run_sweep(spec)

print(f"{'N':>7}  {'tr(H^-1)':>12}  {'N^2 tr(H^-1)':>12}  {'large-N form':>12}")
for row in rows:
    asym = scalar_bound_asymptotic(row.value, np.pi / 4)
    print(
        f"{row.value:7.0f}  {row.scalar_bound:12.5e}  "
        f"{row.value**2 * row.scalar_bound:12.5f}  {row.value**2 * asym:12.5f}"
    )

slope = np.polyfit(np.log(grid), np.log([r.scalar_bound for r in rows]), 1)[0]
print(f"\nfitted log-log slope: {slope:+.4f}   (Heisenberg scaling: -2)")

# the mixing-angle dependence at a small fixed budget: pi/4 is optimal
omega_spec = SweepSpec(
    probe_family="tmss",
    budget=ResourceBudget(n_s=2.5, n_c=2.5),
    swept="omega",
    grid=tuple(np.linspace(0.15, np.pi / 2 - 0.15, 13)),
    fixed_params=ParamVector(0.0, 0.0, 0.0, 0.3),
)
omega_rows = run_sweep(omega_spec)
best = min(omega_rows, key=lambda r: r.scalar_bound)
print(f"\nomega sweep at N = 5: minimum tr(H^-1) = {best.scalar_bound:.4f} "
      f"at omega = {best.value:.4f} (pi/4 = {np.pi/4:.4f})")
