"""How image roots drift as the step size h grows.

For large h the roots of T_{theta,h}(P) track the scaled cotangent grid plus
correction terms in powers of 1/h.  This script sweeps h on a benchmark cubic
and prints the residual between actual and predicted roots at expansion
orders 0, 1 and 2, showing the successive decay rates.
"""

import sys

import numpy as np

from fdzeros import make_poly, report_summary, residual_sweep, report_to_csv, sweep_h_floor

p = make_poly([5, -1, 2, 1])  # x^3 + 2x^2 - x + 5
theta = 0.7
floor = sweep_h_floor(p)
h_min, h_max = max(20.0, floor), 500.0

print(f"benchmark cubic, theta = {theta}, h in [{h_min:.1f}, {h_max:.1f}]")
for order in (0, 1, 2):
    rep = residual_sweep(p, theta, h_min, h_max, 12, order)
    s = report_summary(rep)
    print(f"order {order}: fitted decay = {s['fitted_decay']:+.3f}, "
          f"max residual = {s['max_residual']:.3e}, "
          f"omega bound ok = {s['omega_bound_ok']}")

# full per-root table for the order-1 sweep, CSV on stdout
print("\norder-1 residual table:")
report_to_csv(residual_sweep(p, theta, h_min, h_max, 6, 1), sys.stdout)

# sanity: at theta = pi/2 the quadratic x^2 + 1 has exact roots
# +-sqrt(h^2 - 1) while order 1 predicts +-(h - 1/(2h)); the gap is ~1/(8h^3)
rep = residual_sweep(make_poly([1, 0, 1]), np.pi / 2, 50.0, 800.0, 8, 1)
print("\nx^2 + 1 check (residual * 8h^3 should hover near 1):")
print(np.round([r.residual * 8 * r.h ** 3 for r in rep.records], 4))
