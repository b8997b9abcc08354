"""Mesh growth and extremal bounds under the trigonometric difference operator.

Applies T_{theta,h}(P) = (e^{i theta} P(x+ih) - e^{-i theta} P(x-ih)) / i
to a random real-rooted polynomial over a range of step sizes h and tabulates
how the minimal root gap (the mesh) grows, how the extreme roots drift, and
how both compare to the closed-form cotangent grid that governs them.
"""

import math

import numpy as np

from fdzeros import (
    DeBruijnOp,
    apply_tb,
    extremal_bounds,
    from_roots,
    mesh_floor,
    qn_zeros,
    roots,
    simplicity_margin,
)

rng = np.random.default_rng(7)
n = 6
rs = np.sort(rng.uniform(-4, 4, size=n))
p = from_roots(rs)
theta = 0.9

print("input roots:", np.round(rs, 4))
print("input mesh :", round(float(np.min(np.diff(rs))), 4))
print("cotangent grid (theta=%.2f): %s" % (theta, np.round(qn_zeros(n, theta).zeros, 4)))
print()
print(f"{'h':>6} {'mesh(T P)':>10} {'floor':>8} {'margin':>9} {'min root':>9} {'max root':>9}")

for h in (0.25, 0.5, 1.0, 2.0, 4.0):
    image = apply_tb(DeBruijnOp(theta, h), p)
    xs = np.sort([r.real for r in roots(image).roots])
    floor = mesh_floor(n, theta, h)
    margin = simplicity_margin(p, theta, h)
    print(f"{h:6.2f} {np.min(np.diff(xs)):10.4f} {floor:8.4f} "
          f"{margin:9.4f} {xs[0]:9.4f} {xs[-1]:9.4f}")

# the extremes are pinned inside [mu(P) + h*min grid, lambda(P) + h*max grid]
h = 2.0
b = extremal_bounds(p, theta, h)
print("\nextremal bounds at h=2:", {k: round(v, 4) for k, v in b.items()})
xs = np.sort([r.real for r in roots(apply_tb(DeBruijnOp(theta, h), p)).roots])
print("image extremes        :", round(float(xs[0]), 4), "to", round(float(xs[-1]), 4))
