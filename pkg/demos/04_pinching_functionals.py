"""The scalar functionals behind the different pinching hypotheses.

Tabulates alpha(n, H, c) against the simpler threshold 2c + n^2 H^2/(n-1),
finds the minimum of alpha over H, and evaluates the dimension-three Ricci
lower bound.
"""

import math

import numpy as np

from subpinch import alpha, alpha_min_over_H, ricci_lower_bound_3d
from subpinch.pinching import quadratic_term, theorem_D_thresholds

H = np.linspace(0, 3, 7)
for n in (4, 6):
    print(f"n={n}, c=1")
    print("   H    alpha   2c+n^2H^2/(n-1)")
    for x, a in zip(H, alpha(n, H, 1.0)):
        print(f"{x:5.2f} {a:8.4f} {2 + float(quadratic_term(n, x)):8.4f}")

for n in (2, 4, 5, 10):
    H_star, val = alpha_min_over_H(n, 1.0)
    print(f"n={n}: min alpha = {val:.10f} at H = {H_star:.6f}; 2 sqrt(n-1) = {2 * math.sqrt(n - 1):.10f}")

for n in (4, 6, 7, 12):
    print(f"n={n}: sup S thresholds {theorem_D_thresholds(n, 1.0)}")

print("Ricci lower bound, unit 3-sphere:", ricci_lower_bound_3d(0.0, 0.0, 1.0))
print("Ricci lower bound, S^1 x S^2:", ricci_lower_bound_3d(3.0, 1 / 3, 1.0))
