"""Searching over orthonormal frames.

The stable-current sum of S^1 x S^2 is maximized over bases of the tangent
space and compared with the threshold q(n-q)c; the four-frame curvature
quantity is minimized for the round 4-sphere and for a thin product.
"""

import numpy as np

from subpinch import max_lawson_simons, min_brendle, stable_current_condition
from subpinch.models import CliffordProduct, exact_h
from subpinch.pinching import eq17_lower_bound
from subpinch.tensors import CurvatureTensor, gauss_curvature

h, amb = exact_h(CliffordProduct(3, 1.0))
res = max_lawson_simons(h, 1)
print(f"largest stable-current sum found (q=1): {res.value:.10f}  [{res.bound} bound on the true max]")
for ch in stable_current_condition(h, amb.c):
    print(f"q={ch.q}: max {ch.max_found:.6f} vs threshold {ch.threshold:.1f} -> holds={ch.holds}")

res = min_brendle(CurvatureTensor.constant(4, 1.0))
print(f"\nunit S^4: min four-frame value {res.value:.10f} at lambda {res.lam:.2e}")

h, amb = exact_h(CliffordProduct(4, 0.1))
R = gauss_curvature(h, amb)
res = min_brendle(R)
bound = eq17_lower_bound(h.S, h.H, amb, res.lam, 4)
print(f"S^1 x S^3 (lam=0.1): search {res.value:.6f} (upper bound), analytic lower bound {float(bound):.6f}")
print("frame:\n", np.round(res.frame, 4))
