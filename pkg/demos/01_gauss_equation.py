"""Curvature from the second fundamental form.

Builds the Gauss tensor of a few hypersurfaces, reads off sectional, Ricci
and scalar curvature, and checks the scalar identity on random data.
"""

import numpy as np

from subpinch import AmbientSpec, SecondFundamentalForm, gauss_curvature, scalar_curvature, sectional_curvature
from subpinch.tensors import min_ricci

# S^1(1/sqrt2) x S^2(1/sqrt2) in the unit 4-sphere: principal curvatures (1, -1, -1)
h = SecondFundamentalForm.diagonal([1.0, -1.0, -1.0])
R = gauss_curvature(h, AmbientSpec.space_form(1.0))
e = np.eye(3)
print("K(e1, e2) =", sectional_curvature(R, e[[0, 1]]))
print("K(e2, e3) =", sectional_curvature(R, e[[1, 2]]))
print("smallest Ricci curvature =", min_ricci(R))
print("scalar curvature =", scalar_curvature(R))

# scalar curvature equals n(n-1)c + n^2 H^2 - S for any h
rng = np.random.default_rng(1)
for n, p, c in [(3, 1, 1.0), (5, 2, 0.0), (7, 4, 2.5)]:
    X = rng.standard_normal((p, n, n))
    h = SecondFundamentalForm.symmetrized(X)
    R = gauss_curvature(h, AmbientSpec.space_form(c))
    print(f"n={n} p={p} c={c}: R = {scalar_curvature(R):.12f}, "
          f"formula = {n * (n - 1) * c + n * n * h.H**2 - h.S:.12f}")
