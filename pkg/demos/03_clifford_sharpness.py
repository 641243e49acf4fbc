"""How far the pinching constant can be pushed.

For the product S^1 x S^{n-1} in the unit sphere the overshoot
S - n^2 H^2/(n-1) - 2 equals (n-2)/(n-1) lam^2, so it can be made as small
as wanted while the manifold stays a non-sphere.  Cylinders sit exactly on
the boundary.
"""

from subpinch import sharpness_certificate
from subpinch.models import CliffordProduct, SphericalCylinder, exact_h
from subpinch.pinching import lambda_values

print(" n    lam     overshoot   (n-2)/(n-1) lam^2")
for n in (2, 3, 5, 8):
    for lam in (0.25, 1.0, 4.0):
        h, amb = exact_h(CliffordProduct(n, lam))
        print(f"{n:2d} {lam:6.2f} {float(lambda_values(h.S, h.H, n, amb.c)):12.6f} {(n - 2) / (n - 1) * lam**2:12.6f}")

for eps in (0.5, 1e-2, 1e-6):
    cert = sharpness_certificate(4, eps)
    print(f"eps={eps:g}: lam={cert.lam:.6g}, overshoot={cert.margin:.6g}, in (0, eps): {cert.positive and cert.below_eps}")

for n in (2, 4, 8):
    h, amb = exact_h(SphericalCylinder(n, 1.0))
    print(f"cylinder n={n}: lambda = {float(lambda_values(h.S, h.H, n, amb.c)):.2e}")
