"""Curvature invariants and pinching checks for submanifolds of space forms."""

from .frames import (
    SearchResult,
    brendle_quantity,
    lawson_simons_quantity,
    max_lawson_simons,
    min_brendle,
    rotate_h,
    stable_current_condition,
)
from .immersion import ImmersionSpec, PointData, adapted_frames, jet2, sample_manifold, second_fundamental_form_at
from .models import CliffordProduct, RoundSphere, SphericalCylinder, as_immersion, exact_h, sharpness_certificate
from .pinching import (
    alpha,
    alpha_min_over_H,
    check_theorem_1_1,
    check_theorem_3_1,
    check_theorem_B,
    check_theorem_D,
    eq17_lower_bound,
    invariant_certificate,
    lambda_pinch,
    mu_pinch,
    ricci_lower_bound_3d,
)
from .tensors import (
    AmbientSpec,
    CurvatureTensor,
    SecondFundamentalForm,
    gauss_curvature,
    mean_curvature_H,
    ricci_curvature,
    scalar_curvature,
    sectional_curvature,
    squared_norm_S,
)

__version__ = "0.1.0"
