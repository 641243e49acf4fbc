"""Scalar pinching functionals and theorem hypotheses.

All ``check_*`` functions return a *slack*: the threshold minus the
quantity it must exceed, so a hypothesis of the form ``S < threshold`` holds
at a point iff the slack is positive.  Functions are vectorized over
``S``, ``H`` where that is natural.

Notation: ``n`` tangent dimension, ``S`` squared norm of the second
fundamental form, ``H`` mean curvature (a norm), ``c`` space-form
curvature, ``kmin``/``kmax`` ambient sectional curvature bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .tensors import AmbientSpec

SQRT2 = math.sqrt(2.0)
COROLLARY_3D_H = (2.0 / 3.0) * math.sqrt(SQRT2 - 1.0)


def _check_n(n):
    if int(n) != n or n < 2:
        raise ValueError("n must be an integer >= 2")


def quadratic_term(n, H):
    """``n^2 H^2 / (n - 1)``, the mean-curvature part of every threshold here."""
    H = np.asarray(H, dtype=float)
    return n * n * H * H / (n - 1)


def alpha(n, H, c):
    """``nc + n^3 H^2/(2(n-1)) - n(n-2)/(2(n-1)) sqrt(n^2 H^4 + 4(n-1) c H^2)``."""
    _check_n(n)
    H = np.asarray(H, dtype=float)
    if np.any(H < 0) or c < 0:
        raise ValueError("alpha needs H >= 0 and c >= 0")
    H2 = H * H
    rad = np.sqrt(n * n * H2 * H2 + 4 * (n - 1) * c * H2)
    out = n * c + n**3 * H2 / (2 * (n - 1)) - n * (n - 2) / (2 * (n - 1)) * rad
    return float(out) if out.ndim == 0 else out


def alpha_min_over_H(n, c) -> tuple[float, float]:
    """Minimize ``alpha(n, ., c)`` on ``[0, 10(1 + sqrt(c))]``.

    Bounded Brent search; the endpoint ``H = 0`` is compared explicitly
    since the minimum sits there when ``n = 2`` or ``c = 0``.
    """
    _check_n(n)
    if c < 0:
        raise ValueError("c must be >= 0")
    hi = 10.0 * (1.0 + math.sqrt(c))
    res = minimize_scalar(lambda H: alpha(n, H, c), bounds=(0.0, hi), method="bounded",
                          options={"xatol": 1e-10})
    H_star, val = float(res.x), float(res.fun)
    a0 = alpha(n, 0.0, c)
    if a0 <= val:
        return 0.0, a0
    return H_star, val


def lambda_values(S, H, n, c):
    """Pointwise ``S - n^2 H^2/(n-1) - 2c``."""
    return np.asarray(S, dtype=float) - quadratic_term(n, H) - 2.0 * c


def mu_values(R, H, n, c):
    """Pointwise ``R - n^2 (n-2) H^2/(n-1) - (n+1)(n-2) c``."""
    H = np.asarray(H, dtype=float)
    return np.asarray(R, dtype=float) - (n - 2) * quadratic_term(n, H) - (n + 1) * (n - 2) * c


def _points(points):
    arr = np.asarray(points, dtype=float)
    if arr.size == 0:
        raise ValueError("need at least one sample point")
    arr = np.atleast_2d(arr)
    if arr.shape[1] != 2:
        raise ValueError("points must be pairs")
    return arr[:, 0], arr[:, 1]


def lambda_pinch(points, n, c) -> float:
    """Sampled ``sup_M (S - n^2 H^2/(n-1) - 2c)`` over ``(S, H)`` pairs."""
    S, H = _points(points)
    return float(np.max(lambda_values(S, H, n, c)))


def mu_pinch(points, n, c) -> float:
    """Sampled ``inf_M (R - n^2(n-2) H^2/(n-1) - (n+1)(n-2) c)`` over ``(R, H)`` pairs."""
    R, H = _points(points)
    return float(np.min(mu_values(R, H, n, c)))


@dataclass(frozen=True)
class EmbeddingSample:
    """Sampled scalar curvature and mean curvature of one isometric embedding."""

    n: int
    c: float
    R: tuple
    H: tuple

    def mu(self) -> float:
        return mu_pinch(np.column_stack([self.R, self.H]), self.n, self.c)


@dataclass(frozen=True)
class InvariantCertificate:
    value: float  # max over supplied embeddings of mu
    best_index: int
    euclidean_only: bool  # then also a lower bound for the Euclidean-only invariant

    def to_dict(self) -> dict:
        return {"value": self.value, "best_index": self.best_index,
                "euclidean_only": self.euclidean_only, "kind": "lower bound"}


def invariant_certificate(embeddings) -> InvariantCertificate:
    """Lower-bound certificate for the sup of ``mu`` over all isometric embeddings.

    Only the supplied embeddings are seen, so the result bounds the
    invariant from below and is never the invariant itself.
    """
    embeddings = list(embeddings)
    if not embeddings:
        raise ValueError("need at least one embedding")
    mus = [e.mu() for e in embeddings]
    k = int(np.argmax(mus))
    return InvariantCertificate(float(mus[k]), k, all(e.c == 0 for e in embeddings))


def ambient_term(amb: AmbientSpec) -> float:
    """``(8/3)(kmin - kmax/4)``; equals ``2c`` in a space form."""
    if amb.is_space_form:
        return 2.0 * amb.c
    return 8.0 / 3.0 * (amb.kmin - 0.25 * amb.kmax)


def check_theorem_1_1(S, H, amb: AmbientSpec, n):
    """Slack of ``S < (8/3)(kmin - kmax/4) + n^2 H^2/(n-1)``."""
    return ambient_term(amb) + quadratic_term(n, H) - np.asarray(S, dtype=float)


def check_lemma_4_2(S, H, amb: AmbientSpec, n):
    """Slack of ``S < 2 kmin + n^2 H^2/(n-1)`` (compactness via positive curvature)."""
    return 2.0 * amb.kmin + quadratic_term(n, H) - np.asarray(S, dtype=float)


def check_theorem_4_3(S, H, c, n):
    """Slack of ``S < 2c + n^2 H^2/(n-1)``; the sup of its negative is ``lambda(M)``."""
    return 2.0 * c + quadratic_term(n, H) - np.asarray(S, dtype=float)


def check_theorem_3_1(S, H, c):
    """Slack of ``S < 2c + (9/2) H^2`` for three-dimensional submanifolds."""
    H = np.asarray(H, dtype=float)
    return 2.0 * c + 4.5 * H * H - np.asarray(S, dtype=float)


def check_theorem_B(S, H, c, n):
    """Slack ``alpha(n, H, c) - S``."""
    return alpha(n, np.asarray(H, dtype=float), c) - np.asarray(S, dtype=float)


def check_theorem_C(S, H, c, n):
    """Slack of the hypersurface condition ``S < 2c + n^2 H^2/(n-1)`` (needs c > 0)."""
    return check_theorem_4_3(S, H, c, n)


def theorem_D_thresholds(n, c) -> tuple[float | None, float | None]:
    """Thresholds on ``sup S`` for the two dimension ranges (None if not applicable)."""
    t1 = 2.0 * math.sqrt(n - 1) * c if 4 <= n <= 6 else None
    t2 = 2.0 * SQRT2 * c if n >= 7 else None
    return t1, t2


def check_theorem_D(S, c, n) -> tuple[bool, bool]:
    """``(case_i, case_ii)``: each True iff its dimension range applies and ``S`` is below it."""
    S = float(np.max(S))
    t1, t2 = theorem_D_thresholds(n, c)
    case_i = t1 is not None and c > 0 and S < t1
    case_ii = t2 is not None and c > 0 and S < t2
    return case_i, case_ii


def check_corollary_3_1(S, H) -> bool:
    """In the unit sphere: ``H >= (2/3) sqrt(sqrt2 - 1)`` and ``S < 2 sqrt2``."""
    return bool(H >= COROLLARY_3D_H and S < 2.0 * SQRT2)


def ricci_lower_bound_3d(S, H, c, tol: float = 1e-12):
    """Lower bound ``(2/3)[3c + 6H^2 - S - (3/sqrt6) H sqrt(S - 3H^2)]`` on Ricci curvature.

    Valid for three-dimensional submanifolds of a space form; ``S >= 3H^2``
    always holds there, so a larger deficit means inconsistent input.
    """
    S = np.asarray(S, dtype=float)
    H = np.asarray(H, dtype=float)
    gap = S - 3.0 * H * H
    if np.any(gap < -tol * np.maximum(1.0, S)):
        raise ValueError("inconsistent input: S < 3 H^2")
    gap = np.maximum(gap, 0.0)
    out = (2.0 / 3.0) * (3.0 * c + 6.0 * H * H - S - 3.0 / math.sqrt(6.0) * H * np.sqrt(gap))
    return float(out) if out.ndim == 0 else out


def eq17_lower_bound(S, H, amb: AmbientSpec, lam, n):
    """Lower bound ``(1 + lam^2)[(8/3)(kmin - kmax/4) + n^2 H^2/(n-1) - S]`` on the four-frame quantity."""
    lam = np.asarray(lam, dtype=float)
    if np.any(np.abs(lam) > 1.0):
        raise ValueError("lambda must lie in [-1, 1]")
    return (1.0 + lam * lam) * check_theorem_1_1(S, H, amb, n)
