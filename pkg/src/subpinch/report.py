"""Assemble pinching reports from sampled pointwise data.

A report evaluates every theorem hypothesis on the samples of one
submanifold.  ``sup_M``/``inf_M`` are replaced by extrema over the samples
and labelled as such; each theorem entry carries the worst-point slack
(positive means the hypothesis holds there), a status string and the index
of the worst sample.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import pinching as pf
from .frames import DEFAULT_RESTARTS, min_brendle, stable_current_condition
from .tensors import AmbientSpec, SecondFundamentalForm, gauss_curvature, min_ricci, scalar_curvature

SCHEMA_ID = "subpinch.report/1"
EXTREMUM_LABEL = "sampled extremum"
BOUNDARY_TOL = 1e-12


@dataclass
class SampleSet:
    """Pointwise data of one submanifold: full ``h`` where known, else only ``(S, H)``."""

    name: str
    source: str  # "model", "immersion" or "data"
    n: int
    ambient: AmbientSpec
    S: np.ndarray
    H: np.ndarray
    h: list | None = None
    p: int | None = None
    u: list | None = None
    grid: int | None = None
    params: dict = field(default_factory=dict)

    @classmethod
    def from_forms(cls, name, source, forms, ambient, u=None, grid=None, params=None):
        forms = list(forms)
        return cls(name, source, forms[0].n, ambient,
                   np.array([f.S for f in forms]), np.array([f.H for f in forms]),
                   h=forms, p=forms[0].p, u=u, grid=grid, params=params or {})

    @classmethod
    def from_values(cls, name, n, ambient, S, H, p=None, params=None):
        S = np.atleast_1d(np.asarray(S, dtype=float))
        H = np.atleast_1d(np.asarray(H, dtype=float))
        if S.shape != H.shape or S.size == 0:
            raise ValueError("S and H must be equal-length, non-empty")
        if np.any(S < 0) or np.any(H < 0):
            raise ValueError("S and H must be non-negative")
        return cls(name, "data", int(n), ambient, S, H, p=p, params=params or {})


def _f(x):
    if x is None:
        return None
    x = float(x)
    return x if math.isfinite(x) else None


def _entry(applicable, slack=None, condition="", scale=1.0, extra=None):
    if not applicable:
        d = {"applicable": False, "margin": None, "holds": None, "status": "not applicable",
             "worst_point": None, "condition": condition}
    else:
        slack = np.atleast_1d(np.asarray(slack, dtype=float))
        k = int(np.argmin(slack))
        m = float(slack[k])
        if abs(m) <= BOUNDARY_TOL * max(1.0, scale):
            status = "fails (boundary case)"
            holds = False
        else:
            holds = m > 0
            status = "holds" if holds else "fails"
        d = {"applicable": True, "margin": _f(m), "holds": holds, "status": status,
             "worst_point": k, "condition": condition}
    if extra:
        d.update(extra)
    return d


def _theorems(s: SampleSet) -> dict:
    n, amb, S, H = s.n, s.ambient, s.S, s.H
    sf = amb.is_space_form
    c = amb.kmin if sf else None
    scale = float(np.max(S)) if S.size else 1.0
    out = {}
    out["lemma_4_2"] = _entry(True, pf.check_lemma_4_2(S, H, amb, n),
                              "sup(S - 2 kmin - n^2 H^2/(n-1)) < 0", scale)
    out["theorem_1_1"] = _entry(True, pf.check_theorem_1_1(S, H, amb, n),
                                "S < (8/3)(kmin - kmax/4) + n^2 H^2/(n-1)", scale)
    t12 = None if not sf else pf.check_theorem_4_3(S, H, c, n)
    out["theorem_1_2"] = _entry(sf, t12, "lambda(M) = sup(S - n^2 H^2/(n-1) - 2c) < 0", scale,
                                {"lambda_M": None if not sf else _f(np.max(pf.lambda_values(S, H, n, c)))})
    out["theorem_3_1"] = _entry(sf and n == 3, None if not sf else pf.check_theorem_3_1(S, H, c),
                                "S < 2c + (9/2) H^2 (n = 3)", scale)
    out["theorem_4_1"] = _entry(n >= 4, pf.check_theorem_1_1(S, H, amb, n),
                                "sup(S - (8/3)(kmin - kmax/4) - n^2 H^2/(n-1)) < 0 (n >= 4)", scale)
    out["theorem_4_2"] = _entry(sf and n >= 4, None if not sf else pf.check_theorem_4_3(S, H, c, n),
                                "sup(S - n^2 H^2/(n-1)) < 2c (n >= 4)", scale)
    out["theorem_4_3"] = _entry(sf, None if not sf else pf.check_theorem_4_3(S, H, c, n),
                                "S < 2c + n^2 H^2/(n-1)", scale)
    out["theorem_4_4"] = _entry(n % 2 == 0, pf.check_theorem_1_1(S, H, amb, n),
                                "S < (8/3)(kmin - kmax/4) + n^2 H^2/(n-1) (n even)", scale)
    out["theorem_B"] = _entry(sf and n >= 4, None if not sf else pf.check_theorem_B(S, H, c, n),
                              "sup(S - alpha(n, H, c)) < 0 (n >= 4)", scale)
    out["theorem_C"] = _entry(sf and s.p == 1 and c is not None and c > 0,
                              None if not sf else pf.check_theorem_C(S, H, c, n),
                              "S < 2c + n^2 H^2/(n-1) (hypersurface, c > 0)", scale)
    t1, t2 = pf.theorem_D_thresholds(n, c) if sf else (None, None)
    thr = t1 if t1 is not None else t2
    out["theorem_D"] = _entry(sf and c > 0 and thr is not None, None if thr is None else thr - S,
                              "sup S < 2 sqrt(n-1) c (4 <= n <= 6) or S < 2 sqrt2 c (n >= 7)", scale,
                              {"threshold": _f(thr)})
    cor = sf and n == 3 and c == 1.0
    out["corollary_3_1"] = _entry(cor, 2.0 * pf.SQRT2 - S, "H >= (2/3) sqrt(sqrt2 - 1) and S < 2 sqrt2 (unit sphere, n = 3)",
                                  scale, {"H_condition": bool(np.all(H >= pf.COROLLARY_3D_H)) if cor else None})
    if cor and not out["corollary_3_1"]["H_condition"]:
        out["corollary_3_1"]["holds"] = False
        out["corollary_3_1"]["status"] = "fails (H below threshold)"
    return out


def analyze_samples(s: SampleSet, budget: int = DEFAULT_RESTARTS, seed: int = 0, step=None) -> dict:
    """Evaluate all functionals and hypotheses on ``s`` and return a report dict."""
    n, amb = s.n, s.ambient
    sf = amb.is_space_form
    lam_vals = pf.lambda_values(s.S, s.H, n, amb.kmin) if sf else None
    report = {
        "schema": SCHEMA_ID,
        "metadata": {
            "id": s.name,
            "source": s.source,
            "n": n,
            "p": s.p,
            "ambient": amb.to_dict(),
            "points": int(s.S.size),
            "grid": s.grid,
            "params": s.params,
            "seed": seed,
            "budget": budget,
            "step": step,
            "extremum_label": EXTREMUM_LABEL,
        },
        "extrema": {
            "S": {"min": _f(s.S.min()), "max": _f(s.S.max())},
            "H": {"min": _f(s.H.min()), "max": _f(s.H.max())},
        },
        "lambda_M": _f(lam_vals.max()) if sf else None,
        "mu_M": None,
        "theorems": _theorems(s),
        "ricci_3d": None,
        "stable_currents": None,
        "four_frame": None,
    }
    worst = int(np.argmax(lam_vals)) if sf else int(np.argmin(pf.check_theorem_1_1(s.S, s.H, amb, n)))
    report["metadata"]["worst_point_u"] = None if s.u is None else [float(x) for x in s.u[worst]]

    if sf and s.h is not None:
        tensors = [gauss_curvature(h, amb) for h in s.h]
        Rs = np.array([scalar_curvature(R) for R in tensors])
        report["mu_M"] = _f(pf.mu_pinch(np.column_stack([Rs, s.H]), n, amb.c))
        report["extrema"]["scalar_curvature"] = {"min": _f(Rs.min()), "max": _f(Rs.max())}
        if n == 3:
            bounds = pf.ricci_lower_bound_3d(s.S, s.H, amb.c)
            rics = np.array([min_ricci(R) for R in tensors])
            gap = rics - np.atleast_1d(bounds)
            report["ricci_3d"] = {
                "lower_bound_min": _f(np.min(bounds)),
                "ricci_min": _f(rics.min()),
                "min_gap": _f(gap.min()),
                "consistent": bool(gap.min() >= -1e-8),
                "bound_positive": bool(np.min(bounds) > 0),
            }
        if budget > 0:
            checks = stable_current_condition(s.h[worst], amb.c, budget, seed)
            report["stable_currents"] = {
                "point": worst,
                "checks": [ch.to_dict() for ch in checks],
                "holds": all(ch.holds for ch in checks),
                "kind": "heuristic maximum (lower bound on the true max)",
            }
            if n >= 4:
                res = min_brendle(tensors[worst], budget, seed)
                report["four_frame"] = _four_frame(s, worst, res)
    else:
        if sf:
            # no tensor available; the Gauss equation fixes R = n(n-1)c + n^2 H^2 - S
            report["mu_M"] = _f(-report["lambda_M"])
        if n >= 4:
            report["four_frame"] = _four_frame(s, worst, None)
    return report


def _four_frame(s: SampleSet, k: int, res) -> dict:
    X = float(pf.check_theorem_1_1(s.S[k], s.H[k], s.ambient, s.n))
    lower = X if X >= 0 else 2.0 * X  # min over lam in [-1, 1] of (1 + lam^2) X
    d = {
        "point": k,
        "analytic_lower_bound": _f(lower),
        "search_upper_bound": None if res is None else _f(res.value),
        "search_lambda": None if res is None else _f(res.lam),
        "certified_positive": bool(lower > 0),
    }
    if res is not None:
        d["consistent"] = bool(res.value >= lower - 1e-9 * max(1.0, abs(lower)))
    return d


def samples_from_model(model, numeric: bool = False, grid: int = 5, step=None) -> SampleSet:
    from .immersion import sample_manifold
    from .models import as_immersion, exact_h

    name = f"{model.kind}{model.params()}"
    if not numeric:
        h, amb = exact_h(model)
        return SampleSet.from_forms(name, "model", [h], amb, params=model.params())
    spec = as_immersion(model, grid)
    pts = sample_manifold(spec, step)
    return SampleSet.from_forms(name, "immersion", [pt.h for pt in pts], spec.ambient,
                                u=[pt.u for pt in pts], grid=grid, params=model.params())


def samples_from_immersion(spec, step=None) -> SampleSet:
    from .immersion import sample_manifold

    pts = sample_manifold(spec, step)
    return SampleSet.from_forms(spec.name, "immersion", [pt.h for pt in pts], spec.ambient,
                                u=[pt.u for pt in pts], grid=spec.grid)


def samples_from_forms(name: str, forms, ambient: AmbientSpec) -> SampleSet:
    forms = [f if isinstance(f, SecondFundamentalForm) else SecondFundamentalForm(f) for f in forms]
    return SampleSet.from_forms(name, "data", forms, ambient)
