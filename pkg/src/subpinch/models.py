"""Closed-form model submanifolds used as ground truth.

* ``RoundSphere(n, r)``: ``S^n(r)`` in ``R^{n+1}``, umbilic with ``h = I/r``.
* ``SphericalCylinder(n, H0)``: ``S^{n-1}((n-1)/(n H0)) x R`` in ``R^{n+1}``.
* ``CliffordProduct(n, lam)``: ``S^1(1/sqrt(1+lam^2)) x S^{n-1}(lam/sqrt(1+lam^2))``
  in the unit sphere ``S^{n+1}``, principal curvatures ``lam`` (once) and
  ``-1/lam`` (``n-1`` times).

The cylinder sits exactly on the boundary ``S = n^2 H^2/(n-1)`` of the
pinching condition in Euclidean space, and the Clifford family overshoots
``S < 2 + n^2 H^2/(n-1)`` by ``(n-2)/(n-1) lam^2``, which is arbitrarily small.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .immersion import ImmersionSpec
from .tensors import AmbientSpec, SecondFundamentalForm

_POLE_MARGIN = 0.3


@dataclass(frozen=True)
class RoundSphere:
    n: int
    r: float = 1.0
    kind = "round_sphere"

    def __post_init__(self):
        _check_n(self.n)
        if not self.r > 0:
            raise ValueError("radius must be positive")

    def params(self) -> dict:
        return {"n": self.n, "r": self.r}


@dataclass(frozen=True)
class SphericalCylinder:
    n: int
    H0: float = 1.0
    kind = "cylinder"

    def __post_init__(self):
        _check_n(self.n)
        if not self.H0 > 0:
            raise ValueError("H0 must be positive")

    @property
    def radius(self) -> float:
        return (self.n - 1) / (self.n * self.H0)

    def params(self) -> dict:
        return {"n": self.n, "H0": self.H0}


@dataclass(frozen=True)
class CliffordProduct:
    n: int
    lam: float = 1.0
    kind = "clifford"

    def __post_init__(self):
        _check_n(self.n)
        if not self.lam > 0:
            raise ValueError("lambda must be positive")

    @property
    def radii(self) -> tuple[float, float]:
        s = math.sqrt(1.0 + self.lam**2)
        return 1.0 / s, self.lam / s

    def params(self) -> dict:
        return {"n": self.n, "lambda": self.lam}


MODELS = {cls.kind: cls for cls in (RoundSphere, SphericalCylinder, CliffordProduct)}


def _check_n(n):
    if int(n) != n or n < 2:
        raise ValueError("n must be an integer >= 2")


def model_from_dict(d: dict):
    """Build a model from ``{"model": kind, ...params}``."""
    kind = d.get("model")
    if kind not in MODELS:
        raise ValueError(f"unknown model {kind!r}; expected one of {sorted(MODELS)}")
    n = d.get("n")
    if kind == "round_sphere":
        return RoundSphere(n, float(d.get("r", 1.0)))
    if kind == "cylinder":
        return SphericalCylinder(n, float(d.get("H0", 1.0)))
    return CliffordProduct(n, float(d.get("lambda", 1.0)))


def exact_h(model) -> tuple[SecondFundamentalForm, AmbientSpec]:
    """Adapted ``p = 1`` second fundamental form of a model and its ambient."""
    n = model.n
    if isinstance(model, RoundSphere):
        return SecondFundamentalForm.diagonal([1.0 / model.r] * n), AmbientSpec.space_form(0.0)
    if isinstance(model, SphericalCylinder):
        k = n * model.H0 / (n - 1)
        return SecondFundamentalForm.diagonal([k] * (n - 1) + [0.0]), AmbientSpec.space_form(0.0)
    if isinstance(model, CliffordProduct):
        lam = model.lam
        return SecondFundamentalForm.diagonal([lam] + [-1.0 / lam] * (n - 1)), AmbientSpec.space_form(1.0)
    raise TypeError(f"not a model: {model!r}")


def _sphere_coords(radius: float, names: list[str]) -> list[str]:
    """Hyperspherical coordinates of ``S^k(radius)`` in ``R^{k+1}`` as expressions."""
    r = repr(float(radius))
    out = []
    prefix = ""
    for a in names:
        out.append(f"{r}*{prefix}cos({a})")
        prefix += f"sin({a})*"
    out.append(f"{r}*{prefix[:-1]}")
    return out


def _angle_box(k: int) -> list[tuple[float, float]]:
    polar = [(_POLE_MARGIN, math.pi - _POLE_MARGIN)] * (k - 1)
    return polar + [(0.0, 2 * math.pi)]


def as_immersion(model, grid: int = 5) -> ImmersionSpec:
    """Standard trigonometric parametrization of a model."""
    n = model.n
    u = [f"u{i + 1}" for i in range(n)]
    if isinstance(model, RoundSphere):
        comps = _sphere_coords(model.r, u)
        box = _angle_box(n)
        amb = AmbientSpec.space_form(0.0)
    elif isinstance(model, SphericalCylinder):
        comps = _sphere_coords(model.radius, u[:-1]) + [u[-1]]
        box = _angle_box(n - 1) + [(-1.0, 1.0)]
        amb = AmbientSpec.space_form(0.0)
    elif isinstance(model, CliffordProduct):
        r1, r2 = model.radii
        comps = _sphere_coords(r1, u[:1]) + _sphere_coords(r2, u[1:])
        box = [(0.0, 2 * math.pi)] + _angle_box(n - 1)
        amb = AmbientSpec.space_form(1.0)
    else:
        raise TypeError(f"not a model: {model!r}")
    name = f"{model.kind}{model.params()}"
    return ImmersionSpec(n=n, ambient=amb, map=comps, box=box, grid=grid, name=name)


@dataclass(frozen=True)
class SharpnessCertificate:
    n: int
    eps: float
    lam: float
    S: float
    H: float
    margin: float  # S - n^2 H^2/(n-1) - 2, computed exactly for the stored lam
    below_eps: bool
    positive: bool


def sharpness_certificate(n: int, eps: float, delta: float = 1e-6) -> SharpnessCertificate:
    """Pick a Clifford product whose pinching overshoot lies in ``(0, eps)``.

    For ``n = 2`` the overshoot vanishes for every ``lam``; ``lam = 1`` is
    returned with margin 0 and ``positive`` False.  The margin is evaluated
    in rational arithmetic on the floating-point ``lam``: in floats,
    ``S ~ (n-1)/lam^2`` cancels against ``n^2 H^2/(n-1)`` and the roundoff
    swamps margins below about ``1e-6``.
    """
    if not eps > 0:
        raise ValueError("eps must be positive")
    _check_n(n)
    lam = 1.0 if n == 2 else math.sqrt(eps * (n - 1) / (n - 2) * (1 - delta))
    h, _ = exact_h(CliffordProduct(n, lam))
    L2 = Fraction(lam) ** 2
    S = L2 + (n - 1) / L2
    nH_sq = L2 - 2 * (n - 1) + (n - 1) ** 2 / L2  # (n H)^2 = (lam - (n-1)/lam)^2
    m = S - nH_sq / (n - 1) - 2
    return SharpnessCertificate(n, eps, lam, h.S, h.H, float(m), m < Fraction(eps), m > 0)


def catalog_embeddings(model) -> list[tuple[SecondFundamentalForm, AmbientSpec]]:
    """Isometric embeddings of ``model`` known to the catalog (its standard one)."""
    return [exact_h(model)]


def exact_invariants(model) -> dict:
    h, amb = exact_h(model)
    return {"S": h.S, "H": h.H, "c": amb.c, "signed_trace": float(h.traces[0])}
