"""Numerical second fundamental form of a parametrized immersion.

An immersion ``f`` of a coordinate box into ``R^m`` is sampled on a grid;
at each interior node the first and second partials come from central
differences (one Richardson level by default), the tangent frame is the
symmetric orthonormalization ``J G^{-1/2}`` of the Jacobian, and ``h`` is the
projection of the re-expressed Hessian onto an orthonormal normal frame.
For a spherical ambient ``S^{m-1}(1/sqrt(c))`` the position direction is
removed from the normal space, so ``h`` is the second fundamental form
inside the sphere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .expr import compile_map
from .tensors import AmbientSpec, SecondFundamentalForm

SPHERE_TOL = 1e-8
RANK_TOL = 1e-8
DEFAULT_RELATIVE_STEP = 1e-4


class ImmersionError(ValueError):
    """Pointwise failure of the immersion pipeline; carries the parameter point."""

    def __init__(self, message: str, u=None):
        self.u = None if u is None else [float(x) for x in np.atleast_1d(u)]
        super().__init__(message if u is None else f"{message} at u={self.u}")


@dataclass(frozen=True)
class ImmersionSpec:
    """A map from ``box`` (``n`` closed intervals) into ``R^m``.

    ``map`` is either a list of expression strings in ``u1..un`` or a Python
    callable taking an array of shape ``(n, ...)``.
    """

    n: int
    ambient: AmbientSpec
    map: object
    box: tuple
    grid: int = 5
    name: str = "immersion"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("domain dimension must be >= 1")
        if not self.ambient.is_space_form:
            raise ValueError("immersions are supported into R^m or a round sphere only")
        box = tuple((float(a), float(b)) for a, b in self.box)
        if len(box) != self.n or any(b <= a for a, b in box):
            raise ValueError("box needs n intervals with a < b")
        object.__setattr__(self, "box", box)
        if int(self.grid) < 2:
            raise ValueError("grid must have at least 2 samples per axis")
        fn = self.map if callable(self.map) else compile_map(list(self.map), self.n)
        object.__setattr__(self, "_fn", fn)

    @property
    def spherical(self) -> bool:
        return self.ambient.c > 0

    def evaluate(self, u) -> np.ndarray:
        return np.asarray(self._fn(np.asarray(u, dtype=float)), dtype=float)

    @property
    def widths(self) -> np.ndarray:
        return np.array([b - a for a, b in self.box])

    def default_step(self) -> np.ndarray:
        return DEFAULT_RELATIVE_STEP * self.widths

    def grid_axes(self):
        return [np.linspace(a, b, int(self.grid)) for a, b in self.box]


@dataclass(frozen=True)
class PointData:
    u: np.ndarray
    position: np.ndarray
    tangent_frame: np.ndarray  # (n, m) rows
    normal_frame: np.ndarray  # (p, m) rows
    h: SecondFundamentalForm
    metric_cond: float


def _steps(spec: ImmersionSpec, step) -> np.ndarray:
    if step is None:
        return spec.default_step()
    s = np.broadcast_to(np.asarray(step, dtype=float), (spec.n,)).copy()
    if np.any(s <= 0):
        raise ValueError("step must be positive")
    return s


def _central(spec: ImmersionSpec, u: np.ndarray, hs: np.ndarray):
    """Plain central-difference Jacobian ``(m, n)`` and Hessian ``(m, n, n)``."""
    n = spec.n
    offsets = [np.zeros(n)]
    index = {}

    def add(key, vec):
        index[key] = len(offsets)
        offsets.append(vec)

    E = np.diag(hs)
    for i in range(n):
        add((i, 1), E[i])
        add((i, -1), -E[i])
    for i, j in itertools.combinations(range(n), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            add((i, j, si, sj), si * E[i] + sj * E[j])
    pts = u[:, None] + np.array(offsets).T
    vals = spec.evaluate(pts)  # (m, K)
    f0 = vals[:, 0]
    m = vals.shape[0]
    J = np.empty((m, n))
    Hs = np.empty((m, n, n))
    for i in range(n):
        fp, fm = vals[:, index[(i, 1)]], vals[:, index[(i, -1)]]
        J[:, i] = (fp - fm) / (2 * hs[i])
        Hs[:, i, i] = (fp - 2 * f0 + fm) / hs[i] ** 2
    for i, j in itertools.combinations(range(n), 2):
        g = lambda a, b: vals[:, index[(i, j, a, b)]]
        d = (g(1, 1) - g(1, -1) - g(-1, 1) + g(-1, -1)) / (4 * hs[i] * hs[j])
        Hs[:, i, j] = Hs[:, j, i] = d
    return f0, J, Hs


def jet2(spec: ImmersionSpec, u, step=None, richardson: bool = True):
    """First and second partials of the immersion at ``u``.

    Returns ``(J, Hs)`` with ``J[:, i] = df/du_i`` and ``Hs[:, i, j] =
    d2f/du_i du_j``.  Plain central differences are O(step^2); with
    ``richardson`` the step-``h`` and step-``h/2`` estimates are combined as
    ``(4 D(h/2) - D(h)) / 3``.
    """
    u = np.asarray(u, dtype=float)
    if u.shape != (spec.n,):
        raise ValueError(f"u must have {spec.n} components")
    hs = _steps(spec, step)
    lo = np.array([a for a, _ in spec.box])
    hi = np.array([b for _, b in spec.box])
    if np.any(u - lo < 2 * hs) or np.any(hi - u < 2 * hs):
        raise ImmersionError("point closer than 2*step to the box boundary", u)
    try:
        _, J, Hs = _central(spec, u, hs)
        if richardson:
            _, J2, Hs2 = _central(spec, u, hs / 2)
            J = (4 * J2 - J) / 3
            Hs = (4 * Hs2 - Hs) / 3
    except (ValueError, ArithmeticError) as exc:
        raise ImmersionError(f"evaluation failed: {exc}", u) from None
    if not (np.all(np.isfinite(J)) and np.all(np.isfinite(Hs))):
        raise ImmersionError("non-finite derivatives", u)
    return J, Hs


def adapted_frames(J, position=None):
    """Orthonormal tangent and normal frames from the Jacobian.

    The tangent frame is ``J G^{-1/2}`` (rows returned), so that it is the
    frame in which :func:`second_fundamental_form_at` expresses ``h``.  If
    ``position`` is given (spherical ambient) its direction is excluded from
    the normal frame.  Returns ``(tangent, normal, cond(G))``.
    """
    J = np.asarray(J, dtype=float)
    m, n = J.shape
    sv = np.linalg.svd(J, compute_uv=False)
    if sv[-1] <= RANK_TOL * max(sv[0], 1e-300):
        raise ValueError(f"differential has rank < {n}")
    G = J.T @ J
    w, V = np.linalg.eigh(G)
    G_isqrt = (V / np.sqrt(w)) @ V.T
    tangent = (J @ G_isqrt).T
    cols = [tangent.T]
    if position is not None:
        x = np.asarray(position, dtype=float)
        cols.append((x / np.linalg.norm(x))[:, None])
    A = np.hstack(cols)
    k = A.shape[1]
    if m - k < 1:
        raise ValueError("no room for a normal direction")
    Q, _ = np.linalg.qr(A, mode="complete")
    normal = Q[:, k:].T
    return tangent, normal, float(w[-1] / w[0])


def second_fundamental_form_at(spec: ImmersionSpec, u, step=None, richardson: bool = True) -> PointData:
    u = np.asarray(u, dtype=float)
    if spec.n < 2:
        raise ImmersionError("second fundamental form needs a domain of dimension >= 2", u)
    J, Hs = jet2(spec, u, step, richardson)
    x = spec.evaluate(u)
    if spec.spherical:
        dev = abs(float(x @ x) - 1.0 / spec.ambient.c)
        if dev > SPHERE_TOL:
            raise ImmersionError(f"point is off the sphere of curvature {spec.ambient.c} by {dev:.3g}", u)
    try:
        tangent, normal, cond = adapted_frames(J, x if spec.spherical else None)
    except ValueError as exc:
        raise ImmersionError(str(exc), u) from None
    # orthonormal directions v_i = sum_a (G^{-1/2})_{ai} d/du_a
    G = J.T @ J
    w, V = np.linalg.eigh(G)
    Gi = (V / np.sqrt(w)) @ V.T
    hess_frame = np.einsum("mab,ai,bj->mij", Hs, Gi, Gi)
    h = np.einsum("am,mij->aij", normal, hess_frame)
    h = SecondFundamentalForm.symmetrized(h)
    return PointData(u, x, tangent, normal, h, cond)


def grid_nodes(spec: ImmersionSpec) -> np.ndarray:
    """Interior grid nodes in C order; boundary nodes are skipped."""
    axes = [ax[1:-1] for ax in spec.grid_axes()]
    if any(len(ax) == 0 for ax in axes):
        return np.empty((0, spec.n))
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack([g.ravel() for g in mesh], axis=1)


def sample_manifold(spec: ImmersionSpec, step=None, richardson: bool = True) -> list[PointData]:
    nodes = grid_nodes(spec)
    if len(nodes) == 0:
        raise ValueError("grid has no interior nodes; use grid >= 3")
    return [second_fundamental_form_at(spec, u, step, richardson) for u in nodes]
