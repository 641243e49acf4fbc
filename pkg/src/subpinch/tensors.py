"""Pointwise curvature data of a submanifold and the Gauss-equation assembly.

Index conventions: a second fundamental form is stored as an array of shape
``(p, n, n)`` (normal index first); curvature tensors as ``(n, n, n, n)`` with
``R[i, j, i, j]`` equal to the sectional curvature of ``span(e_i, e_j)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

FRAME_TOL = 1e-10
SYMMETRY_TOL = 1e-10


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class SecondFundamentalForm:
    """Coefficients ``h[alpha, i, j]`` in an adapted orthonormal frame."""

    coeffs: np.ndarray

    def __post_init__(self):
        h = np.asarray(self.coeffs, dtype=float)
        if h.ndim == 2:
            h = h[None]
        if h.ndim != 3 or h.shape[1] != h.shape[2]:
            raise ValueError(f"expected shape (p, n, n), got {h.shape}")
        if h.shape[1] < 2 or h.shape[0] < 1:
            raise ValueError("need n >= 2 and p >= 1")
        if not np.all(np.isfinite(h)):
            raise ValueError("non-finite coefficients")
        scale = max(1.0, float(np.abs(h).max()))
        asym = float(np.abs(h - h.transpose(0, 2, 1)).max())
        if asym > SYMMETRY_TOL * scale:
            raise ValueError(f"h is not symmetric (max asymmetry {asym:.3g})")
        object.__setattr__(self, "coeffs", _readonly(h))

    @classmethod
    def symmetrized(cls, coeffs) -> "SecondFundamentalForm":
        h = np.asarray(coeffs, dtype=float)
        if h.ndim == 2:
            h = h[None]
        return cls(0.5 * (h + h.transpose(0, 2, 1)))

    @classmethod
    def diagonal(cls, values) -> "SecondFundamentalForm":
        """Form diagonal in every normal direction.

        ``values`` is either a list of principal curvatures (``p = 1``) or a
        ``(p, n)`` array, one row per normal direction.
        """
        v = np.atleast_2d(np.asarray(values, dtype=float))
        return cls(v[:, :, None] * np.eye(v.shape[1]))

    @property
    def n(self) -> int:
        return self.coeffs.shape[1]

    @property
    def p(self) -> int:
        return self.coeffs.shape[0]

    @property
    def traces(self) -> np.ndarray:
        """Signed trace ``T_alpha`` of each normal component."""
        return np.trace(self.coeffs, axis1=1, axis2=2)

    @property
    def S(self) -> float:
        return squared_norm_S(self)

    @property
    def H(self) -> float:
        return mean_curvature_H(self)


@dataclass(frozen=True)
class AmbientSpec:
    """Ambient curvature: a space form of curvature ``c`` or a pair of bounds.

    Use :meth:`space_form` or :meth:`bounds` rather than the raw constructor.
    """

    kmin: float
    kmax: float
    mode: str = "space_form"

    def __post_init__(self):
        if self.mode not in ("space_form", "bounds"):
            raise ValueError(f"unknown ambient mode {self.mode!r}")
        if self.kmin > self.kmax:
            raise ValueError("kmin must not exceed kmax")
        if self.mode == "space_form":
            if self.kmin != self.kmax:
                raise ValueError("a space form has kmin == kmax")
            if self.kmin < 0:
                raise ValueError("space form curvature must be >= 0")

    @classmethod
    def space_form(cls, c: float) -> "AmbientSpec":
        return cls(float(c), float(c), "space_form")

    @classmethod
    def bounds(cls, kmin: float, kmax: float) -> "AmbientSpec":
        return cls(float(kmin), float(kmax), "bounds")

    @property
    def is_space_form(self) -> bool:
        return self.mode == "space_form"

    @property
    def c(self) -> float:
        if not self.is_space_form:
            raise ValueError("curvature bounds do not define a single constant c")
        return self.kmin

    def to_dict(self) -> dict:
        if self.is_space_form:
            return {"c": self.kmin}
        return {"kmin": self.kmin, "kmax": self.kmax}


def curvature_symmetry_residual(R: np.ndarray) -> float:
    """Largest violation of the algebraic curvature identities."""
    R = np.asarray(R, dtype=float)
    res = [
        R + R.transpose(1, 0, 2, 3),
        R + R.transpose(0, 1, 3, 2),
        R - R.transpose(2, 3, 0, 1),
        # first Bianchi: R_ijkl + R_iklj + R_iljk
        R + R.transpose(0, 2, 3, 1) + R.transpose(0, 3, 1, 2),
    ]
    return max(float(np.abs(r).max()) for r in res)


@dataclass(frozen=True)
class CurvatureTensor:
    """Dense Riemann tensor ``R[i, j, k, l]``; symmetries are checked on entry."""

    entries: np.ndarray
    tol: float = field(default=SYMMETRY_TOL, repr=False, compare=False)

    def __post_init__(self):
        R = np.asarray(self.entries, dtype=float)
        n = R.shape[0]
        if R.ndim != 4 or R.shape != (n, n, n, n):
            raise ValueError(f"expected shape (n, n, n, n), got {R.shape}")
        scale = max(1.0, float(np.abs(R).max()))
        resid = curvature_symmetry_residual(R)
        if resid > self.tol * scale:
            raise ValueError(f"curvature symmetries violated (residual {resid:.3g})")
        object.__setattr__(self, "entries", _readonly(R))

    @classmethod
    def constant(cls, n: int, k: float) -> "CurvatureTensor":
        return cls(k * _kulkarni_identity(n))

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def on_frame(self, frame) -> np.ndarray:
        """Components ``R(e_a, e_b, e_c, e_d)`` for the rows ``e_a`` of ``frame``."""
        F = np.asarray(frame, dtype=float)
        return np.einsum("ijkl,ai,bj,ck,dl->abcd", self.entries, F, F, F, F, optimize=True)


def _kulkarni_identity(n: int) -> np.ndarray:
    I = np.eye(n)
    return np.einsum("ik,jl->ijkl", I, I) - np.einsum("il,jk->ijkl", I, I)


def check_orthonormal(frame, tol: float = FRAME_TOL) -> np.ndarray:
    """Return ``frame`` as an array of row vectors, or raise if not orthonormal."""
    F = np.atleast_2d(np.asarray(frame, dtype=float))
    gram = F @ F.T
    err = float(np.abs(gram - np.eye(F.shape[0])).max())
    if err > tol:
        raise ValueError(f"frame is not orthonormal (Gram error {err:.3g})")
    return F


def gauss_curvature(h: SecondFundamentalForm, amb: AmbientSpec) -> CurvatureTensor:
    """Intrinsic curvature from the Gauss equation in a space form.

    ``R_ijkl = c (d_ik d_jl - d_il d_jk) + sum_a (h_ik h_jl - h_il h_jk)``.
    Only curvature bounds are known for a ``bounds`` ambient, so the exact
    tensor cannot be assembled and a ``ValueError`` is raised.
    """
    if not amb.is_space_form:
        raise ValueError("exact Gauss assembly needs a space-form ambient; use bound-based checks")
    hc = h.coeffs
    R = amb.c * _kulkarni_identity(h.n)
    R = R + np.einsum("aik,ajl->ijkl", hc, hc) - np.einsum("ail,ajk->ijkl", hc, hc)
    return CurvatureTensor(R)


def squared_norm_S(h: SecondFundamentalForm) -> float:
    return float(np.sum(h.coeffs**2))


def mean_curvature_H(h: SecondFundamentalForm) -> float:
    """Length of the mean curvature vector, ``|sum_a T_a e_a| / n``."""
    return float(np.linalg.norm(h.traces)) / h.n


def scalar_curvature(R: CurvatureTensor) -> float:
    """Unnormalized double trace ``sum_{i != j} R_ijij``."""
    return float(np.einsum("ijij->", R.entries))


def sectional_curvature(R: CurvatureTensor, plane) -> float:
    F = check_orthonormal(plane)
    if F.shape != (2, R.n):
        raise ValueError(f"a tangent plane needs two vectors in R^{R.n}")
    e1, e2 = F
    return float(np.einsum("ijkl,i,j,k,l->", R.entries, e1, e2, e1, e2))


def ricci_tensor(R: CurvatureTensor) -> np.ndarray:
    return np.einsum("jili->jl", R.entries)


def ricci_curvature(R: CurvatureTensor, X, completion=None) -> float:
    """``Ric(X) = sum_i R(X, e_i, X, e_i)``.

    With ``completion`` (an ``(n-1, n)`` array of vectors completing ``X`` to
    an orthonormal basis) the sum is taken literally over that basis;
    otherwise the Ricci tensor is contracted with ``X``.
    """
    X = np.asarray(X, dtype=float)
    norm = np.linalg.norm(X)
    if norm == 0:
        raise ValueError("zero vector has no Ricci curvature")
    if abs(norm - 1.0) > FRAME_TOL:
        raise ValueError(f"X must be a unit vector (|X| = {norm:.12g})")
    if completion is None:
        return float(X @ ricci_tensor(R) @ X)
    basis = check_orthonormal(np.vstack([X, completion]))
    if basis.shape[0] != R.n:
        raise ValueError("completion does not span the tangent space")
    comps = R.on_frame(basis)
    return float(np.einsum("jj->", comps[0, :, 0, :]))


def min_ricci(R: CurvatureTensor) -> float:
    """Minimum of ``Ric(X)`` over unit ``X``: the smallest Ricci eigenvalue."""
    return float(np.linalg.eigvalsh(ricci_tensor(R))[0])
