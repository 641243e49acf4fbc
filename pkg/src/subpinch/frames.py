"""Searches over orthonormal frames.

Two frame-dependent quantities are extremized here:

* the stable-current sum ``L_q(h; e) = sum_{i<=q<k} 2|h(e_i,e_k)|^2 - <h(e_i,e_i), h(e_k,e_k)>``
  over orthonormal bases of the tangent space (maximized), and
* the four-frame combination
  ``R_1313 + lam^2 R_1414 + R_2323 + lam^2 R_2424 - 2 lam R_1234``
  over orthonormal four-frames and ``lam in [-1, 1]`` (minimized).

Both searches are multistart Nelder-Mead in exponential coordinates on
``SO(n)``.  Nothing is certified: a maximum found is a lower bound on the
true maximum and a minimum found is an upper bound on the true minimum,
and every :class:`SearchResult` says which.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm
from scipy.optimize import minimize

from .tensors import FRAME_TOL, CurvatureTensor, SecondFundamentalForm, check_orthonormal

DEFAULT_RESTARTS = 32


@dataclass(frozen=True)
class SearchResult:
    value: float
    frame: np.ndarray
    restarts: int
    converged: bool
    seed: int
    bound: str  # "lower" for max-problems, "upper" for min-problems
    evaluations: int = 0
    lam: float | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {
            "value": self.value,
            "bound": self.bound,
            "restarts": self.restarts,
            "converged": self.converged,
            "seed": self.seed,
            "evaluations": self.evaluations,
            "frame": np.asarray(self.frame).tolist(),
        }
        if self.lam is not None:
            d["lambda"] = self.lam
        return d


def skew_from_vector(x, n: int) -> np.ndarray:
    A = np.zeros((n, n))
    iu = np.triu_indices(n, 1)
    A[iu] = x
    return A - A.T


def rotation_from_skew(A) -> np.ndarray:
    A = np.asarray(A, dtype=float)
    if np.abs(A + A.T).max() > 0:
        raise ValueError("exponential coordinates must be skew-symmetric")
    return expm(A)


def givens(n: int, i: int, j: int, angle: float) -> np.ndarray:
    G = np.eye(n)
    c, s = np.cos(angle), np.sin(angle)
    G[i, i] = G[j, j] = c
    G[i, j], G[j, i] = -s, s
    return G


def rotation_from_givens(n: int, rotations) -> np.ndarray:
    """Product of Givens rotations ``[(i, j, angle), ...]``, applied left to right."""
    Q = np.eye(n)
    for i, j, angle in rotations:
        if not -np.pi < angle <= np.pi:
            raise ValueError("Givens angles must lie in (-pi, pi]")
        Q = Q @ givens(n, i, j, angle)
    return Q


def random_orthogonal(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed orthogonal matrix via QR of a Gaussian matrix."""
    Z = rng.standard_normal((n, n))
    Q, R = np.linalg.qr(Z)
    return Q * np.sign(np.diag(R))


def check_orthogonal(Q, tol: float = FRAME_TOL) -> np.ndarray:
    Q = np.asarray(Q, dtype=float)
    if Q.ndim != 2 or Q.shape[0] != Q.shape[1]:
        raise ValueError("Q must be square")
    return check_orthonormal(Q, tol)


def rotate_h(h: SecondFundamentalForm, Q) -> SecondFundamentalForm:
    """Express ``h`` in the basis whose ``i``-th vector is row ``i`` of ``Q``."""
    Q = check_orthogonal(Q)
    if Q.shape[0] != h.n:
        raise ValueError("rotation dimension does not match h")
    return SecondFundamentalForm.symmetrized(np.einsum("ik,akl,jl->aij", Q, h.coeffs, Q))


def _ls_raw(hc: np.ndarray, q: int) -> float:
    diag = np.diagonal(hc, axis1=1, axis2=2)
    A = diag[:, :q].sum(axis=1)
    B = diag[:, q:].sum(axis=1)
    return float(2.0 * np.sum(hc[:, :q, q:] ** 2) - np.sum(A * B))


def lawson_simons_quantity(h: SecondFundamentalForm, q: int) -> float:
    """The stable-current sum of ``h`` in its own basis, split after index ``q``."""
    if not 0 < q < h.n:
        raise ValueError(f"q must satisfy 0 < q < n = {h.n}")
    return _ls_raw(h.coeffs, q)


def _multistart(objective, n: int, budget: int, seed: int, maxiter: int | None):
    """Minimize ``objective(Q)`` over ``SO(n)``; returns best (value, Q, evals, converged)."""
    if budget < 1:
        raise ValueError("budget must be at least one restart")
    rng = np.random.default_rng(seed)
    ndim = n * (n - 1) // 2
    best = [np.inf, np.eye(n)]
    evals = [0]

    def frame(x, Q0):
        return expm(skew_from_vector(x, n)) @ Q0

    def f(x, Q0):
        Q = frame(x, Q0)
        v = objective(Q)
        evals[0] += 1
        if v < best[0]:
            best[0], best[1] = v, Q
        return v

    converged = True
    opts = {"xatol": 1e-9, "fatol": 1e-13, "maxiter": maxiter or 400 * ndim, "maxfev": maxiter or 400 * ndim}
    for r in range(budget):
        Q0 = np.eye(n) if r == 0 else random_orthogonal(n, rng)
        x0 = np.zeros(ndim)
        f(x0, Q0)
        simplex = np.vstack([x0, 0.5 * np.eye(ndim)])
        res = minimize(f, x0, args=(Q0,), method="Nelder-Mead",
                       options=dict(opts, initial_simplex=simplex))
        converged = converged and bool(res.success)
    return best[0], best[1], evals[0], converged


def max_lawson_simons(h: SecondFundamentalForm, q: int, budget: int = DEFAULT_RESTARTS,
                      seed: int = 0, maxiter: int | None = None) -> SearchResult:
    """Largest stable-current sum found over orthonormal bases (a lower bound)."""
    n = h.n
    if not 0 < q < n:
        raise ValueError(f"q must satisfy 0 < q < n = {n}")
    hc = h.coeffs

    def neg(Q):
        return -_ls_raw(np.einsum("ik,akl,jl->aij", Q, hc, Q), q)

    v, Q, evals, conv = _multistart(neg, n, budget, seed, maxiter)
    return SearchResult(-v, Q, budget, conv, seed, "lower", evals, extra={"q": q})


@dataclass(frozen=True)
class StableCurrentCheck:
    q: int
    max_found: float
    threshold: float  # q (n - q) c
    margin: float  # threshold - max_found
    holds: bool
    heuristic: bool = True  # "holds" rests on a non-certified maximum

    def to_dict(self) -> dict:
        return {"q": self.q, "max_found": self.max_found, "threshold": self.threshold,
                "margin": self.margin, "holds": self.holds, "heuristic": self.heuristic}


def stable_current_condition(h: SecondFundamentalForm, c: float, budget: int = DEFAULT_RESTARTS,
                             seed: int = 0, tol: float = 1e-9) -> list[StableCurrentCheck]:
    if c < 0:
        raise ValueError("space form curvature must be >= 0")
    out = []
    for q in range(1, h.n):
        res = max_lawson_simons(h, q, budget, seed)
        thr = q * (h.n - q) * c
        out.append(StableCurrentCheck(q, res.value, thr, thr - res.value, res.value < thr - tol))
    return out


def check_lambda(lam: float) -> float:
    lam = float(lam)
    if not -1.0 <= lam <= 1.0:
        raise ValueError("lambda must lie in [-1, 1]")
    return lam


def brendle_components(R: CurvatureTensor, frames) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """For frames of shape ``(K, 4, n)`` return ``(R1313+R2323, R1414+R2424, R1234)``."""
    F = np.asarray(frames, dtype=float)
    n = R.n
    M = R.entries.reshape(n * n, n * n)

    def comp(a, b, c, d):
        left = (F[:, a, :, None] * F[:, b, None, :]).reshape(-1, n * n)
        right = (F[:, c, :, None] * F[:, d, None, :]).reshape(-1, n * n)
        return np.einsum("Kx,Kx->K", left @ M, right)

    a = comp(0, 2, 0, 2) + comp(1, 2, 1, 2)
    b = comp(0, 3, 0, 3) + comp(1, 3, 1, 3)
    d = comp(0, 1, 2, 3)
    return a, b, d


def brendle_quantity(R: CurvatureTensor, frame, lam: float) -> float:
    lam = check_lambda(lam)
    F = check_orthonormal(frame)
    if F.shape != (4, R.n):
        raise ValueError(f"need an orthonormal four-frame in R^{R.n}")
    a, b, d = brendle_components(R, F[None])
    return float(a[0] + lam * lam * b[0] - 2.0 * lam * d[0])


def min_over_lambda(a, b, d):
    """Exact minimum of ``a + b lam^2 - 2 d lam`` over ``lam in [-1, 1]``.

    Returns ``(value, lam)`` arrays; the endpoints are always candidates.
    """
    a, b, d = np.broadcast_arrays(*(np.asarray(x, dtype=float) for x in (a, b, d)))
    safe_b = np.where(b > 0, b, 1.0)
    interior = np.where(b > 0, np.clip(d / safe_b, -1.0, 1.0), 1.0)
    cands = np.stack([np.full(a.shape, -1.0), np.full(a.shape, 1.0), interior])
    vals = a + b * cands**2 - 2.0 * d * cands
    k = np.argmin(vals, axis=0)[None]
    val = np.take_along_axis(vals, k, 0)[0]
    lam = np.take_along_axis(cands, k, 0)[0]
    return val, lam


def min_brendle(R: CurvatureTensor, budget: int = DEFAULT_RESTARTS, seed: int = 0,
                maxiter: int | None = None) -> SearchResult:
    """Smallest four-frame quantity found (an upper bound on the true minimum)."""
    n = R.n
    if n < 4:
        raise ValueError("the four-frame condition needs n >= 4")

    M = R.entries.reshape(n * n, n * n)

    def obj(Q):
        P = np.kron(Q[:4], Q[:4])  # row 4a+b is e_a (x) e_b
        C = P @ M @ P.T
        a = C[2, 2] + C[6, 6]  # R1313 + R2323
        b = C[3, 3] + C[7, 7]  # R1414 + R2424
        d = C[1, 11]  # R1234
        lam = min(1.0, max(-1.0, d / b)) if b > 0 else 1.0
        return min(a + b * t * t - 2.0 * d * t for t in (-1.0, 1.0, lam))

    v, Q, evals, conv = _multistart(obj, n, budget, seed, maxiter)
    frame = Q[:4]
    a, b, d = brendle_components(R, frame[None])
    val, lam = min_over_lambda(a, b, d)
    return SearchResult(float(val[0]), frame, budget, conv, seed, "upper", evals, lam=float(lam[0]))
