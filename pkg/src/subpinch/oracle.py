"""Randomized checks of the algebraic inequalities behind the pinching theorems.

Each ``verify_*`` suite draws random second fundamental forms (and frames),
evaluates both sides of every intermediate inequality directly from the
coefficients, and collects violations.  A violation is data, never an
exception: the suite returns a :class:`SuiteReport` and callers decide.

Comparison rule: ``a <= b`` fails only if ``a - b > tol * max(1, |a|, |b|)``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .frames import brendle_components, random_orthogonal
from .pinching import eq17_lower_bound
from .tensors import AmbientSpec, SecondFundamentalForm, gauss_curvature, scalar_curvature, sectional_curvature

DISTRIBUTIONS = ("gaussian", "heavy", "near_umbilic", "umbilic")
HEAVY_CLIP = 50.0


@dataclass(frozen=True)
class TrialConfig:
    seed: int = 42
    trials: int = 10_000
    n_range: tuple = (2, 8)
    p_range: tuple = (1, 4)
    scale: float = 1.0
    tol: float = 1e-9

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        lo, hi = self.n_range
        if not 2 <= lo <= hi <= 10:
            raise ValueError("n_range must lie within [2, 10]")
        lo, hi = self.p_range
        if not 1 <= lo <= hi <= 6:
            raise ValueError("p_range must lie within [1, 6]")
        if not self.scale > 0 or not self.tol >= 0:
            raise ValueError("scale must be positive and tol non-negative")


@dataclass
class SuiteReport:
    suite: str
    trials: int
    checks: int = 0
    violations: list = field(default_factory=list)
    min_slack: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


class _Recorder:
    def __init__(self, report: SuiteReport, tol: float):
        self.report = report
        self.tol = tol

    def le(self, step: str, a: float, b: float, trial: int, witness=None, **info):
        """Record ``a <= b``; slack is ``b - a``."""
        a, b = float(a), float(b)
        rep = self.report
        rep.checks += 1
        slack = b - a
        if step not in rep.min_slack or slack < rep.min_slack[step]:
            rep.min_slack[step] = slack
        if a - b > self.tol * max(1.0, abs(a), abs(b)):
            v = {"trial": trial, "step": step, "lhs": a, "rhs": b, "excess": a - b}
            if witness is not None:
                v["h"] = np.asarray(witness).tolist()
            v.update(info)
            rep.violations.append(v)
            return False
        return True

    def eq(self, step: str, a: float, b: float, trial: int, witness=None, **info):
        ok1 = self.le(step, a, b, trial, witness, **info)
        ok2 = self.le(step + "_reverse", b, a, trial, witness, **info)
        return ok1 and ok2


def sample_h(rng: np.random.Generator, n: int, p: int, scale: float, dist: str) -> np.ndarray:
    """Random symmetric ``(p, n, n)`` coefficients from one of :data:`DISTRIBUTIONS`."""
    if dist == "gaussian":
        X = rng.standard_normal((p, n, n))
    elif dist == "heavy":
        X = np.clip(rng.standard_cauchy((p, n, n)), -HEAVY_CLIP, HEAVY_CLIP)
    elif dist == "near_umbilic":
        mu = rng.standard_normal(p)
        X = mu[:, None, None] * np.eye(n) + 1e-3 * rng.standard_normal((p, n, n))
    elif dist == "umbilic":
        mu = rng.standard_normal(p)
        X = mu[:, None, None] * np.eye(n)
    else:
        raise ValueError(f"unknown distribution {dist!r}")
    X = scale * X
    return 0.5 * (X + X.transpose(0, 2, 1))


def _draw(rng, cfg: TrialConfig, trial: int, n=None, p=None, n_min=2):
    lo, hi = cfg.n_range
    if n is None:
        n = int(rng.integers(max(lo, n_min), max(hi, n_min) + 1))
    if p is None:
        p = int(rng.integers(cfg.p_range[0], cfg.p_range[1] + 1))
    dist = DISTRIBUTIONS[trial % len(DISTRIBUTIONS)]
    c = float(rng.integers(0, 2))
    return n, p, c, dist, sample_h(rng, n, p, cfg.scale, dist)


def _SH(h: np.ndarray, n: int) -> tuple[float, float]:
    T = np.trace(h, axis1=1, axis2=2)
    return float(np.sum(h * h)), float(np.linalg.norm(T)) / n


def stable_current_sum_direct(h: np.ndarray, q: int) -> float:
    """``sum_{i<=q<k} 2|h(e_i,e_k)|^2 - <h(e_i,e_i), h(e_k,e_k)>`` term by term."""
    n = h.shape[1]
    total = 0.0
    for i in range(q):
        for k in range(q, n):
            hik, hii, hkk = h[:, i, k], h[:, i, i], h[:, k, k]
            total += 2.0 * float(hik @ hik) - float(hii @ hkk)
    return total


def verify_chain_3d(cfg: TrialConfig = TrialConfig()) -> SuiteReport:
    """Every step of the three-dimensional stable-current estimate, q in {1, 2}."""
    rng = np.random.default_rng(cfg.seed)
    rep = SuiteReport("chain3d", cfg.trials)
    rec = _Recorder(rep, cfg.tol)
    n = 3
    for t in range(cfg.trials):
        _, p, c, dist, h = _draw(rng, cfg, t, n=n, p=int(rng.integers(cfg.p_range[0], min(cfg.p_range[1], 4) + 1)))
        S, H = _SH(h, n)
        for q in (1, 2):
            r = n - q
            L = stable_current_sum_direct(h, q)
            per_alpha = 0.0
            upper10 = 0.0
            for a in range(p):
                ha = h[a]
                d = np.diag(ha)
                T = float(d.sum())
                A = float(d[:q].sum())
                St = float(d @ d)
                Sa = float(np.sum(ha * ha))
                cross = float(np.sum(ha[:q, q:] ** 2))
                Z = -A * (T - A)
                dev = max(St - T * T / 3.0, 0.0)
                root = math.sqrt(q * r / 3.0 * dev)
                per_alpha += 2.0 * cross - A * (T - A)
                w = dict(trial=t, witness=h, q=q, alpha=a, dist=dist)
                rec.le("eq4", r * A * A + q * (T - A) ** 2, q * r * St, **w)
                rec.le("eq5", 3 * A * A - 2 * q * T * A + q * T * T - q * r * St, 0.0, **w)
                rec.le("eq6", 3 * Z + (r - q) * T * A + q * T * T - q * r * St, 0.0, **w)
                rec.le("eq7", (1.0 / q + 1.0 / r) * (A - q * T / 3.0) ** 2, St - T * T / 3.0, **w)
                rec.le("eq8", abs(A - q * T / 3.0), root, **w)
                bound9 = q * r / 3.0 * St - (q * (r - q) / 9.0 + q / 3.0) * T * T + abs(r - q) / 3.0 * abs(T) * root
                rec.le("eq9", Z, bound9, **w)
                rec.le("offdiag", 2.0 * cross, Sa - St, **w)
                upper10 += Sa - St / 3.0 - 4.0 / 9.0 * T * T + abs(T) / 3.0 * math.sqrt(2.0 / 3.0 * dev)
            w = dict(trial=t, witness=h, q=q, dist=dist, c=c)
            rec.eq("eq3", L, per_alpha, **w)
            rec.le("eq10_first", L - q * r * c, upper10 - 2.0 * c, **w)
            rec.le("eq10_second", upper10 - 2.0 * c, S - 4.5 * H * H - 2.0 * c, **w)
            rec.le("end_to_end", L - q * r * c, S - 4.5 * H * H - 2.0 * c, **w)
    return rep


def lemma_4_1_rhs(h_rot: np.ndarray, kmin: float) -> float:
    """Right side of the sectional-curvature lower bound for ``span(e_1, e_2)``."""
    n = h_rot.shape[1]
    S, H = _SH(h_rot, n)
    iu = np.triu_indices(n, 1)
    extra = float(np.sum(h_rot[:, iu[0], iu[1]] ** 2) - np.sum(h_rot[:, 0, 1] ** 2))
    return 0.5 * (2.0 * kmin + n * n * H * H / (n - 1) - S) + extra


def verify_lemma_4_1(cfg: TrialConfig = TrialConfig()) -> SuiteReport:
    """Sectional curvature of a random plane against the lower bound, plus the per-normal step."""
    rng = np.random.default_rng(cfg.seed)
    rep = SuiteReport("lemma41", cfg.trials)
    rec = _Recorder(rep, cfg.tol)
    umbilic_n2 = []
    for t in range(cfg.trials):
        n, p, c, dist, h = _draw(rng, cfg, t)
        if dist == "umbilic" and (t // len(DISTRIBUTIONS)) % 4 == 0:
            n = 2  # keep the equality case populated
            h = sample_h(rng, n, p, cfg.scale, "umbilic")
        Q = random_orthogonal(n, rng)
        R = gauss_curvature(SecondFundamentalForm(h), AmbientSpec.space_form(c))
        K = sectional_curvature(R, Q[:2])
        hr = np.einsum("ik,akl,jl->aij", Q, h, Q)
        rhs = lemma_4_1_rhs(hr, c)
        w = dict(trial=t, witness=h, n=n, p=p, c=c, dist=dist)
        rec.le("eq12", rhs, K, **w)
        if dist == "umbilic" and n == 2:
            umbilic_n2.append(K - rhs)
        for a in range(p):
            ha = hr[a]
            d = np.diag(ha)
            T = float(d.sum())
            Sa = float(np.sum(ha * ha))
            off = Sa - float(d @ d)
            rec.eq("eq13", T * T, (n - 1) * (float(d @ d) + off + T * T / (n - 1) - Sa), **w)
            rec.le("eq14", off + T * T / (n - 1) - Sa, 2.0 * ha[0, 0] * ha[1, 1], **w)
    rep.notes["umbilic_n2_trials"] = len(umbilic_n2)
    rep.notes["umbilic_n2_max_abs_slack"] = float(np.max(np.abs(umbilic_n2))) if umbilic_n2 else None
    return rep


def verify_eq_16(cfg: TrialConfig = TrialConfig()) -> SuiteReport:
    """``|R_1234| <= sum_a |h_13 h_24 - h_14 h_23|`` on random four-frames in a space form."""
    rng = np.random.default_rng(cfg.seed)
    rep = SuiteReport("eq16", cfg.trials)
    rec = _Recorder(rep, cfg.tol)
    for t in range(cfg.trials):
        n, p, c, dist, h = _draw(rng, cfg, t, n_min=4)
        Q = random_orthogonal(n, rng)
        R = gauss_curvature(SecondFundamentalForm(h), AmbientSpec.space_form(c))
        F = Q[:4]
        R1234 = float(np.einsum("ijkl,i,j,k,l->", R.entries, F[0], F[1], F[2], F[3]))
        hr = np.einsum("ik,akl,jl->aij", Q, h, Q)
        terms = hr[:, 0, 2] * hr[:, 1, 3] - hr[:, 0, 3] * hr[:, 1, 2]
        w = dict(trial=t, witness=h, n=n, p=p, c=c, dist=dist)
        rec.le("eq16", abs(R1234), float(np.sum(np.abs(terms))), **w)
        if p == 1:
            rec.eq("eq16_codim1", abs(R1234), abs(float(terms[0])), **w)
    return rep


def verify_eq_17(cfg: TrialConfig = TrialConfig(), frames_per_trial: int = 8) -> SuiteReport:
    """Four-frame quantity against its pinching lower bound at matching ``lam``."""
    rng = np.random.default_rng(cfg.seed)
    rep = SuiteReport("eq17", cfg.trials)
    rec = _Recorder(rep, cfg.tol)
    per_class: dict = {}
    for t in range(cfg.trials):
        n, p, c, dist, h = _draw(rng, cfg, t, n_min=4)
        amb = AmbientSpec.space_form(c)
        R = gauss_curvature(SecondFundamentalForm(h), amb)
        S, H = _SH(h, n)
        frames = np.stack([random_orthogonal(n, rng)[:4] for _ in range(frames_per_trial)])
        lam = rng.uniform(-1.0, 1.0, frames_per_trial)
        lam[0], lam[-1] = -1.0, 1.0
        a, b, d = brendle_components(R, frames)
        vals = a + lam * lam * b - 2.0 * lam * d
        bounds = eq17_lower_bound(S, H, amb, lam, n)
        for k in range(frames_per_trial):
            rec.le("eq17", bounds[k], vals[k], trial=t, witness=h, n=n, p=p, c=c,
                   dist=dist, lam=float(lam[k]), frame=frames[k].tolist())
        key = f"n={n}"
        per_class[key] = per_class.get(key, 0) + frames_per_trial
    rep.notes["frames_per_class"] = dict(sorted(per_class.items()))
    return rep


def alpha_extended(n, H, c):
    """The ``alpha`` formula evaluated in extended precision (independent of the library)."""
    L = np.longdouble
    n, H, c = (np.asarray(x).astype(L) for x in (n, H, c))
    H2 = H * H
    head = n * c + n**3 * H2 / (2 * (n - 1))
    return head - n * (n - 2) / (2 * (n - 1)) * np.sqrt(n * n * H2 * H2 + 4 * (n - 1) * c * H2)


def verify_eq_19(cfg: TrialConfig = TrialConfig(trials=100_000)) -> SuiteReport:
    """``alpha(n, H, c) >= 2c + n^2 H^2/(n-1)`` on random and gridded ``(n, H, c)``.

    ``n`` ranges over 2..10, ``H`` and ``c`` over [0, 10]; the grid part
    includes ``c = 0`` where the inequality is an equality.
    """
    rng = np.random.default_rng(cfg.seed)
    rep = SuiteReport("eq19", cfg.trials)
    L = np.longdouble
    n = rng.integers(2, 11, cfg.trials)
    H = rng.uniform(0.0, 10.0, cfg.trials)
    c = rng.uniform(0.0, 10.0, cfg.trials)
    gn, gH, gc = np.meshgrid(np.arange(2, 11), np.linspace(0, 10, 41), np.linspace(0, 10, 41), indexing="ij")

    def run(ns, Hs, cs, tag):
        lhs = (2 * cs.astype(L) + ns.astype(L) ** 2 * Hs.astype(L) ** 2 / (ns.astype(L) - 1))
        rhs = alpha_extended(ns, Hs, cs)
        slack = rhs - lhs
        rep.checks += slack.size
        k = int(np.argmin(slack))
        rep.min_slack[tag] = float(slack[k])
        scale = np.maximum(1.0, np.maximum(np.abs(lhs), np.abs(rhs)))
        bad = np.nonzero(-slack > cfg.tol * scale)[0]
        for i in bad:
            rep.violations.append({"trial": int(i), "step": tag, "n": int(ns[i]), "H": float(Hs[i]),
                                   "c": float(cs[i]), "lhs": float(lhs[i]), "rhs": float(rhs[i]),
                                   "excess": float(-slack[i])})
        return slack, k

    run(n, H, c, "random")
    gs, k = run(gn.ravel(), gH.ravel(), gc.ravel(), "grid")
    rep.notes["grid_argmin"] = {"n": int(gn.ravel()[k]), "H": float(gH.ravel()[k]), "c": float(gc.ravel()[k])}
    zero = np.abs(gs) <= 1e-12
    rep.notes["grid_equality_points"] = int(zero.sum())
    eq_n, eq_c = gn.ravel()[zero], gc.ravel()[zero]
    rep.notes["grid_equality_only_at_c0_or_n2"] = bool(np.all((eq_c == 0) | (eq_n == 2)))
    return rep


def verify_scalar_identity(cfg: TrialConfig = TrialConfig()) -> SuiteReport:
    """Double trace of the Gauss tensor against ``n(n-1)c + n^2 H^2 - S``; also lambda/mu duality."""
    rng = np.random.default_rng(cfg.seed)
    rep = SuiteReport("scalar", cfg.trials)
    rec = _Recorder(rep, cfg.tol)
    for t in range(cfg.trials):
        n, p, c, dist, h = _draw(rng, cfg, t)
        R = gauss_curvature(SecondFundamentalForm(h), AmbientSpec.space_form(c))
        S, H = _SH(h, n)
        Rs = scalar_curvature(R)
        w = dict(trial=t, witness=h, n=n, p=p, c=c, dist=dist)
        rec.eq("scalar_identity", Rs, n * (n - 1) * c + n * n * H * H - S, **w)
        lam = S - n * n * H * H / (n - 1) - 2 * c
        mu = Rs - n * n * (n - 2) * H * H / (n - 1) - (n + 1) * (n - 2) * c
        rec.eq("lambda_mu_duality", lam, -mu, **w)
    return rep


SUITES = {
    "chain3d": verify_chain_3d,
    "lemma41": verify_lemma_4_1,
    "eq16": verify_eq_16,
    "eq17": verify_eq_17,
    "eq19": verify_eq_19,
    "scalar": verify_scalar_identity,
}
