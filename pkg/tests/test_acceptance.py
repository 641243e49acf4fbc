"""Acceptance criteria, one test per criterion.

Each test prints a single ``[PASS]``/``[FAIL]`` line with the measured
numbers; the lines are also collected into the pytest terminal summary.
Run with ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""

import math
import subprocess
import sys
import time

import numpy as np
import pytest

from subpinch.frames import min_brendle
from subpinch.immersion import grid_nodes, sample_manifold, second_fundamental_form_at
from subpinch.models import CliffordProduct, RoundSphere, SphericalCylinder, as_immersion, catalog_embeddings, exact_h
from subpinch.oracle import TrialConfig, verify_chain_3d, verify_eq_16, verify_eq_17, verify_eq_19, verify_lemma_4_1
from subpinch.pinching import EmbeddingSample, alpha_min_over_H, invariant_certificate, lambda_pinch, mu_pinch
from subpinch.pinching import ricci_lower_bound_3d
from subpinch.tensors import (
    AmbientSpec,
    SecondFundamentalForm,
    gauss_curvature,
    ricci_curvature,
    scalar_curvature,
)

RESULTS = []


def record(tag, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {tag}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def _square_eigs(h):
    return np.linalg.eigvalsh(np.einsum("aij,ajk->ik", h.coeffs, h.coeffs))


def test_c01_clifford_sharpness():
    t0 = time.perf_counter()
    worst_exact = 0.0
    for n in range(2, 9):
        for lam in (0.25, 0.5, 1.0, 2.0, 4.0):
            h, amb = exact_h(CliffordProduct(n, lam))
            got = lambda_pinch([(h.S, h.H)], n, amb.c)
            worst_exact = max(worst_exact, abs(got - (n - 2) / (n - 1) * lam**2))
    worst_numeric = 0.0
    for n in (2, 3):
        for lam in (0.5, 1.0, 2.0):
            spec = as_immersion(CliffordProduct(n, lam))
            target = (n - 2) / (n - 1) * lam**2
            for pt in sample_manifold(spec):
                m = pt.h.S - n * n * pt.h.H**2 / (n - 1) - 2.0
                worst_numeric = max(worst_numeric, abs(m - target))
    dt = time.perf_counter() - t0
    ok = worst_exact <= 1e-10 and worst_numeric <= 1e-4 and dt < 30
    record("C1 Clifford sharpness", ok,
           f"closed-form max err {worst_exact:.2e} (<=1e-10), numeric max err {worst_numeric:.2e} (<=1e-4), "
           f"{dt:.1f}s (<30s)")


def test_c02_cylinder_boundary():
    worst = 0.0
    certs = []
    for n in range(2, 9):
        for H0 in (0.5, 1.0, 2.0):
            model = SphericalCylinder(n, H0)
            h, amb = exact_h(model)
            R = scalar_curvature(gauss_curvature(h, amb))
            lam = lambda_pinch([(h.S, h.H)], n, amb.c)
            mu = mu_pinch([(R, h.H)], n, amb.c)
            worst = max(worst, abs(lam), abs(mu))
            embs = []
            for he, ae in catalog_embeddings(model):
                Re = scalar_curvature(gauss_curvature(he, ae))
                embs.append(EmbeddingSample(n, ae.c, (Re,), (he.H,)))
            certs.append(invariant_certificate(embs).value)
    worst_cert = max(abs(c) for c in certs)
    ok = worst <= 1e-12 and worst_cert <= 1e-12
    record("C2 cylinder boundary", ok,
           f"max |lambda|,|mu| {worst:.2e} (<=1e-12), max |certificate| {worst_cert:.2e} (<=1e-12)")


def test_c03_alpha_minimum():
    t0 = time.perf_counter()
    worst = 0.0
    for n in range(2, 11):
        for c in (0.5, 1.0, 2.0):
            _, val = alpha_min_over_H(n, c)
            worst = max(worst, abs(val - 2 * math.sqrt(n - 1) * c))
    dt = time.perf_counter() - t0
    record("C3 alpha minimum", worst <= 1e-8 and dt < 5,
           f"max err {worst:.2e} (<=1e-8), {dt:.2f}s (<5s)")


def test_c04_alpha_dominates_threshold():
    rep = verify_eq_19(TrialConfig(seed=42, trials=100_000))
    ms = rep.min_slack["random"]
    ok = ms >= -1e-12 and ms >= 0.0 and not rep.violations
    record("C4 alpha >= 2c + n^2H^2/(n-1)", ok, f"1e5 random samples, min slack {ms:.3e} (>=0, none below -1e-12), "
                          f"violations {len(rep.violations)}")


def test_c05_chain_3d():
    t0 = time.perf_counter()
    rep = verify_chain_3d(TrialConfig(seed=42, trials=10_000, p_range=(1, 4), tol=1e-9))
    dt = time.perf_counter() - t0
    ok = not rep.violations and dt < 60
    steps = ",".join(sorted(rep.min_slack))
    record("C5 3d stable-current chain", ok,
           f"1e4 trials, q in {{1,2}}, 4 distributions, {rep.checks} checks [{steps}], "
           f"violations {len(rep.violations)}, {dt:.1f}s (<60s)")


def test_c06_sectional_lower_bound():
    rep = verify_lemma_4_1(TrialConfig(seed=42, trials=10_000, n_range=(2, 8), p_range=(1, 4)))
    eq = rep.notes["umbilic_n2_max_abs_slack"]
    ok = not rep.violations and eq is not None and eq < 1e-8
    record("C6 sectional curvature lower bound", ok, f"violations {len(rep.violations)}, umbilic n=2 max |slack| {eq:.2e} (<1e-8) "
                               f"over {rep.notes['umbilic_n2_trials']} trials")


def test_c07_four_frame_bounds():
    r16 = verify_eq_16(TrialConfig(seed=42, trials=10_000))
    r17 = verify_eq_17(TrialConfig(seed=42, trials=10_000))
    per_class = r17.notes["frames_per_class"]
    ok = not r16.violations and not r17.violations and min(per_class.values()) >= 10_000
    record("C7 four-frame bounds", ok, f"eq16 violations {len(r16.violations)}, eq17 violations {len(r17.violations)}, "
                               f"frames per class {per_class} (>=1e4 each)")


def test_c08_constant_curvature_four_frame():
    R = gauss_curvature(SecondFundamentalForm(np.zeros((1, 4, 4))), AmbientSpec.space_form(1.0))
    res = min_brendle(R)
    ok = abs(res.value - 2.0) <= 1e-6 and abs(res.lam) <= 1e-6
    record("C8 unit-sphere four-frame value", ok, f"min {res.value:.10f} (2 within 1e-6) at lambda {res.lam:.1e}")


def test_c09_numeric_vs_exact():
    models = [RoundSphere(2, 1.0), RoundSphere(3, 1.5), SphericalCylinder(2, 1.0), SphericalCylinder(3, 0.8),
              CliffordProduct(2, 1.0), CliffordProduct(3, 0.6)]
    worst = 0.0
    ratios = []
    for model in models:
        spec = as_immersion(model)
        hx, _ = exact_h(model)
        for pt in sample_manifold(spec):
            worst = max(worst, abs(pt.h.S - hx.S), abs(pt.h.H - hx.H), np.abs(_square_eigs(pt.h) - _square_eigs(hx)).max())
        u = grid_nodes(spec)[0]
        errs = []
        for step in (1e-2, 5e-3, 2.5e-3):
            h = second_fundamental_form_at(spec, u, step, richardson=False).h
            errs.append(max(abs(h.S - hx.S), abs(h.H - hx.H), np.abs(_square_eigs(h) - _square_eigs(hx)).max()))
        ratios += [errs[0] / errs[1], errs[1] / errs[2]]
    ok = worst <= 1e-4 and all(3.5 <= r <= 4.5 for r in ratios)
    record("C9 numeric vs exact h", ok,
           f"max err at default step {worst:.2e} (<=1e-4), halving ratios in [{min(ratios):.3f}, {max(ratios):.3f}] (~4)")


def test_c10_ricci_bound():
    rng = np.random.default_rng(42)
    X = rng.standard_normal((1000, 3))
    X /= np.linalg.norm(X, axis=1, keepdims=True)
    worst_gap = np.inf
    for model in (RoundSphere(3, 1.0), RoundSphere(3, 0.5), SphericalCylinder(3, 1.0), SphericalCylinder(3, 2.0),
                  CliffordProduct(3, 1.0), CliffordProduct(3, 0.5), CliffordProduct(3, 2.0)):
        h, amb = exact_h(model)
        R = gauss_curvature(h, amb)
        ric = min(ricci_curvature(R, x) for x in X)
        worst_gap = min(worst_gap, ric - ricci_lower_bound_3d(h.S, h.H, amb.c))
    R0 = gauss_curvature(SecondFundamentalForm(np.zeros((1, 3, 3))), AmbientSpec.space_form(1.0))
    b0 = ricci_lower_bound_3d(0.0, 0.0, 1.0)
    r0 = min(ricci_curvature(R0, x) for x in X)
    ok = worst_gap >= -1e-8 and abs(b0 - 2.0) <= 1e-10 and abs(r0 - 2.0) <= 1e-10
    record("C10 Ricci bound", ok, f"min (Ric - bound) over catalog {worst_gap:.3e} (>=-1e-8), "
                                  f"totally geodesic bound {b0:.12f} vs Ric {r0:.12f}")


def test_c11_cli_determinism(tmp_path):
    import json

    t0 = time.perf_counter()
    cmd = [sys.executable, "-m", "subpinch", "verify", "--seed", "42"]
    a = subprocess.run(cmd, capture_output=True, check=False)
    b = subprocess.run(cmd, capture_output=True, check=False)
    manifold = tmp_path / "catalog.json"
    manifold.write_text(json.dumps({"entries": [
        {"model": "clifford", "n": 3, "lambda": 1.0},
        {"model": "cylinder", "n": 4, "H0": 1.0},
        {"model": "round_sphere", "n": 4, "r": 1.0},
        {"model": "clifford", "n": 3, "lambda": 0.5, "numeric": True},
    ]}))
    c = subprocess.run([sys.executable, "-m", "subpinch", "analyze", str(manifold)], capture_output=True, check=False)
    d = subprocess.run([sys.executable, "-m", "subpinch", "sweep", "--family", "clifford", "--n", "2", "3", "4",
                        "--param-min", "0.25", "--param-max", "4", "--param-steps", "9"], capture_output=True,
                       check=False)
    dt = time.perf_counter() - t0
    same = a.stdout == b.stdout and len(a.stdout) > 0
    codes = (a.returncode, b.returncode, c.returncode, d.returncode)
    ok = same and codes == (0, 0, 0, 0) and dt < 300
    record("C11 determinism", ok, f"verify --seed 42 byte-identical: {same}, exit codes {codes}, "
                                  f"full CLI run {dt:.1f}s (<300s)")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
