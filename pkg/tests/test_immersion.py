import numpy as np
import pytest

from subpinch.immersion import (
    ImmersionError,
    ImmersionSpec,
    adapted_frames,
    grid_nodes,
    jet2,
    sample_manifold,
    second_fundamental_form_at,
)
from subpinch.models import CliffordProduct, RoundSphere, SphericalCylinder, as_immersion, exact_h
from subpinch.tensors import AmbientSpec

EUCLID = AmbientSpec.space_form(0.0)
SPHERE = AmbientSpec.space_form(1.0)


def spec(map_, box, ambient=EUCLID, grid=5):
    return ImmersionSpec(n=len(box), ambient=ambient, map=map_, box=box, grid=grid)


def test_jet_linear():
    s = spec(["2*u1 - u2", "u1 + 3*u2", "0.5*u2"], [(-1, 1), (-1, 1)])
    J, Hs = jet2(s, [0.2, -0.3])
    np.testing.assert_allclose(J, [[2, -1], [1, 3], [0, 0.5]], atol=1e-10)
    assert np.abs(Hs).max() <= 1e-9


def test_jet_circle():
    s = spec(["cos(u1)", "sin(u1)"], [(-1, 1)])
    J, Hs = jet2(s, [0.0], step=1e-4)
    np.testing.assert_allclose(Hs[:, 0, 0], [-1.0, 0.0], atol=1e-7)
    np.testing.assert_allclose(J[:, 0], [0.0, 1.0], atol=1e-10)


def test_jet_quadratic_gradient():
    s = spec(["u1**2 + u1*u2", "3*u2**2 - u1", "u1 + u2"], [(-2, 2), (-2, 2)])
    u = np.array([0.7, -1.1])
    J, Hs = jet2(s, u, richardson=False)
    exact = np.array([[2 * u[0] + u[1], u[0]], [-1.0, 6 * u[1]], [1.0, 1.0]])
    np.testing.assert_allclose(J, exact, atol=1e-10)
    np.testing.assert_allclose(Hs[0], [[2, 1], [1, 0]], atol=1e-6)


def test_jet_boundary_and_failures():
    s = spec(["u1", "u2", "0"], [(0, 1), (0, 1)])
    with pytest.raises(ImmersionError) as info:
        jet2(s, [1e-4, 0.5])
    np.testing.assert_allclose(info.value.u, [1e-4, 0.5])
    bad = spec(["sqrt(u1)", "u2", "0"], [(-1, 1), (-1, 1)])
    with pytest.raises(ImmersionError):
        jet2(bad, [-0.5, 0.0])


def test_adapted_frames_graph():
    J = np.array([[1.0, 0.0], [0.0, 1.0], [0.0, 0.0], [0.0, 0.0]])
    t, nrm, cond = adapted_frames(J)
    np.testing.assert_allclose(t, np.eye(4)[:2], atol=1e-14)
    np.testing.assert_allclose(np.abs(nrm @ np.eye(4)[2:].T), np.eye(2), atol=1e-14)
    assert cond == pytest.approx(1.0)


def test_adapted_frames_orthonormal(rng):
    for _ in range(20):
        J = rng.standard_normal((6, 3))
        t, nrm, _ = adapted_frames(J)
        F = np.vstack([t, nrm])
        np.testing.assert_allclose(F @ F.T, np.eye(6), atol=1e-10)
        # tangent rows span the column space of J
        np.testing.assert_allclose(t.T @ (t @ J), J, atol=1e-10)


def test_adapted_frames_equator():
    # equatorial circle in the unit 2-sphere, at angle t
    t0 = 0.4
    x = np.array([np.cos(t0), np.sin(t0), 0.0])
    J = np.array([[-np.sin(t0)], [np.cos(t0)], [0.0]])
    tangent, normal, _ = adapted_frames(J, position=x)
    assert normal.shape == (1, 3)
    assert abs(normal[0] @ x) < 1e-12 and abs(normal[0] @ tangent[0]) < 1e-12


def test_adapted_frames_rank_deficient():
    with pytest.raises(ValueError):
        adapted_frames(np.array([[1.0, 2.0], [2.0, 4.0], [0.0, 0.0]]))


def test_unit_sphere_h_identity():
    s = as_immersion(RoundSphere(2, 1.0))
    for pt in sample_manifold(s):
        # outward-or-inward normal: h = +-I
        hh = pt.h.coeffs[0] * np.sign(pt.h.coeffs[0, 0, 0])
        np.testing.assert_allclose(hh, np.eye(2), atol=1e-4)


def test_clifford_torus_principal_curvatures():
    r = 1 / np.sqrt(2)
    s = spec([f"{r}*cos(u1)", f"{r}*sin(u1)", f"{r}*cos(u2)", f"{r}*sin(u2)"],
             [(0, 2 * np.pi), (0, 2 * np.pi)], ambient=SPHERE)
    for pt in sample_manifold(s):
        np.testing.assert_allclose(np.sort(np.linalg.eigvalsh(pt.h.coeffs[0])), [-1, 1], atol=1e-4)


def test_flat_plane():
    s = spec(["u1 + u2", "u1 - u2", "2*u1 + 1"], [(-1, 1), (-1, 1)])
    for pt in sample_manifold(s):
        assert np.abs(pt.h.coeffs).max() <= 1e-9


def test_point_data_frames_orthogonal():
    pt = second_fundamental_form_at(as_immersion(CliffordProduct(3, 0.7)), [0.9, 1.2, 2.0])
    F = np.vstack([pt.tangent_frame, pt.normal_frame])
    np.testing.assert_allclose(F @ F.T, np.eye(4), atol=1e-10)
    assert abs(pt.normal_frame[0] @ pt.position) < 1e-10
    assert pt.metric_cond >= 1.0


def test_off_sphere_rejected():
    s = spec(["cos(u1)", "sin(u1)", "u2", "0"], [(0, 1), (0, 1)], ambient=SPHERE)
    with pytest.raises(ImmersionError):
        second_fundamental_form_at(s, [0.5, 0.5])


def test_curve_has_no_form():
    s = spec(["cos(u1)", "sin(u1)"], [(-1, 1)])
    with pytest.raises(ImmersionError):
        second_fundamental_form_at(s, [0.0])


def test_sample_counts_and_order():
    s = spec(["u1", "u2", "u1*u2"], [(0, 1), (0, 1)], grid=3)
    assert len(sample_manifold(s)) == 1
    np.testing.assert_allclose(grid_nodes(s), [[0.5, 0.5]])
    s5 = spec(["u1", "u2", "u1*u2"], [(0, 1), (0, 2)], grid=5)
    nodes = grid_nodes(s5)
    assert len(nodes) == 9
    np.testing.assert_allclose(nodes[:3], [[0.25, 0.5], [0.25, 1.0], [0.25, 1.5]])
    with pytest.raises(ValueError):
        sample_manifold(spec(["u1", "u2", "0"], [(0, 1), (0, 1)], grid=2))


def test_sphere_nodes_homogeneous():
    pts = sample_manifold(as_immersion(RoundSphere(3, 2.0)))
    S = [pt.h.S for pt in pts]
    H = [pt.h.H for pt in pts]
    assert max(S) - min(S) <= 1e-6 and max(H) - min(H) <= 1e-6


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cylinder_lambda_margin_zero(n):
    pts = sample_manifold(as_immersion(SphericalCylinder(n, 1.0), grid=4))
    for pt in pts:
        margin = pt.h.S - n * n * pt.h.H**2 / (n - 1)
        assert abs(margin) <= 1e-5


def _square_eigs(h):
    M = np.einsum("aij,ajk->ik", h.coeffs, h.coeffs)
    return np.linalg.eigvalsh(M)


@pytest.mark.parametrize("model", [RoundSphere(2, 1.0), RoundSphere(3, 1.5), SphericalCylinder(3, 0.8),
                                   CliffordProduct(2, 1.0), CliffordProduct(3, 0.6)])
def test_numeric_matches_exact(model):
    h_ex, _ = exact_h(model)
    for pt in sample_manifold(as_immersion(model, grid=4)):
        assert pt.h.S == pytest.approx(h_ex.S, abs=1e-4)
        assert pt.h.H == pytest.approx(h_ex.H, abs=1e-4)
        np.testing.assert_allclose(_square_eigs(pt.h), _square_eigs(h_ex), atol=1e-4)


def test_second_order_convergence():
    model = CliffordProduct(2, 0.7)
    s = as_immersion(model)
    u = np.array([1.1, 2.3])
    h_ex, _ = exact_h(model)
    errs = []
    for step in (1e-2, 5e-3, 2.5e-3):
        pt = second_fundamental_form_at(s, u, step, richardson=False)
        errs.append(abs(pt.h.S - h_ex.S))
    for a, b in zip(errs, errs[1:]):
        assert 3.5 < a / b < 4.5
