"""Steady-profile constructions: even, connected, disconnected, curve."""

import math

import numpy as np
import pytest

from muskat.numerics import newton_solve, NewtonConfig
from muskat.params import FluidParams, dual_params, thresholds
from muskat.profiles import (
    ContinuationStallError,
    InvalidZetaError,
    PiecewiseQuadratic,
    ProfilePair,
    RegimeError,
    boundary_disconnected_profile,
    boundary_zeta,
    connected_profile,
    connected_quadruple,
    continue_curve,
    curve_energy_closed_form,
    curve_jacobian_det,
    dual_transform,
    even_profile,
    integrate_moments,
    profile_from_zeta,
    profile_to_dict,
    reflect,
    residuals_R1,
    residuals_R2,
    residuals_d1,
    residuals_d2,
    residuals_eq41_43,
    residuals_eq51_53,
    sample_profile,
    solve_even_case3,
    solve_even_case4,
    solve_even_case4_direct,
    steady_residual,
    steady_residual_fields,
    xi0,
    xi3,
    _R1_newton_funcs,
)

P1 = FluidParams(1.0, 1.0, 1.0)
TH1 = thresholds(P1)

CBRT_13_5 = 2.381101577952299   # 13.5 ** (1/3)
CBRT_9 = 2.080083823051904      # 9 ** (1/3)
CBRT_18 = 2.6207413942088964    # 18 ** (1/3)
CBRT_0_9 = 0.9654893846056297   # 0.9 ** (1/3)
CBRT_5_625 = 1.7784466522450313
CBRT_45 = 3.5568933044900626


# ----------------------------------------------------------------------
# piecewise-quadratic plumbing
# ----------------------------------------------------------------------


def test_moments_of_indicator():
    q = PiecewiseQuadratic.from_pieces([(-1.0, 1.0, 0.5, 0.0)])
    assert integrate_moments(q, 0) == pytest.approx(1.0, abs=1e-15)
    assert integrate_moments(q, 1) == 0.0
    assert integrate_moments(q, 2) == pytest.approx(1.0 / 3.0, rel=1e-15)
    with pytest.raises(ValueError):
        integrate_moments(q, 3)


def test_even_profile_moments():
    pp = even_profile(FluidParams(1.0, 1.5, 1.0))
    assert integrate_moments(pp.F, 0) == pytest.approx(1.0, abs=1e-12)
    assert integrate_moments(pp.G, 0) == pytest.approx(1.0, abs=1e-12)
    assert integrate_moments(pp.F, 1) == pytest.approx(0.0, abs=1e-14)


def test_scaled_preserves_mass():
    q = even_profile(FluidParams(1.0, 2.0, 1.0)).G
    assert q.scaled(1.7).mass() == pytest.approx(q.mass(), rel=1e-14)


def test_pair_requires_unit_masses():
    # a single-fluid parabolic blob with an empty partner is not admissible
    a = (4.5) ** (1 / 3)
    F = PiecewiseQuadratic.from_pieces([(-math.sqrt(6 * a), math.sqrt(6 * a), a, -1 / 6.0)])
    G = PiecewiseQuadratic.from_pieces([(-1.0, 1.0, 0.0, 0.0)])
    with pytest.raises(ValueError):
        ProfilePair(F=F, G=G, params=P1)


# ----------------------------------------------------------------------
# even profiles
# ----------------------------------------------------------------------


def test_even_case1_coincident():
    pp = even_profile(FluidParams(1.0, 1.5, 1.0))
    assert pp.label == "even-case1"
    (l, r, c0, c2), = pp.F.pieces
    assert r == pytest.approx(CBRT_13_5, rel=1e-14)
    assert pp.F.pieces == pp.G.pieces
    assert len(pp.support_F) == len(pp.support_G) == 1


def test_even_case2_nested():
    pp = even_profile(FluidParams(1.0, 2.0, 1.0))
    assert pp.label == "even-case2"
    assert pp.F.pieces[-1][1] == pytest.approx(CBRT_9, rel=1e-14)
    assert pp.G.pieces[-1][1] == pytest.approx(CBRT_18, rel=1e-14)
    assert pp.support_F == [(-CBRT_9, CBRT_9)]
    assert pp.support_G[0][0] == pytest.approx(-CBRT_18, rel=1e-14)


def test_even_case5_nested():
    pp = even_profile(FluidParams(1.0, 1.0 / 3.0, 1.0))
    assert pp.label == "even-case5"
    assert pp.G.pieces[-1][1] == pytest.approx(CBRT_0_9, rel=1e-14)
    assert pp.F.pieces[-1][1] == pytest.approx(CBRT_13_5, rel=1e-14)
    assert len(pp.support_F) == 1 and len(pp.support_G) == 1


def test_even_case3_at_threshold_closed_form():
    a, b, g = solve_even_case3(FluidParams(1.0, 5.0, 1.0))
    assert a == 0.0
    assert b == pytest.approx(CBRT_5_625, rel=1e-14)
    assert g == pytest.approx(CBRT_45, rel=1e-14)
    assert g == pytest.approx(2.0 * b, rel=1e-14)  # 45 = 8 * 5.625


def test_even_case3_interior():
    p = FluidParams(1.0, 10.0, 1.0)
    a, b, g = solve_even_case3(p)
    assert 0.0 < a < b < g
    assert residuals_eq41_43(p, a, b, g) < 1e-10

    # independent oracle: the scalar reduction has a single sign change
    R, Rmu, e2 = 1.0, 10.0, 1.0
    q, s = Rmu - R - 1.0, Rmu - R
    A1, B1 = 4.5 * Rmu * (1 + e2), q / (1 + R)
    A2, B2 = 4.5 * Rmu * e2 * math.sqrt(s), R * q * math.sqrt(s) / (1 + R)
    y2 = 2.0 / (9.0 * e2 * (1 + R))
    ys = np.linspace(y2, 50 * y2, 100_001)
    vals = np.cbrt(A1 * ys - B1) ** 2 - np.cbrt(A2 * ys + B2) ** 2 + q
    assert vals[0] > 0.0  # the bracket sanity value at the left end
    sgn = np.sign(vals)
    assert int(np.sum(sgn[:-1] != sgn[1:])) == 1
    assert y2 < a ** (-3) < 50 * y2


def test_even_case3_regime_guard():
    with pytest.raises(RegimeError):
        solve_even_case3(FluidParams(1.0, 2.0, 1.0))


def test_even_case3_support_topology():
    pp = even_profile(FluidParams(1.0, 10.0, 1.0))
    assert pp.label == "even-case3"
    assert len(pp.support_F) == 1
    assert len(pp.support_G) == 2
    (l1, r1), (l2, r2) = pp.support_G
    assert l1 == pytest.approx(-r2, rel=1e-14) and r1 == pytest.approx(-l2, rel=1e-14)
    assert r1 > 0.0 or l2 > 0.0  # inner gap around the origin


def test_even_case4_dual_window():
    p = FluidParams(1.0, 0.2, 1.0)
    p1, _ = dual_params(p)
    th1 = thresholds(p1)
    # the dual of the small threshold lands exactly on the dual r_plus
    assert p1.R_mu == pytest.approx(10.0, rel=1e-14)
    assert th1.r_plus == pytest.approx(10.0, rel=1e-14)
    a, b, g = solve_even_case4(p)
    assert a == pytest.approx(0.0, abs=1e-13)
    assert residuals_eq51_53(p, a, b, g) < 1e-10


def test_even_case4_interior():
    p = FluidParams(1.0, 0.1, 1.0)
    a, b, g = solve_even_case4(p)
    assert 0.0 < a < b < g
    assert residuals_eq51_53(p, a, b, g) < 1e-10
    pp = even_profile(p)
    assert len(pp.support_F) == 2
    assert len(pp.support_G) == 1


def test_even_case4_direct_matches_duality():
    for rmu in (0.05, 0.1, 0.15):
        p = FluidParams(1.0, rmu, 1.0)
        via_dual = solve_even_case4(p)
        direct = solve_even_case4_direct(p)
        assert max(abs(x - y) for x, y in zip(via_dual, direct)) < 1e-10


def test_even_case4_round_trip():
    # dualizing the split-G solution of the dual parameters reproduces
    # the direct split-F profile
    p = FluidParams(1.0, 0.1, 1.0)
    p1, _ = dual_params(p)
    via_dual = dual_transform(even_profile(p1))
    direct = even_profile(p)
    for q1, q2 in ((via_dual.F, direct.F), (via_dual.G, direct.G)):
        assert len(q1.pieces) == len(q2.pieces)
        for pc, qc in zip(q1.pieces, q2.pieces):
            assert max(abs(x - y) for x, y in zip(pc, qc)) < 1e-10


def test_even_profiles_all_regimes_verify():
    for rmu in (0.1, 0.2, 1.0 / 3.0, 1.0, 1.25, 1.5, 5.0 / 3.0, 2.0, 3.0, 5.0, 10.0):
        p = FluidParams(1.0, rmu, 1.0)
        pp = even_profile(p)
        assert abs(pp.F.mass() - 1.0) < 1e-10
        assert abs(pp.G.mass() - 1.0) < 1e-10
        assert steady_residual(pp) < 1e-9
        # evenness of the construction
        assert pp.F.moment(1) == pytest.approx(0.0, abs=1e-13)


def test_degenerate_parameter_lines():
    # R_mu = R and R_mu = R + 1 reduce a quadratic coefficient to zero
    pp = even_profile(FluidParams(1.0, 1.0, 1.0))  # R_mu = R, case 5
    mid = [pc for pc in pp.F.pieces if pc[0] < 0.0 < pc[1]]
    assert mid and mid[0][3] == 0.0
    pp = even_profile(FluidParams(1.0, 2.0, 1.0))  # R_mu = R + 1, case 2
    mid = [pc for pc in pp.G.pieces if pc[0] < 0.0 < pc[1]]
    assert mid and mid[0][3] == 0.0


# ----------------------------------------------------------------------
# connected non-symmetric profiles
# ----------------------------------------------------------------------


def test_connected_alpha_zero_exactly_at_threshold():
    p = FluidParams(1.0, TH1.r_M, 1.0)
    b1, a, b, g = connected_quadruple(p)
    assert a == 0.0
    assert -b1 > a
    assert residuals_d1(p, b1, a, b, g) < 1e-10


def test_connected_large_interior():
    p = FluidParams(1.0, 21.0, 1.0)
    b1, a, b, g = connected_quadruple(p)
    assert 0.0 < a and b1 < 0.0 and -b1 > a
    assert residuals_d1(p, b1, a, b, g) < 1e-10
    pp = connected_profile(p, "right")
    assert abs(pp.F.mass() - 1.0) < 1e-10
    assert abs(pp.G.mass() - 1.0) < 1e-10
    assert steady_residual(pp) < 1e-9
    assert len(pp.support_F) == 1 and len(pp.support_G) == 1


def test_connected_small_supports():
    p = FluidParams(1.0, 0.01, 1.0)
    pp = connected_profile(p, "right")
    (fl, fr), = pp.support_F
    (gl, gr), = pp.support_G
    assert fl >= 0.0 and gl < 0.0  # F sits right of the origin, G straddles it
    assert steady_residual(pp) < 1e-9
    b1, a, b, g = pp.G.pieces[0][0], pp.F.pieces[0][0], pp.G.pieces[-1][1], pp.F.pieces[-1][1]
    assert residuals_d2(p, b1, a, b, g) < 1e-10


def test_connected_rejected_in_gap():
    with pytest.raises(RegimeError):
        connected_profile(FluidParams(1.0, 3.0, 1.0))
    with pytest.raises(RegimeError):
        connected_profile(FluidParams(1.0, 0.1, 1.0))


def test_connected_sides_mirror():
    p = FluidParams(1.0, 21.0, 1.0)
    right = connected_profile(p, "right")
    left = connected_profile(p, "left")
    x = np.linspace(-8, 8, 1001)
    assert np.allclose(left.F(x), right.F(-x), atol=1e-14)
    assert np.allclose(left.G(x), right.G(-x), atol=1e-14)


# ----------------------------------------------------------------------
# boundary (alpha = 0) disconnected profiles
# ----------------------------------------------------------------------


def test_boundary_zeta_direct_window():
    p = FluidParams(1.0, 10.0, 1.0)
    z = boundary_zeta(p)
    g1, b1, a1, a, b, g = z
    assert g1 < b1 < a1 < 0.0 == a < b < g
    assert residuals_R1(p, z) < 1e-10


def test_boundary_zeta_t_value():
    z = boundary_zeta(FluidParams(1.0, 6.0, 1.0))
    assert z[5] / z[4] == pytest.approx(math.sqrt(5.0), rel=1e-13)


def test_xi3_endpoint_signs():
    # left end sign flips at the large threshold, right end at r_plus
    for rmu in (6.0, 8.0, 10.0, 12.0):
        y0 = -math.sqrt(2.0 * (rmu - 1.0) / rmu)
        assert xi3(rmu, -1.0, 1.0, 1.0) > 0.0  # rmu > r_plus
        assert xi3(rmu, y0, 1.0, 1.0) < 0.0    # rmu < r_M
    assert xi3(5.0, -1.0, 1.0, 1.0) == pytest.approx(0.0, abs=1e-12)
    y0M = -math.sqrt(2.0 * (TH1.r_M - 1.0) / TH1.r_M)
    assert xi3(TH1.r_M, y0M, 1.0, 1.0) == pytest.approx(0.0, abs=1e-9)
    assert xi3(21.0, -1.0, 1.0, 1.0) > 0.0
    assert xi3(21.0, -math.sqrt(2.0 * 20.0 / 21.0), 1.0, 1.0) > 0.0


def test_boundary_profile_dual_window():
    p = FluidParams(1.0, 0.1, 1.0)
    cp = boundary_disconnected_profile(p, "right")
    assert residuals_R2(p, cp.zeta) < 1e-10
    pp = cp.profile
    assert abs(pp.F.mass() - 1.0) < 1e-10
    assert abs(pp.G.mass() - 1.0) < 1e-10
    # one of alpha / alpha1 vanishes at a boundary state
    assert min(abs(cp.zeta[2]), abs(cp.zeta[3])) == 0.0
    assert len(pp.support_F) == 2


def test_boundary_profile_rejected_outside_window():
    for rmu in (5.0, TH1.r_M, 21.0, 2.0):
        with pytest.raises(RegimeError):
            boundary_disconnected_profile(FluidParams(1.0, rmu, 1.0))


def test_nonexistence_scan_xi3():
    # no sign change strictly between the bracket ends below r_plus
    for rmu in (2.0, 3.0, 4.0, 5.0):
        y0 = -math.sqrt(2.0 * (rmu - 1.0) / rmu)
        if y0 >= -1.0 - 1e-12:
            continue  # the admissible window (y0, -1) is empty at R_mu = R + 1
        ys = np.linspace(y0 + 1e-9, -1.0 - 1e-9, 10_000)
        vals = xi3(rmu, ys, 1.0, 1.0)
        sgn = np.sign(vals)
        assert int(np.sum(sgn[:-1] != sgn[1:])) == 0


def test_nonexistence_scan_xi0():
    # the connected-profile reduction has no zero below the large threshold
    for rmu in (2.5, 5.0, 8.0, 12.0):
        zs = np.linspace(0.0, 1.0 - 1e-9, 10_000)
        vals = xi0(rmu, zs, 1.0, 1.0)
        assert np.max(vals) < 0.0


# ----------------------------------------------------------------------
# profiles from sextuplets
# ----------------------------------------------------------------------


def test_zeta_symmetric_equals_even():
    p = FluidParams(1.0, 10.0, 1.0)
    a, b, g = solve_even_case3(p)
    pp = profile_from_zeta(p, (-g, -b, -a, a, b, g))
    ev = even_profile(p)
    x = np.linspace(-6, 6, 2001)
    assert np.allclose(pp.F(x), ev.F(x), atol=1e-12)
    assert np.allclose(pp.G(x), ev.G(x), atol=1e-12)


def test_zeta_collapsed_equals_connected():
    p = FluidParams(1.0, 21.0, 1.0)
    b1, a, b, g = connected_quadruple(p)
    pp = profile_from_zeta(p, (b1, b1, b1, a, b, g))
    cn = connected_profile(p, "right")
    x = np.linspace(-8, 8, 2001)
    assert np.allclose(pp.F(x), cn.F(x), atol=1e-12)
    assert np.allclose(pp.G(x), cn.G(x), atol=1e-12)


def test_zeta_rejects_garbage():
    p = FluidParams(1.0, 10.0, 1.0)
    with pytest.raises(InvalidZetaError):
        profile_from_zeta(p, (-3.0, -2.0, -1.0, 1.0, 2.0, 3.0))
    with pytest.raises(InvalidZetaError):
        profile_from_zeta(p, (-3.0, -2.0, 1.0, -1.0, 2.0, 3.0))


# ----------------------------------------------------------------------
# reflection and duality
# ----------------------------------------------------------------------


def test_reflect_even_identity():
    pp = even_profile(FluidParams(1.0, 2.0, 1.0))
    rr = reflect(pp)
    assert rr.F.pieces == pp.F.pieces
    assert rr.G.pieces == pp.G.pieces


def test_reflect_involution():
    pp = connected_profile(FluidParams(1.0, 21.0, 1.0))
    rr = reflect(reflect(pp))
    assert rr.F.pieces == pp.F.pieces
    assert rr.zeta == pp.zeta


def test_dual_mass_preserved():
    pp = even_profile(FluidParams(1.0, 10.0, 1.0))
    dd = dual_transform(pp)
    assert dd.F.mass() == pytest.approx(1.0, abs=1e-12)
    assert dd.G.mass() == pytest.approx(1.0, abs=1e-12)


def test_dual_involution():
    for rmu in (0.1, 2.0, 10.0):
        pp = even_profile(FluidParams(1.0, rmu, 1.0))
        dd = dual_transform(dual_transform(pp))
        for q1, q2 in ((pp.F, dd.F), (pp.G, dd.G)):
            for pc, qc in zip(q1.pieces, q2.pieces):
                assert max(abs(x - y) for x, y in zip(pc, qc)) < 1e-12


def test_dual_zeta_transfers():
    pp = even_profile(FluidParams(1.0, 10.0, 1.0))
    dd = dual_transform(pp)
    assert dd.zeta is not None
    assert residuals_R2(dd.params, dd.zeta) < 1e-8


# ----------------------------------------------------------------------
# steady residual as a detector
# ----------------------------------------------------------------------


def test_constructed_profiles_steady():
    for rmu in (0.1, 1.0, 2.0, 10.0):
        pp = even_profile(FluidParams(1.0, rmu, 1.0))
        assert steady_residual(pp) < 1e-9


def _pressure_constant_on_supports(pp):
    # global form of steadiness: each pressure is constant on every
    # connected component of its positivity set, not just stationary at
    # sampled points
    p = pp.params
    e2 = p.eta**2
    for q, coef_f, coef_g in ((pp.F, e2 * (1.0 + p.R), p.R),
                              (pp.G, e2 * p.R_mu, p.R_mu)):
        for lo, hi in q.supports():
            x = np.linspace(lo + 1e-9, hi - 1e-9, 2001)
            pressure = coef_f * pp.F(x) + coef_g * pp.G(x) + x**2 / 6.0
            if np.max(q(x)) <= 0.0:
                continue
            spread = np.max(pressure) - np.min(pressure)
            assert spread < 1e-10, f"pressure varies by {spread:.2e} on [{lo}, {hi}]"


def test_pressure_constant_on_each_component():
    for rmu in (0.1, 1.0 / 3.0, 1.5, 2.0, 10.0):
        _pressure_constant_on_supports(even_profile(FluidParams(1.0, rmu, 1.0)))
    _pressure_constant_on_supports(connected_profile(FluidParams(1.0, 21.0, 1.0)))
    _pressure_constant_on_supports(connected_profile(FluidParams(1.0, 0.01, 1.0)))
    _pressure_constant_on_supports(
        boundary_disconnected_profile(FluidParams(1.0, 10.0, 1.0)).profile)
    for cp in continue_curve(FluidParams(1.0, 10.0, 1.0), 9):
        _pressure_constant_on_supports(cp.profile)


def test_perturbation_detected():
    pp = even_profile(FluidParams(1.0, 2.0, 1.0))
    l, r, c0, c2 = pp.F.pieces[0]
    F_bad = PiecewiseQuadratic.from_pieces([(l, r, c0, c2 * (1.0 + 1e-3))])
    res = steady_residual_fields(F_bad, pp.G, pp.params)
    assert res > 1e-5


# ----------------------------------------------------------------------
# continuation curve
# ----------------------------------------------------------------------


def test_newton_converges_fast_near_curve_point():
    p = FluidParams(1.0, 10.0, 1.0)
    curve = continue_curve(p, 21)
    cp = curve[8]
    g1, b1, a1, a, b, g = cp.zeta
    F, J = _R1_newton_funcs(p, a1)
    start = np.array([g1, b1, a, b, g]) * (1.0 + 1e-3)
    iterations = 0
    x = start.copy()
    while np.max(np.abs(F(x))) > 1e-12:
        x = x + np.linalg.solve(J(x), -F(x))
        iterations += 1
        assert iterations <= 6
    assert np.allclose(x, [g1, b1, a, b, g], rtol=1e-9)


def test_curve_direct_regime():
    p = FluidParams(1.0, 10.0, 1.0)
    curve = continue_curve(p, 51)
    assert len(curve) == 51
    ells = [cp.ell for cp in curve]
    assert ells == sorted(ells)
    assert any(e == 0.0 for e in ells)
    # even point sits at ell = 0
    cp0 = next(cp for cp in curve if cp.ell == 0.0)
    ev = even_profile(p)
    x = np.linspace(-6, 6, 801)
    assert np.allclose(cp0.profile.F(x), ev.F(x), atol=1e-12)
    # endpoints are the alpha = 0 boundary solutions
    z_lo = np.array(curve[0].zeta)
    z_ref = np.array(boundary_disconnected_profile(p, "right").zeta)
    assert np.max(np.abs(z_lo - z_ref)) < 1e-9
    # reflection pairing of the endpoints
    z_hi = np.array(curve[-1].zeta)
    assert np.max(np.abs(z_hi + z_lo[::-1])) < 1e-9
    # interior points satisfy the system
    for cp in curve[1:-1]:
        assert residuals_R1(p, cp.zeta) < 1e-10


def test_curve_connected_endpoints():
    p = FluidParams(1.0, 21.0, 1.0)
    curve = continue_curve(p, 51)
    b1, a, b, g = connected_quadruple(p)
    z = curve[0].zeta
    assert max(abs(z[0] - b1), abs(z[1] - b1), abs(z[2] - b1),
               abs(z[3] - a), abs(z[4] - b), abs(z[5] - g)) < 1e-9
    # the endpoint profile equals the connected profile
    cn = connected_profile(p, "right")
    x = np.linspace(-8, 8, 801)
    assert np.allclose(curve[0].profile.F(x), cn.F(x), atol=1e-9)
    assert np.allclose(curve[0].profile.G(x), cn.G(x), atol=1e-9)


def test_curve_dual_regime():
    p = FluidParams(1.0, 0.1, 1.0)
    curve = continue_curve(p, 31)
    assert any(cp.ell == 0.0 for cp in curve)
    for cp in curve:
        assert residuals_R2(p, cp.zeta) < 1e-9
    z_lo, z_hi = np.array(curve[0].zeta), np.array(curve[-1].zeta)
    assert np.max(np.abs(z_hi + z_lo[::-1])) < 1e-9
    # boundary states have a vanishing inner contact point
    assert min(abs(z_lo[2]), abs(z_lo[3])) < 1e-12


def test_boundary_sides_match_curve_ends():
    for rmu in (10.0, 0.1):
        p = FluidParams(1.0, rmu, 1.0)
        curve = continue_curve(p, 21)
        right = boundary_disconnected_profile(p, "right")
        left = boundary_disconnected_profile(p, "left")
        assert right.ell == pytest.approx(curve[0].ell, abs=1e-12)
        assert left.ell == pytest.approx(curve[-1].ell, abs=1e-12)
        assert np.max(np.abs(np.array(left.zeta) - np.array(curve[-1].zeta))) < 1e-12
        assert np.max(np.abs(np.array(right.zeta) - np.array(curve[0].zeta))) < 1e-12


def test_curve_near_thresholds():
    # tiny windows just outside the unique-even band, both sides of r_M,
    # and extreme viscosity ratios
    from muskat.functionals import energy_along_curve
    for rmu in (5.0005, TH1.r_M * 0.99999, TH1.r_M * 1.00001,
                0.2 * 0.9999, TH1.r_m * 1.0001, 500.0, 1e-4):
        p = FluidParams(1.0, rmu, 1.0)
        curve = continue_curve(p, 15)
        pairs = energy_along_curve(curve, tol=1e-8)
        es = np.array([e for _, e in pairs])
        assert pairs[int(np.argmin(es))][0] == 0.0
        assert curve[0].ell < 0.0 < curve[-1].ell


def test_curve_regime_guard():
    with pytest.raises(RegimeError):
        continue_curve(FluidParams(1.0, 1.0, 1.0))
    with pytest.raises(RegimeError):
        continue_curve(FluidParams(1.0, 5.0, 1.0))


def test_curve_reflection_symmetry_interior():
    p = FluidParams(1.0, 10.0, 1.0)
    curve = continue_curve(p, 21)
    cp = curve[5]
    target = tuple(-z for z in reversed(cp.zeta))
    # solve the system at the reflected parameter value and compare
    F, J = _R1_newton_funcs(p, target[2])
    guess = np.array([target[0], target[1], target[3], target[4], target[5]])
    x = newton_solve(F, J, guess * (1 + 1e-6), NewtonConfig(tol=1e-13))
    assert np.max(np.abs(x - guess)) < 1e-9


def test_jacobian_determinant_formula_matches_numeric():
    p = FluidParams(1.0, 10.0, 1.0)
    a, b, g = solve_even_case3(p)
    zeta = (-g, -b, -a, a, b, g)
    formula = curve_jacobian_det(p, zeta)
    assert formula > 0.0
    F, J = _R1_newton_funcs(p, -a)
    numeric = abs(np.linalg.det(J(np.array([-g, -b, a, b, g]))))
    assert formula == pytest.approx(numeric, rel=1e-10)


def test_curve_energy_closed_form_matches_m2():
    from muskat.functionals import evaluate
    p = FluidParams(1.0, 10.0, 1.0)
    curve = continue_curve(p, 11)
    for cp in curve:
        rep = evaluate(cp.profile, p)
        closed = curve_energy_closed_form(p, cp.zeta)
        assert closed == pytest.approx(rep.m2 / 2.0, abs=1e-9)


# ----------------------------------------------------------------------
# structural invariants
# ----------------------------------------------------------------------


def test_support_interval_contains_origin():
    # for R_mu > R the F-support is one interval containing 0, and dually
    for rmu in (10.0, 21.0):
        pp = connected_profile(FluidParams(1.0, rmu, 1.0)) if rmu >= TH1.r_M \
            else even_profile(FluidParams(1.0, rmu, 1.0))
        (l, r), = pp.support_F
        assert l < 0.0 < r
    for rmu in (0.01, 0.1):
        pp = even_profile(FluidParams(1.0, rmu, 1.0))
        (l, r), = pp.support_G
        assert l < 0.0 < r


def test_serialization_round_trip_fields():
    pp = connected_profile(FluidParams(1.0, 21.0, 1.0))
    d = profile_to_dict(pp)
    assert d["params"]["R_mu"] == 21.0
    assert len(d["F"]) == len(pp.F.pieces)
    assert d["support_G"] == [list(iv) for iv in pp.support_G]
    rows = sample_profile(pp, n=101)
    assert rows.shape == (101, 4)
    assert np.allclose(rows[:, 3], pp.params.eta**2 * rows[:, 1] + rows[:, 2])
