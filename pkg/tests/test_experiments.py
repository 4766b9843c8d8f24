"""Reduced-scale versions of the reference simulation experiments.

These are qualitative attractor checks: non-symmetric initial data in the
continuum regimes heads toward a non-even steady state (an endpoint of the
family in the connected regime, an interior point in the split-endpoint
window), while the weighted first moment decays at the exact rate.
"""

import numpy as np
import pytest

from muskat.fvm import Grid, SimConfig, init_state, l2_distance, run
from muskat.params import FluidParams, thresholds
from muskat.profiles import connected_profile, continue_curve, even_profile


def bump(c, a):
    return lambda x: np.maximum(0.0, 0.75 / a * (1.0 - ((np.asarray(x) - c) / a) ** 2))


def test_endpoint_attractor_connected_regime():
    # R = 4, R_mu = 0.7 sits below the small threshold: the family endpoints
    # have connected supports, and skewed data slides toward one of them
    p = FluidParams(4.0, 0.7, 1.0)
    assert p.R_mu <= thresholds(p).r_m
    endpoint = connected_profile(p, "right")
    grid = Grid(n_cells=200)
    state = init_state((bump(0.6, 1.4), bump(-0.4, 1.1)), grid, renormalize=True)
    cfg = SimConfig(grid=grid, params=p, t_end=3.0, dt=2e-5, record_every=15000)
    rep = run(cfg, state)
    dists = [l2_distance(s, endpoint) for s in rep.states]
    assert all(b < a + 1e-3 for a, b in zip(dists[:-1], dists[1:]))
    assert dists[-1] < 0.5 * dists[0]
    # and it is the non-symmetric state, not the even one, that attracts
    assert dists[-1] < l2_distance(rep.states[-1], even_profile(p))


def test_interior_curve_point_attractor():
    # R = 4, R_mu = 2 lies in the split-endpoint window; the trajectory's
    # first moment dies at rate -1/3 and the state settles along the curve
    # away from the even point
    p = FluidParams(4.0, 2.0, 1.0)
    th = thresholds(p)
    assert th.r_m < p.R_mu < th.r_minus
    curve = continue_curve(p, 41)
    grid = Grid(n_cells=200)
    state = init_state((bump(0.5, 1.4), bump(-0.3, 1.1)), grid, renormalize=True)
    cfg = SimConfig(grid=grid, params=p, t_end=3.0, dt=2e-5, record_every=15000)
    rep = run(cfg, state)

    m1 = rep.data["M1"]
    assert abs(m1[-1]) == pytest.approx(abs(m1[0]) * np.exp(-3.0 / 3.0), rel=0.07)

    min_dists = [min(l2_distance(s, cp.profile) for cp in curve) for s in rep.states]
    assert all(b < a for a, b in zip(min_dists[:-1], min_dists[1:]))
    even_dist = l2_distance(rep.states[-1], even_profile(p))
    assert min_dists[-1] < even_dist
