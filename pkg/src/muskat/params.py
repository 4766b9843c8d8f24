"""Fluid parameters, regime thresholds, classification, and parameter duality.

The two-layer system is governed by three dimensionless numbers: a density
ratio ``R``, a viscosity-weighted ratio ``R_mu``, and a mass ratio ``eta``.
Once (R, eta) are fixed, five critical values of R_mu partition parameter
space into regimes with qualitatively different steady states:

* ``r0``, ``r_plus``, ``r_minus`` have closed forms,
* ``r_M`` is the unique root of an auxiliary scalar function on (1, oo)
  (shifted by R),
* ``r_m`` follows from ``r_M`` of the dual parameter set.

They always order as  r_m < r_minus < r0 < r_plus < r_M.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .numerics import RootConfig, find_root_bracketed

__all__ = [
    "FluidParams",
    "PhysicalFluids",
    "RegimeThresholds",
    "EvenCase",
    "ContinuumClass",
    "Regime",
    "from_physical",
    "thresholds",
    "classify_regime",
    "dual_params",
    "xi2",
    "threshold_residual_large",
    "threshold_residual_small",
]

_ROOT_CFG = RootConfig(rel_tol=4e-16, abs_tol=1e-15, max_iter=200)


@dataclass(frozen=True)
class FluidParams:
    """Dimensionless parameter triple (R, R_mu, eta), all positive."""

    R: float
    R_mu: float
    eta: float

    def __post_init__(self):
        for name in ("R", "R_mu", "eta"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be a positive finite number, got {v!r}")

    @property
    def theta(self) -> float:
        """Weight of the second component in the moment functionals."""
        return self.R / (self.eta**2 * self.R_mu)


@dataclass(frozen=True)
class PhysicalFluids:
    """Dimensional description: densities, viscosities and layer masses.

    The denser fluid (subscript minus) sits below the lighter one.
    """

    rho_minus: float
    rho_plus: float
    mu_minus: float
    mu_plus: float
    f0_mass: float
    g0_mass: float

    def __post_init__(self):
        for name in ("rho_minus", "rho_plus", "mu_minus", "mu_plus", "f0_mass", "g0_mass"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive and finite, got {v!r}")
        if self.rho_minus <= self.rho_plus:
            raise ValueError(
                "model requires the denser fluid beneath: rho_minus > rho_plus "
                f"(got {self.rho_minus} <= {self.rho_plus})"
            )


@dataclass(frozen=True)
class RegimeThresholds:
    """The five critical viscosity ratios for fixed (R, eta)."""

    r_m: float
    r_minus: float
    r0: float
    r_plus: float
    r_M: float

    def ordered(self) -> tuple[float, float, float, float, float]:
        return (self.r_m, self.r_minus, self.r0, self.r_plus, self.r_M)


class EvenCase(enum.Enum):
    """Which of the five even-profile constructions applies."""

    CASE1 = 1  # R_mu == r0: F and G coincide on one interval
    CASE2 = 2  # r0 < R_mu < r_plus: nested intervals, F inside G
    CASE3 = 3  # R_mu >= r_plus: G disconnected (two side blobs)
    CASE4 = 4  # R_mu <= r_minus: F disconnected (two side blobs)
    CASE5 = 5  # r_minus < R_mu < r0: nested intervals, G inside F


class ContinuumClass(enum.Enum):
    UNIQUE_EVEN = "unique-even"
    CONNECTED_ENDPOINTS = "continuum-connected-endpoints"
    DISCONNECTED_ENDPOINTS = "continuum-disconnected-endpoints"


@dataclass(frozen=True)
class Regime:
    even_case: EvenCase
    continuum: ContinuumClass


def from_physical(phys: PhysicalFluids) -> FluidParams:
    """Reduce a dimensional fluid configuration to (R, R_mu, eta)."""
    R = phys.rho_plus / (phys.rho_minus - phys.rho_plus)
    mu = phys.mu_minus / phys.mu_plus
    eta = math.sqrt(phys.f0_mass / phys.g0_mass)
    return FluidParams(R=R, R_mu=mu * R, eta=eta)


def xi2(t: float, R: float, eta: float) -> float:
    """Scalar function whose unique zero on (1, oo) locates r_M - R."""
    return math.sqrt(t) * (eta**2 - math.sqrt((1.0 + R) / (t + R))) - 1.0 - eta**2


def _t_M(R: float, eta: float) -> float:
    """Unique zero of xi2 on (1, oo), bracketed then solved by Brent."""
    eps = 1e-9
    a = 1.0 + eps
    # xi2 decreases up to t2 then increases to +oo; start past the minimum.
    t2 = R ** (2.0 / 3.0) * (1.0 + R) ** (1.0 / 3.0) / eta ** (4.0 / 3.0) - R
    b = max(2.0, t2) + 1.0
    fa = xi2(a, R, eta)
    while xi2(b, R, eta) <= 0.0:
        b *= 2.0
        if b > 1e30:
            raise RuntimeError("failed to bracket the large-threshold root")
    if fa >= 0.0:
        # cannot happen for valid parameters (xi2(1+) = -2); defensive only
        raise RuntimeError("unexpected sign of xi2 at the left bracket end")
    return find_root_bracketed(lambda t: xi2(t, R, eta), a, b, _ROOT_CFG)


def threshold_residual_large(r_M: float, R: float, eta: float) -> float:
    """Residual of r_M in its defining equation."""
    return math.sqrt(r_M - R) * (eta**2 - math.sqrt((1.0 + R) / r_M)) - 1.0 - eta**2


def threshold_residual_small(r_m: float, R: float, eta: float) -> float:
    """Residual of r_m in its defining equation."""
    c = eta**2 * (1.0 + R) / R
    return math.sqrt(1.0 + R - r_m) * (math.sqrt(R / r_m) - c) - 1.0 - c


def thresholds(p: FluidParams) -> RegimeThresholds:
    """All five critical viscosity ratios for the parameter pair (R, eta).

    r_m is constructed from r_M of the dual parameters; its residual in the
    direct defining equation is asserted below 1e-10 as a cross-check.
    """
    R, eta = p.R, p.eta
    e2 = eta**2
    r0 = R + e2 / (1.0 + e2)
    r_plus = R + ((1.0 + e2) / e2) ** 2
    r_minus = R**3 * (1.0 + R) / (R**3 + (e2 * (1.0 + R) + R) ** 2)
    r_M = R + _t_M(R, eta)
    eta1 = math.sqrt(R / (1.0 + R)) / eta
    r_m = R * (1.0 + R) / (R + _t_M(R, eta1))
    res_M = threshold_residual_large(r_M, R, eta)
    res_m = threshold_residual_small(r_m, R, eta)
    if abs(res_M) > 1e-10 or abs(res_m) > 1e-10:
        raise RuntimeError(f"threshold residuals too large: {res_M:.3e}, {res_m:.3e}")
    return RegimeThresholds(r_m=r_m, r_minus=r_minus, r0=r0, r_plus=r_plus, r_M=r_M)


def classify_regime(p: FluidParams) -> Regime:
    """Even-profile case and continuum class for the given parameters.

    Threshold equalities are classified to the closed-interval side: R_mu
    equal to r_plus (resp. r_minus) falls in CASE3 (resp. CASE4) with a
    degenerate inner contact point, and R_mu equal to r_M (resp. r_m) gives
    connected endpoint profiles.
    """
    th = thresholds(p)
    R_mu = p.R_mu
    if R_mu >= th.r_plus:
        even = EvenCase.CASE3
    elif R_mu <= th.r_minus:
        even = EvenCase.CASE4
    elif R_mu == th.r0:
        even = EvenCase.CASE1
    elif R_mu > th.r0:
        even = EvenCase.CASE2
    else:
        even = EvenCase.CASE5

    if th.r_minus <= R_mu <= th.r_plus:
        cont = ContinuumClass.UNIQUE_EVEN
    elif R_mu <= th.r_m or R_mu >= th.r_M:
        cont = ContinuumClass.CONNECTED_ENDPOINTS
    else:
        cont = ContinuumClass.DISCONNECTED_ENDPOINTS
    return Regime(even_case=even, continuum=cont)


def dual_params(p: FluidParams) -> tuple[FluidParams, float]:
    """Dual parameter triple and the spatial scale of the duality map.

    Swapping the roles of the two fluids sends (R, R_mu, eta) to
    (R, R(1+R)/R_mu, sqrt(R/(1+R))/eta); profiles transform through the
    dilation factor lambda = (eta^2 R_mu / R)^(1/3).  The map is an
    involution and exchanges the large- and small-R_mu regimes.
    """
    R, R_mu, eta = p.R, p.R_mu, p.eta
    R_mu1 = R * (1.0 + R) / R_mu
    eta1 = math.sqrt(R / (1.0 + R)) / eta
    lam = (eta**2 * R_mu / R) ** (1.0 / 3.0)
    return FluidParams(R=R, R_mu=R_mu1, eta=eta1), lam
