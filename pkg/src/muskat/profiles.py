"""Exact steady-profile constructions for the rescaled thin-film system.

Every steady state is piecewise quadratic in x with even powers only, so a
profile is stored symbolically as a list of intervals carrying (c0, c2)
coefficients.  Norms, moments and energies are then exact, which is what
lets the verification tolerances sit near machine precision.

The constructions follow three routes:

* even profiles: five parameter regimes, two of them with closed-form
  support radii, two reduced to a single monotone scalar equation (one
  directly, one through the fluid-swap duality), and one degenerate;
* non-symmetric profiles with connected supports: a scalar equation for the
  support ratio, solved on [0, 1);
* non-symmetric profiles with one disconnected support: an underdetermined
  five-equation polynomial system traced as a one-parameter curve by Newton
  continuation from the even solution, with endpoints snapped to the
  boundary constructions above.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .numerics import (
    NewtonConfig,
    NumericsError,
    RootConfig,
    find_root_bracketed,
    newton_solve,
)
from .params import (
    ContinuumClass,
    EvenCase,
    FluidParams,
    classify_regime,
    dual_params,
    thresholds,
)

__all__ = [
    "Piece",
    "PiecewiseQuadratic",
    "ProfilePair",
    "CurvePoint",
    "RegimeError",
    "InvalidZetaError",
    "ContinuationStallError",
    "even_profile",
    "solve_even_case3",
    "solve_even_case4",
    "solve_even_case4_direct",
    "connected_profile",
    "connected_quadruple",
    "boundary_disconnected_profile",
    "boundary_zeta",
    "continue_curve",
    "profile_from_zeta",
    "reflect",
    "dual_transform",
    "integrate_moments",
    "steady_residual",
    "steady_residual_fields",
    "xi0",
    "xi3",
    "residuals_eq41_43",
    "residuals_eq51_53",
    "residuals_d1",
    "residuals_d2",
    "residuals_R1",
    "residuals_R2",
    "curve_energy_closed_form",
    "curve_jacobian_det",
    "profile_to_dict",
    "sample_profile",
]

_ROOT_CFG = RootConfig(rel_tol=4e-16, abs_tol=1e-15, max_iter=200)
_NEWTON_CFG = NewtonConfig(tol=1e-12, max_iter=60)

_CONTINUITY_TOL = 1e-10
_MASS_TOL = 1e-10
_STEADY_TOL = 1e-9
_SYSTEM_TOL = 1e-10


def _system_tol(p: FluidParams) -> float:
    # the algebraic systems carry terms of size ~ 9 R_mu (1+R)(1+eta^2);
    # keep the absolute floor but stay a safe factor above float64 there
    scale = 9.0 * p.R_mu * (1.0 + p.R) * (1.0 + p.eta**2)
    return max(_SYSTEM_TOL, 5e-14 * scale)


class RegimeError(Exception):
    """Requested construction does not exist for these parameters."""


class InvalidZetaError(Exception):
    """Sextuplet fails the algebraic system or the ordering constraints."""


class ContinuationStallError(NumericsError):
    """Newton continuation failed repeatedly at the minimal step."""


# ----------------------------------------------------------------------
# piecewise-quadratic representation
# ----------------------------------------------------------------------

Piece = tuple[float, float, float, float]  # (l, r, c0, c2): c0 + c2*x^2 on [l, r]


def _clean_pieces(pieces: Iterable[Sequence[float]]) -> tuple[Piece, ...]:
    kept = []
    scale = max([1.0] + [max(abs(p[0]), abs(p[1])) for p in pieces]) if pieces else 1.0
    for l, r, c0, c2 in pieces:
        if r - l > 1e-14 * max(scale, 1.0):
            kept.append((float(l), float(r), float(c0), float(c2)))
    kept.sort(key=lambda p: p[0])
    return tuple(kept)


@dataclass(frozen=True)
class PiecewiseQuadratic:
    """Even-power quadratic segments; the function is zero off all pieces."""

    pieces: tuple[Piece, ...]

    @staticmethod
    def from_pieces(pieces: Iterable[Sequence[float]]) -> "PiecewiseQuadratic":
        return PiecewiseQuadratic(_clean_pieces(list(pieces)))

    # -- evaluation --------------------------------------------------

    def __call__(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        out = np.zeros_like(x)
        todo = np.ones_like(x, dtype=bool)
        for l, r, c0, c2 in self.pieces:
            m = todo & (x >= l) & (x <= r)
            out[m] = c0 + c2 * x[m] ** 2
            todo &= ~m
        return out

    def derivative(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        out = np.zeros_like(x)
        todo = np.ones_like(x, dtype=bool)
        for l, r, c0, c2 in self.pieces:
            m = todo & (x >= l) & (x <= r)
            out[m] = 2.0 * c2 * x[m]
            todo &= ~m
        return out

    # -- exact integrals ---------------------------------------------

    def moment(self, k: int) -> float:
        """Exact integral of x^k times the function, k in {0, 1, 2}."""
        if k not in (0, 1, 2):
            raise ValueError("moment order must be 0, 1 or 2")
        total = 0.0
        for l, r, c0, c2 in self.pieces:
            if k == 0:
                total += c0 * (r - l) + c2 * (r**3 - l**3) / 3.0
            elif k == 1:
                total += c0 * (r**2 - l**2) / 2.0 + c2 * (r**4 - l**4) / 4.0
            else:
                total += c0 * (r**3 - l**3) / 3.0 + c2 * (r**5 - l**5) / 5.0
        return total

    def mass(self) -> float:
        return self.moment(0)

    def inner(self, other: "PiecewiseQuadratic | None" = None) -> float:
        """Exact integral of the product with ``other`` (or with itself)."""
        other = self if other is None else other
        total = 0.0
        for la, ra, a0, a2 in self.pieces:
            for lb, rb, b0, b2 in other.pieces:
                l, r = max(la, lb), min(ra, rb)
                if r <= l:
                    continue
                d1 = r - l
                d3 = r**3 - l**3
                d5 = r**5 - l**5
                total += a0 * b0 * d1 + (a0 * b2 + a2 * b0) * d3 / 3.0 + a2 * b2 * d5 / 5.0
        return total

    # -- transforms ---------------------------------------------------

    def reflected(self) -> "PiecewiseQuadratic":
        return PiecewiseQuadratic.from_pieces(
            [(-r, -l, c0, c2) for l, r, c0, c2 in self.pieces])

    def scaled(self, lam: float) -> "PiecewiseQuadratic":
        """The function x -> lam * q(lam * x), for lam > 0 (mass preserving)."""
        if lam <= 0:
            raise ValueError("scale factor must be positive")
        return PiecewiseQuadratic.from_pieces(
            [(l / lam, r / lam, lam * c0, lam**3 * c2) for l, r, c0, c2 in self.pieces])

    # -- structure ----------------------------------------------------

    def peak(self) -> float:
        best = 0.0
        for l, r, c0, c2 in self.pieces:
            cand = [c0 + c2 * l**2, c0 + c2 * r**2]
            if l < 0.0 < r:
                cand.append(c0)
            best = max(best, *cand)
        return best

    def supports(self) -> list[tuple[float, float]]:
        """Maximal intervals of strict positivity (touching at a zero splits)."""
        if not self.pieces:
            return []
        tol = 1e-12 * max(self.peak(), 1.0)
        width = max(abs(self.pieces[0][0]), abs(self.pieces[-1][1]), 1.0)
        out: list[list[float]] = []
        for l, r, c0, c2 in self.pieces:
            joint = c0 + c2 * l**2
            if out and l - out[-1][1] <= 1e-12 * width and joint > tol:
                out[-1][1] = r
            else:
                out.append([l, r])
        return [(a, b) for a, b in out]

    def validate(self) -> None:
        """Profile-grade checks: ordering, continuity, non-negativity."""
        if not self.pieces:
            raise ValueError("empty piece list")
        width = max(abs(self.pieces[0][0]), abs(self.pieces[-1][1]), 1.0)
        prev_r = None
        prev_val = None
        for l, r, c0, c2 in self.pieces:
            if not all(math.isfinite(v) for v in (l, r, c0, c2)):
                raise ValueError("non-finite piece data")
            if r <= l:
                raise ValueError(f"degenerate interval [{l}, {r}]")
            if prev_r is not None and l < prev_r - 1e-12 * width:
                raise ValueError("overlapping pieces")
            lo = min(c0 + c2 * l**2, c0 + c2 * r**2)
            if l < 0.0 < r:
                lo = min(lo, c0)
            if lo < -_CONTINUITY_TOL:
                raise ValueError(f"negative values (min {lo:.3e}) on [{l}, {r}]")
            left_val = c0 + c2 * l**2
            if prev_r is None:
                if abs(left_val) > _CONTINUITY_TOL:
                    raise ValueError(f"nonzero value {left_val:.3e} at outer endpoint {l}")
            elif l - prev_r <= 1e-12 * width:
                if abs(left_val - prev_val) > _CONTINUITY_TOL:
                    raise ValueError(f"jump {left_val - prev_val:.3e} at breakpoint {l}")
            else:
                if abs(prev_val) > _CONTINUITY_TOL or abs(left_val) > _CONTINUITY_TOL:
                    raise ValueError(f"nonzero value at a support gap near {l}")
            prev_r, prev_val = r, c0 + c2 * r**2
        if abs(prev_val) > _CONTINUITY_TOL:
            raise ValueError(f"nonzero value {prev_val:.3e} at outer endpoint {prev_r}")


# ----------------------------------------------------------------------
# profile pair
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class ProfilePair:
    """A steady pair (F, G), each of unit mass, with its parameters."""

    F: PiecewiseQuadratic
    G: PiecewiseQuadratic
    params: FluidParams
    label: str = ""
    zeta: tuple[float, ...] | None = None

    def __post_init__(self):
        self.F.validate()
        self.G.validate()
        mF, mG = self.F.mass(), self.G.mass()
        if abs(mF - 1.0) > _MASS_TOL or abs(mG - 1.0) > _MASS_TOL:
            raise ValueError(f"masses must be 1: got {mF!r}, {mG!r}")

    @property
    def support_F(self) -> list[tuple[float, float]]:
        return self.F.supports()

    @property
    def support_G(self) -> list[tuple[float, float]]:
        return self.G.supports()


@dataclass(frozen=True)
class CurvePoint:
    """One steady state on the continuation curve."""

    ell: float
    zeta: tuple[float, float, float, float, float, float]
    profile: ProfilePair


# ----------------------------------------------------------------------
# residual evaluation for the algebraic systems
# ----------------------------------------------------------------------


def residuals_eq41_43(p: FluidParams, a: float, b: float, g: float) -> float:
    R, Rmu, e2 = p.R, p.R_mu, p.eta**2
    s, q = Rmu - R, Rmu - R - 1.0
    r1 = s * b**3 - R * q * a**3 / (1.0 + R) - 4.5 * e2 * Rmu
    r2 = g**3 - s * b**3 + q * a**3 - 4.5 * Rmu
    r3 = g**2 - s * b**2 + q * a**2
    return max(abs(r1), abs(r2), abs(r3))


def residuals_eq51_53(p: FluidParams, a: float, b: float, g: float) -> float:
    R, Rmu, e2 = p.R, p.R_mu, p.eta**2
    r1 = (1.0 + R - Rmu) * b**3 - (R - Rmu) * a**3 - 4.5 * Rmu
    r2 = Rmu * g**3 - R * (1.0 + R - Rmu) * b**3 + (1.0 + R) * (R - Rmu) * a**3 \
        - 4.5 * Rmu * (1.0 + R) * e2
    r3 = Rmu * g**2 - R * (1.0 + R - Rmu) * b**2 + (1.0 + R) * (R - Rmu) * a**2
    return max(abs(r1), abs(r2), abs(r3))


def residuals_d1(p: FluidParams, b1: float, a: float, b: float, g: float) -> float:
    R, Rmu, e2 = p.R, p.R_mu, p.eta**2
    s, q = Rmu - R, Rmu - R - 1.0
    v1 = Rmu * b1**3 - (1.0 + R) * s * b**3 + R * q * a**3 + 9.0 * e2 * Rmu * (1.0 + R)
    v2 = g**3 - s * b**3 + q * a**3 - 9.0 * Rmu
    v3 = g**2 - s * b**2 + q * a**2
    v4 = Rmu * b1**2 - (1.0 + R) * s * b**2 + R * q * a**2
    return max(abs(v1), abs(v2), abs(v3), abs(v4))


def residuals_d2(p: FluidParams, b1: float, a: float, b: float, g: float) -> float:
    R, Rmu, e2 = p.R, p.R_mu, p.eta**2
    v1 = Rmu * g**3 + (1.0 + R) * (R - Rmu) * a**3 - R * (1.0 + R - Rmu) * b**3 \
        - 9.0 * e2 * Rmu * (1.0 + R)
    v2 = -(b1**3) - (R - Rmu) * a**3 + (1.0 + R - Rmu) * b**3 - 9.0 * Rmu
    v3 = Rmu * g**2 + (1.0 + R) * (R - Rmu) * a**2 - R * (1.0 + R - Rmu) * b**2
    v4 = b1**2 + (R - Rmu) * a**2 - (1.0 + R - Rmu) * b**2
    return max(abs(v1), abs(v2), abs(v3), abs(v4))


def _R1_vector(p: FluidParams, zeta: Sequence[float]) -> np.ndarray:
    R, Rmu, e2 = p.R, p.R_mu, p.eta**2
    s, q = Rmu - R, Rmu - R - 1.0
    g1, b1, a1, a, b, g = zeta
    return np.array([
        g1**2 - s * b1**2 + q * a1**2,
        g**2 - s * b**2 + q * a**2,
        R * (g1**2 - g**2) + s * (b1**2 - b**2),
        s * (b**3 - b1**3) - R * q * (a**3 - a1**3) / (1.0 + R) - 9.0 * e2 * Rmu,
        (g**3 - g1**3) - s * (b**3 - b1**3) + q * (a**3 - a1**3) - 9.0 * Rmu,
    ])


def _R2_vector(p: FluidParams, zeta: Sequence[float]) -> np.ndarray:
    R, Rmu, e2 = p.R, p.R_mu, p.eta**2
    g1, b1, a1, a, b, g = zeta
    u, w = 1.0 + R - Rmu, R - Rmu
    return np.array([
        Rmu * g1**2 - R * u * b1**2 + (1.0 + R) * w * a1**2,
        Rmu * g**2 - R * u * b**2 + (1.0 + R) * w * a**2,
        Rmu * (g**2 - g1**2) + w * (a**2 - a1**2),
        Rmu * (g**3 - g1**3) - R * u * (b**3 - b1**3) + (1.0 + R) * w * (a**3 - a1**3)
        - 9.0 * e2 * Rmu * (1.0 + R),
        u * (b**3 - b1**3) - w * (a**3 - a1**3) - 9.0 * Rmu,
    ])


def residuals_R1(p: FluidParams, zeta: Sequence[float]) -> float:
    return float(np.max(np.abs(_R1_vector(p, zeta))))


def residuals_R2(p: FluidParams, zeta: Sequence[float]) -> float:
    return float(np.max(np.abs(_R2_vector(p, zeta))))


# ----------------------------------------------------------------------
# steady residual
# ----------------------------------------------------------------------


def steady_residual_fields(F: PiecewiseQuadratic, G: PiecewiseQuadratic,
                           p: FluidParams, n: int = 10_000) -> float:
    """Max of |F * (pressure_F)'| and |G * (pressure_G)'| on a dense sample.

    Sample points sit strictly inside the elementary intervals cut by the
    breakpoints of both components, so one-sided derivatives are unambiguous.
    """
    R, Rmu, e2 = p.R, p.R_mu, p.eta**2
    breaks = sorted({v for l, r, _, _ in F.pieces + G.pieces for v in (l, r)})
    total_len = breaks[-1] - breaks[0]
    worst = 0.0
    for u, v in zip(breaks[:-1], breaks[1:]):
        if v - u <= 1e-13 * max(total_len, 1.0):
            continue
        m = max(64, int(n * (v - u) / total_len))
        x = u + (np.arange(m) + 0.5) * (v - u) / m
        Fx, Gx = F(x), G(x)
        dF, dG = F.derivative(x), G.derivative(x)
        res_f = Fx * (e2 * (1.0 + R) * dF + R * dG + x / 3.0)
        res_g = Gx * (e2 * Rmu * dF + Rmu * dG + x / 3.0)
        worst = max(worst, float(np.max(np.abs(res_f))), float(np.max(np.abs(res_g))))
    return worst


def steady_residual(pp: ProfilePair, n: int = 10_000) -> float:
    return steady_residual_fields(pp.F, pp.G, pp.params, n)


def integrate_moments(q: PiecewiseQuadratic, k: int) -> float:
    """Exact integral of x^k * q(x), k in {0, 1, 2}."""
    return q.moment(k)


def _finish_pair(F, G, p, label, zeta=None) -> ProfilePair:
    pp = ProfilePair(F=PiecewiseQuadratic.from_pieces(F),
                     G=PiecewiseQuadratic.from_pieces(G),
                     params=p, label=label,
                     zeta=None if zeta is None else tuple(float(z) for z in zeta))
    res = steady_residual(pp)
    if res > _STEADY_TOL:
        raise RuntimeError(f"steady residual {res:.3e} exceeds {_STEADY_TOL} for {label}")
    return pp


# ----------------------------------------------------------------------
# even profiles
# ----------------------------------------------------------------------


def _xi_even(y: float, A1: float, B1: float, A2: float, B2: float, q: float) -> float:
    return np.cbrt(A1 * y - B1) ** 2 - np.cbrt(A2 * y + B2) ** 2 + q


def solve_even_case3(p: FluidParams) -> tuple[float, float, float]:
    """Support radii (alpha, beta, gamma) of the even profile with G split.

    Exists for R_mu >= r_plus.  At the threshold alpha = 0 with closed-form
    beta, gamma; above it, alpha solves a single scalar equation in
    Y = alpha^(-3) with a guaranteed sign-change bracket.
    """
    R, Rmu, e2 = p.R, p.R_mu, p.eta**2
    th = thresholds(p)
    rel = (Rmu - th.r_plus) / th.r_plus
    if rel < -1e-13:
        raise RegimeError(
            f"even profile with split G needs R_mu >= {th.r_plus:.6g}, got {Rmu:.6g}")
    if rel <= 1e-13:
        a = 0.0
        b = (4.5 * Rmu * e2**3 / (1.0 + e2) ** 2) ** (1.0 / 3.0)
        g = (4.5 * Rmu * (1.0 + e2)) ** (1.0 / 3.0)
    else:
        s, q = Rmu - R, Rmu - R - 1.0
        A1 = 4.5 * Rmu * (1.0 + e2)
        B1 = q / (1.0 + R)
        A2 = 4.5 * Rmu * e2 * math.sqrt(s)
        B2 = R * q * math.sqrt(s) / (1.0 + R)
        y2 = 2.0 / (9.0 * e2 * (1.0 + R))
        hi = max(2.0 * y2, y2 + 1.0)
        while _xi_even(hi, A1, B1, A2, B2, q) >= 0.0:
            hi *= 2.0
            if hi > 1e250:
                raise RuntimeError("failed to bracket the even-profile equation")
        Y = find_root_bracketed(lambda y: _xi_even(y, A1, B1, A2, B2, q), y2, hi, _ROOT_CFG)
        a = Y ** (-1.0 / 3.0)
        b = (R * q * a**3 / ((1.0 + R) * s) + 4.5 * Rmu * e2 / s) ** (1.0 / 3.0)
        g = (-q * a**3 / (1.0 + R) + 4.5 * Rmu * (1.0 + e2)) ** (1.0 / 3.0)
        if not a**3 < 4.5 * (1.0 + R) * e2:
            raise RuntimeError("inner radius bound violated")
    if not (0.0 <= a < b < g):
        raise RuntimeError(f"radii out of order: {a}, {b}, {g}")
    res = residuals_eq41_43(p, a, b, g)
    if res > _system_tol(p):
        raise RuntimeError(f"even case-3 system residual {res:.3e}")
    return a, b, g


def solve_even_case4(p: FluidParams) -> tuple[float, float, float]:
    """Support radii of the even profile with F split, via the duality map."""
    th = thresholds(p)
    if (p.R_mu - th.r_minus) / th.r_minus > 1e-13:
        raise RegimeError(
            f"even profile with split F needs R_mu <= {th.r_minus:.6g}, got {p.R_mu:.6g}")
    p1, lam = dual_params(p)
    a1, b1, g1 = solve_even_case3(p1)
    a, b, g = lam * a1, lam * b1, lam * g1
    res = residuals_eq51_53(p, a, b, g)
    if res > _system_tol(p):
        raise RuntimeError(f"even case-4 system residual {res:.3e}")
    if not (0.0 <= a < b < g):
        raise RuntimeError(f"radii out of order: {a}, {b}, {g}")
    return a, b, g


def solve_even_case4_direct(p: FluidParams) -> tuple[float, float, float]:
    """Duality-free solve of the split-F radii (independent cross-check).

    Eliminates beta and gamma, then finds the single admissible root of the
    remaining scalar equation in alpha by scan plus bracketed refinement.
    """
    R, Rmu, e2 = p.R, p.R_mu, p.eta**2
    th = thresholds(p)
    if (Rmu - th.r_minus) / th.r_minus > 1e-13:
        raise RegimeError("direct split-F solve outside its regime")
    u, w = 1.0 + R - Rmu, R - Rmu
    C1 = 4.5 * ((1.0 + R) * e2 + R)
    D1 = w / Rmu
    C2 = 4.5 * Rmu

    def gamma3(a):
        return C1 - D1 * a**3

    def beta3(a):
        return (C2 + w * a**3) / u

    def phi(a):
        return (Rmu * np.cbrt(gamma3(a)) ** 2
                - R * np.cbrt(u) * np.cbrt(C2 + w * a**3) ** 2
                + (1.0 + R) * w * a**2)

    a_max = C2 ** (1.0 / 3.0) * (1.0 - 1e-12)
    grid = np.linspace(0.0, a_max, 400)
    vals = phi(grid)
    a = None
    if vals[0] == 0.0:
        a = 0.0
    else:
        for i in range(len(grid) - 1):
            if vals[i] * vals[i + 1] <= 0.0:
                a = find_root_bracketed(phi, grid[i], grid[i + 1], _ROOT_CFG)
                break
    if a is None:
        raise RuntimeError("no admissible root in the direct split-F solve")
    b = beta3(a) ** (1.0 / 3.0)
    g = gamma3(a) ** (1.0 / 3.0)
    res = residuals_eq51_53(p, a, b, g)
    if res > _system_tol(p):
        raise RuntimeError(f"direct split-F residual {res:.3e}")
    return a, b, g


def even_profile(p: FluidParams) -> ProfilePair:
    """The unique even steady state for the given parameters."""
    R, Rmu, e2 = p.R, p.R_mu, p.eta**2
    regime = classify_regime(p)
    case = regime.even_case

    if case is EvenCase.CASE1:
        b = (4.5 * e2 * Rmu / (Rmu - R)) ** (1.0 / 3.0)
        k = (Rmu - R) / (6.0 * e2 * Rmu)
        Fp = [(-b, b, k * b**2, -k)]
        return _finish_pair(Fp, Fp, p, "even-case1")

    if case is EvenCase.CASE2:
        b = (4.5 * e2 * Rmu / (Rmu - R)) ** (1.0 / 3.0)
        g = (4.5 * Rmu * (1.0 + e2)) ** (1.0 / 3.0)
        kF = (Rmu - R) / (6.0 * Rmu * e2)
        Fp = [(-b, b, kF * b**2, -kF)]
        mid = (g**2 + (R - Rmu) * b**2) / (6.0 * Rmu)
        Gp = [(-g, -b, g**2 / (6.0 * Rmu), -1.0 / (6.0 * Rmu)),
              (-b, b, mid, -(1.0 + R - Rmu) / (6.0 * Rmu)),
              (b, g, g**2 / (6.0 * Rmu), -1.0 / (6.0 * Rmu))]
        return _finish_pair(Fp, Gp, p, "even-case2")

    if case is EvenCase.CASE3:
        a, b, g = solve_even_case3(p)
        kF = (Rmu - R) / (6.0 * Rmu * e2)
        c0m = kF * b**2 + R * (1.0 + R - Rmu) * a**2 / (6.0 * Rmu * (1.0 + R) * e2)
        Fp = [(-b, -a, kF * b**2, -kF),
              (-a, a, c0m, -1.0 / (6.0 * (1.0 + R) * e2)),
              (a, b, kF * b**2, -kF)]
        kG = (1.0 + R - Rmu) / (6.0 * Rmu)
        Gp = [(-g, -b, g**2 / (6.0 * Rmu), -1.0 / (6.0 * Rmu)),
              (-b, -a, kG * a**2, -kG),
              (a, b, kG * a**2, -kG),
              (b, g, g**2 / (6.0 * Rmu), -1.0 / (6.0 * Rmu))]
        return _finish_pair(Fp, Gp, p, "even-case3", zeta=(-g, -b, -a, a, b, g))

    if case is EvenCase.CASE4:
        a, b, g = solve_even_case4(p)
        kF = (Rmu - R) / (6.0 * Rmu * e2)  # negative here
        Fp = [(-g, -b, g**2 / (6.0 * (1.0 + R) * e2), -1.0 / (6.0 * (1.0 + R) * e2)),
              (-b, -a, kF * a**2, -kF),
              (a, b, kF * a**2, -kF),
              (b, g, g**2 / (6.0 * (1.0 + R) * e2), -1.0 / (6.0 * (1.0 + R) * e2))]
        kG = (1.0 + R - Rmu) / (6.0 * Rmu)
        c0m = ((Rmu - R) * a**2 + (1.0 + R - Rmu) * b**2) / (6.0 * Rmu)
        Gp = [(-b, -a, kG * b**2, -kG),
              (-a, a, c0m, -1.0 / (6.0 * Rmu)),
              (a, b, kG * b**2, -kG)]
        return _finish_pair(Fp, Gp, p, "even-case4", zeta=(-g, -b, -a, a, b, g))

    # CASE5
    b = (4.5 * Rmu / (1.0 + R - Rmu)) ** (1.0 / 3.0)
    g = (4.5 * ((1.0 + R) * e2 + R)) ** (1.0 / 3.0)
    cF = g**2 / (6.0 * (1.0 + R) * e2) \
        - R * (1.0 + R - Rmu) * b**2 / (6.0 * (1.0 + R) * Rmu * e2)
    Fp = [(-g, -b, g**2 / (6.0 * (1.0 + R) * e2), -1.0 / (6.0 * (1.0 + R) * e2)),
          (-b, b, cF, -(Rmu - R) / (6.0 * Rmu * e2)),
          (b, g, g**2 / (6.0 * (1.0 + R) * e2), -1.0 / (6.0 * (1.0 + R) * e2))]
    kG = (1.0 + R - Rmu) / (6.0 * Rmu)
    Gp = [(-b, b, kG * b**2, -kG)]
    return _finish_pair(Fp, Gp, p, "even-case5")


# ----------------------------------------------------------------------
# non-symmetric profiles with connected supports
# ----------------------------------------------------------------------


def xi0(R_mu: float, z, R: float, eta: float):
    """Scalar reduction for the connected non-symmetric quadruple."""
    e2 = eta**2
    s, q = R_mu - R, R_mu - R - 1.0
    return (-(1.0 + e2) * (1.0 + R) * s
            - ((1.0 + R) * s - R * q * z**2) ** 1.5 / math.sqrt(R_mu)
            + e2 * (1.0 + R) * (s - q * z**2) ** 1.5
            + q * (R + e2 * (1.0 + R)) * z**3)


def connected_quadruple(p: FluidParams) -> tuple[float, float, float, float]:
    """(beta1, alpha, beta, gamma) for the connected profile, R_mu >= r_M."""
    R, Rmu, eta = p.R, p.R_mu, p.eta
    e2 = eta**2
    th = thresholds(p)
    rel = (Rmu - th.r_M) / th.r_M
    if rel < -1e-12:
        raise RegimeError(
            f"connected non-symmetric profile needs R_mu >= {th.r_M:.6g} "
            f"(or <= {th.r_m:.6g} on the dual side), got {Rmu:.6g}")
    if rel <= 1e-12:
        z = 0.0
    else:
        z = find_root_bracketed(lambda zz: xi0(Rmu, zz, R, eta), 0.0, 1.0 - 1e-12,
                                _ROOT_CFG)
    s, q = Rmu - R, Rmu - R - 1.0
    x = math.sqrt(s - q * z**2)
    y = -math.sqrt(((1.0 + R) * s - R * q * z**2) / Rmu)
    denom = Rmu * y**2 * (1.0 - y) + R * q * z**2 * (1.0 - z)
    b = (9.0 * e2 * Rmu * (1.0 + R) / denom) ** (1.0 / 3.0)
    quad = (y * b, z * b, b, x * b)
    res = residuals_d1(p, *quad)
    if res > _system_tol(p):
        raise RuntimeError(f"connected-profile system residual {res:.3e}")
    return quad


def connected_profile(p: FluidParams, side: str = "right") -> ProfilePair:
    """Non-symmetric steady state with both supports connected.

    Exists only for R_mu >= r_M (lighter fluid extremely viscous) or
    R_mu <= r_m (dual).  ``side='right'`` returns the orientation in which
    the outer lobe sits at x > 0; 'left' its mirror image.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    R, Rmu, e2 = p.R, p.R_mu, p.eta**2
    th = thresholds(p)

    if (Rmu - th.r_M) / th.r_M >= -1e-12:
        b1, a, b, g = connected_quadruple(p)
        Fp = [(b1, a, b1**2 / (6.0 * (1.0 + R) * e2), -1.0 / (6.0 * (1.0 + R) * e2)),
              (a, b, (Rmu - R) * b**2 / (6.0 * Rmu * e2), -(Rmu - R) / (6.0 * Rmu * e2))]
        kG = (1.0 + R - Rmu) / (6.0 * Rmu)
        Gp = [(a, b, kG * a**2, -kG),
              (b, g, g**2 / (6.0 * Rmu), -1.0 / (6.0 * Rmu))]
        pp = _finish_pair(Fp, Gp, p, "connected-large")
    elif (Rmu - th.r_m) / th.r_m <= 1e-12:
        p1, lam = dual_params(p)
        b1d, ad, bd, gd = connected_quadruple(p1)
        b1, a, b, g = lam * b1d, lam * ad, lam * bd, lam * gd
        res = residuals_d2(p, b1, a, b, g)
        if res > _system_tol(p):
            raise RuntimeError(f"dual connected-profile residual {res:.3e}")
        kF = (Rmu - R) / (6.0 * Rmu * e2)  # negative
        Fp = [(a, b, kF * a**2, -kF),
              (b, g, g**2 / (6.0 * (1.0 + R) * e2), -1.0 / (6.0 * (1.0 + R) * e2))]
        kG = (1.0 + R - Rmu) / (6.0 * Rmu)
        Gp = [(b1, a, b1**2 / (6.0 * Rmu), -1.0 / (6.0 * Rmu)),
              (a, b, kG * b**2, -kG)]
        pp = _finish_pair(Fp, Gp, p, "connected-small")
    else:
        raise RegimeError(
            "connected non-symmetric profiles exist only for "
            f"R_mu >= {th.r_M:.6g} or R_mu <= {th.r_m:.6g}; got {Rmu:.6g}")
    return reflect(pp) if side == "left" else pp


# ----------------------------------------------------------------------
# boundary profiles with one disconnected support (alpha = 0)
# ----------------------------------------------------------------------


def xi3(R_mu: float, y, R: float, eta: float):
    """Scalar reduction for the alpha = 0 disconnected sextuplet."""
    e2 = eta**2
    s, q = R_mu - R, R_mu - R - 1.0
    c = (s / R) ** 1.5
    return ((1.0 + e2) * s * y**3
            + e2 * c * np.maximum((1.0 + R) - y**2, 0.0) ** 1.5
            + (R + e2 * (1.0 + R)) * c * math.sqrt((1.0 + R) / q)
            * np.maximum(y**2 - 1.0, 0.0) ** 1.5
            + e2 * s**1.5 - (1.0 + e2) * s)


def boundary_zeta(p: FluidParams) -> tuple[float, ...]:
    """Sextuplet with alpha = 0 solving the five-equation system directly.

    Requires r_plus < R_mu < r_M; outside that window the equation has no
    admissible root.
    """
    R, Rmu, eta = p.R, p.R_mu, p.eta
    e2 = eta**2
    th = thresholds(p)
    if not (Rmu > th.r_plus * (1.0 + 1e-13) and Rmu < th.r_M * (1.0 - 1e-13)):
        raise RegimeError(
            f"alpha = 0 disconnected profile needs R_mu in ({th.r_plus:.6g}, "
            f"{th.r_M:.6g}), got {Rmu:.6g}")
    s, q = Rmu - R, Rmu - R - 1.0
    y0 = -math.sqrt((1.0 + R) * s / Rmu)
    y = find_root_bracketed(lambda yy: xi3(Rmu, yy, R, eta), y0, -1.0, _ROOT_CFG)
    t = math.sqrt(s)
    x = -math.sqrt(s / R) * math.sqrt((1.0 + R) - y**2)
    z = -math.sqrt((1.0 + R) * s / (R * q)) * math.sqrt(y**2 - 1.0)
    B = s * (1.0 - y**3) - s**1.5 * math.sqrt((1.0 + R) / (R * q)) * (y**2 - 1.0) ** 1.5
    b = (9.0 * e2 * Rmu / B) ** (1.0 / 3.0)
    zeta = (x * b, y * b, z * b, 0.0, b, t * b)
    res = residuals_R1(p, zeta)
    if res > _system_tol(p):
        raise RuntimeError(f"boundary sextuplet residual {res:.3e}")
    if not (zeta[0] < zeta[1] < zeta[2] < 0.0 < zeta[4] < zeta[5]):
        raise RuntimeError(f"boundary sextuplet out of order: {zeta}")
    return zeta


def _reflect_zeta(zeta: Sequence[float]) -> tuple[float, ...]:
    return tuple(-z for z in reversed(tuple(zeta)))


def boundary_disconnected_profile(p: FluidParams, side: str = "right") -> CurvePoint:
    """Curve endpoint with alpha = 0 (one support split at the origin).

    Exists for r_plus < R_mu < r_M, or in the dual window r_m < R_mu <
    r_minus where it is obtained by the fluid-swap transform.  ``side``
    picks one of the two mirror-image endpoints.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    th = thresholds(p)
    Rmu = p.R_mu
    if th.r_plus * (1.0 + 1e-13) < Rmu < th.r_M * (1.0 - 1e-13):
        zeta_work = boundary_zeta(p)
        a_even, _, _ = solve_even_case3(p)
        lam = 1.0
        dual = False
    elif th.r_m * (1.0 + 1e-13) < Rmu < th.r_minus * (1.0 - 1e-13):
        p1, lam = dual_params(p)
        zeta_work = boundary_zeta(p1)
        a_even, _, _ = solve_even_case3(p1)
        dual = True
    else:
        raise RegimeError(
            "alpha = 0 endpoints exist only for R_mu in "
            f"({th.r_plus:.6g}, {th.r_M:.6g}) or ({th.r_m:.6g}, {th.r_minus:.6g}); "
            f"got {Rmu:.6g}")
    if side == "left":
        # other end of the curve: reflected state, parameter a_even + alpha1
        zeta_work = _reflect_zeta(zeta_work)
    ell = lam * (a_even + zeta_work[2])
    if dual:
        zeta = tuple(-lam * z for z in reversed(zeta_work))
    else:
        zeta = tuple(zeta_work)
    pp = profile_from_zeta(p, zeta)
    return CurvePoint(ell=ell, zeta=zeta, profile=pp)


# ----------------------------------------------------------------------
# profiles from a sextuplet
# ----------------------------------------------------------------------


def profile_from_zeta(p: FluidParams, zeta: Sequence[float]) -> ProfilePair:
    """Assemble the piecewise formulas attached to a disconnected sextuplet.

    The sextuplet must satisfy the five-equation system for the parameter
    regime (large R_mu: G split; small R_mu: F split) within 1e-8 and be
    weakly ordered; degenerate entries (collapsed or zero-width intervals)
    are allowed and produce the corresponding boundary profiles.
    """
    zeta = tuple(float(z) for z in zeta)
    if len(zeta) != 6 or not all(math.isfinite(z) for z in zeta):
        raise InvalidZetaError(f"bad sextuplet {zeta!r}")
    g1, b1, a1, a, b, g = zeta
    scale = max(abs(g1), abs(g), 1.0)
    mono = all(zeta[i + 1] - zeta[i] >= -1e-12 * scale for i in range(5))
    if not (mono and a1 <= 1e-12 * scale and a >= -1e-12 * scale):
        raise InvalidZetaError(f"ordering violated: {zeta}")
    R, Rmu, e2 = p.R, p.R_mu, p.eta**2

    zeta_tol = max(1e-8, 1e-12 * 9.0 * Rmu * (1.0 + R) * (1.0 + e2))
    if Rmu > R + 1.0:
        res = residuals_R1(p, zeta)
        if res > zeta_tol:
            raise InvalidZetaError(f"system residual {res:.3e} too large")
        kF = (Rmu - R) / (6.0 * Rmu * e2)
        c0m = (R * g1**2 + (Rmu - R) * b1**2) / (6.0 * (1.0 + R) * Rmu * e2)
        Fp = [(b1, a1, kF * b1**2, -kF),
              (a1, a, c0m, -1.0 / (6.0 * (1.0 + R) * e2)),
              (a, b, kF * b**2, -kF)]
        kG = (1.0 + R - Rmu) / (6.0 * Rmu)
        Gp = [(g1, b1, g1**2 / (6.0 * Rmu), -1.0 / (6.0 * Rmu)),
              (b1, a1, kG * a1**2, -kG),
              (a, b, kG * a**2, -kG),
              (b, g, g**2 / (6.0 * Rmu), -1.0 / (6.0 * Rmu))]
        label = "zeta-large"
    elif Rmu < R:
        res = residuals_R2(p, zeta)
        if res > zeta_tol:
            raise InvalidZetaError(f"system residual {res:.3e} too large")
        kF = (Rmu - R) / (6.0 * Rmu * e2)  # negative
        cO = 1.0 / (6.0 * (1.0 + R) * e2)
        Fp = [(g1, b1, cO * g1**2, -cO),
              (b1, a1, kF * a1**2, -kF),
              (a, b, kF * a**2, -kF),
              (b, g, cO * g**2, -cO)]
        kG = (1.0 + R - Rmu) / (6.0 * Rmu)
        c0m = ((Rmu - R) * a1**2 + (1.0 + R - Rmu) * b1**2) / (6.0 * Rmu)
        Gp = [(b1, a1, kG * b1**2, -kG),
              (a1, a, c0m, -1.0 / (6.0 * Rmu)),
              (a, b, kG * b**2, -kG)]
        label = "zeta-small"
    else:
        raise InvalidZetaError(
            "disconnected-support sextuplets require R_mu > R + 1 or R_mu < R")
    return _finish_pair(Fp, Gp, p, label, zeta=zeta)


# ----------------------------------------------------------------------
# reflection / duality
# ----------------------------------------------------------------------


def reflect(pp: ProfilePair) -> ProfilePair:
    """Mirror image about x = 0 (also a steady state)."""
    return ProfilePair(
        F=pp.F.reflected(), G=pp.G.reflected(), params=pp.params,
        label=pp.label + "|reflected" if pp.label else "reflected",
        zeta=None if pp.zeta is None else _reflect_zeta(pp.zeta))


def dual_transform(pp: ProfilePair) -> ProfilePair:
    """Fluid-swap transform: (F, G) -> (lam G(lam .), lam F(lam .)).

    The result is a steady state for the dual parameters; applying the
    transform twice returns the original pair.
    """
    p1, lam = dual_params(pp.params)
    zeta1 = None
    if pp.zeta is not None:
        cand = tuple(z / lam for z in pp.zeta)
        ok = (p1.R_mu > p1.R + 1.0 and residuals_R1(p1, cand) < 1e-8) or \
             (p1.R_mu < p1.R and residuals_R2(p1, cand) < 1e-8)
        zeta1 = cand if ok else None
    new = ProfilePair(F=pp.G.scaled(lam), G=pp.F.scaled(lam), params=p1,
                      label=(pp.label + "|dual") if pp.label else "dual",
                      zeta=zeta1)
    res = steady_residual(new)
    if res > _STEADY_TOL:
        raise RuntimeError(f"dual pair steady residual {res:.3e}")
    return new


# ----------------------------------------------------------------------
# continuation curve
# ----------------------------------------------------------------------


def _R1_newton_funcs(p: FluidParams, a1: float):
    """Residual and Jacobian in (gamma1, beta1, alpha, beta, gamma) at fixed alpha1."""
    R, Rmu = p.R, p.R_mu
    s, q = Rmu - R, Rmu - R - 1.0

    def F(u):
        g1, b1, a, b, g = u
        return _R1_vector(p, (g1, b1, a1, a, b, g))

    def J(u):
        g1, b1, a, b, g = u
        return np.array([
            [2.0 * g1, -2.0 * s * b1, 0.0, 0.0, 0.0],
            [0.0, 0.0, 2.0 * q * a, -2.0 * s * b, 2.0 * g],
            [2.0 * R * g1, 2.0 * s * b1, 0.0, -2.0 * s * b, -2.0 * R * g],
            [0.0, -3.0 * s * b1**2, -3.0 * R * q * a**2 / (1.0 + R), 3.0 * s * b**2, 0.0],
            [-3.0 * g1**2, 3.0 * s * b1**2, 3.0 * q * a**2, -3.0 * s * b**2, 3.0 * g**2],
        ])

    return F, J


def _ordered_strictly(zeta: Sequence[float]) -> bool:
    g1, b1, a1, a, b, g = zeta
    return g1 < b1 < a1 < 0.0 < a < b < g


def _solve_R1_at(p: FluidParams, a1_target: float, a1_from: float,
                 u_from: np.ndarray, u_prev: np.ndarray | None = None,
                 a1_prev: float | None = None,
                 cfg: NewtonConfig = _NEWTON_CFG) -> np.ndarray:
    """Newton solve at a1_target, bisecting the parameter step on failure."""
    a1_cur, u_cur = a1_from, u_from.copy()
    u_sec, a1_sec = u_prev, a1_prev
    step = a1_target - a1_cur
    guard = 0
    while a1_cur != a1_target:
        if abs(step) > abs(a1_target - a1_cur):
            step = a1_target - a1_cur
        trial = a1_cur + step
        if u_sec is not None and a1_sec != a1_cur:
            pred = u_cur + (u_cur - u_sec) * ((trial - a1_cur) / (a1_cur - a1_sec))
        else:
            pred = u_cur
        F, J = _R1_newton_funcs(p, trial)
        try:
            u_new = newton_solve(F, J, pred, cfg)
            ok = _ordered_strictly((u_new[0], u_new[1], trial, u_new[2], u_new[3], u_new[4]))
        except NumericsError:
            ok = False
            u_new = None
        if ok:
            u_sec, a1_sec = u_cur, a1_cur
            u_cur, a1_cur = u_new, trial
        else:
            step *= 0.5
            guard += 1
            if abs(step) < 1e-12 * max(abs(a1_target), 1.0) or guard > 200:
                raise ContinuationStallError(
                    f"continuation stalled near alpha1 = {a1_cur:.12g}")
    return u_cur


def continue_curve(p: FluidParams, n_points: int = 101) -> list[CurvePoint]:
    """The full one-parameter family of steady states through the even one.

    Returns ``n_points`` states ordered by the curve parameter, endpoints
    snapped to their exact boundary constructions and the even state placed
    exactly at parameter zero.  Below the small-viscosity threshold the
    curve is traced in the dual parameters and mapped back.
    """
    if n_points < 5:
        raise ValueError("n_points must be at least 5")
    th = thresholds(p)
    if th.r_minus <= p.R_mu <= th.r_plus:
        raise RegimeError(
            f"only the even steady state exists for R_mu in [{th.r_minus:.6g}, "
            f"{th.r_plus:.6g}]; got {p.R_mu:.6g}")

    if p.R_mu > th.r_plus:
        work, lam, dual = p, 1.0, False
    else:
        work, lam = dual_params(p)
        dual = True
    thw = thresholds(work)

    a_even, b_even, g_even = solve_even_case3(work)
    u_even = np.array([-g_even, -b_even, a_even, b_even, g_even])

    if (work.R_mu - thw.r_M) / thw.r_M >= -1e-12:
        b1e, ae, be, ge = connected_quadruple(work)
        zeta_lo = (b1e, b1e, b1e, ae, be, ge)
        a1_lo, a1_hi = b1e, -ae
        label = "connected-support"
    else:
        zeta_lo = boundary_zeta(work)
        a1_lo, a1_hi = zeta_lo[2], 0.0
        label = "alpha-zero"
    zeta_hi = _reflect_zeta(zeta_lo)

    a1_grid = np.linspace(a1_lo, a1_hi, n_points)
    i0 = int(np.argmin(np.abs(a1_grid - (-a_even))))
    i0 = min(max(i0, 1), n_points - 2)
    a1_grid[i0] = -a_even

    newton_cfg = NewtonConfig(tol=max(1e-12, 1e-13 * 9.0 * work.R_mu
                                      * (1.0 + work.R) * (1.0 + work.eta**2)),
                              max_iter=60)
    zetas: dict[int, tuple[float, ...]] = {
        0: zeta_lo,
        n_points - 1: zeta_hi,
        i0: (-g_even, -b_even, -a_even, a_even, b_even, g_even),
    }
    for direction in (1, -1):
        u_cur = u_even.copy()
        a1_cur = -a_even
        u_prev, a1_prev = None, None
        rng = range(i0 + 1, n_points - 1) if direction == 1 else range(i0 - 1, 0, -1)
        for i in rng:
            u_new = _solve_R1_at(work, a1_grid[i], a1_cur, u_cur, u_prev, a1_prev,
                                 newton_cfg)
            zetas[i] = (u_new[0], u_new[1], a1_grid[i], u_new[2], u_new[3], u_new[4])
            u_prev, a1_prev = u_cur, a1_cur
            u_cur, a1_cur = u_new, a1_grid[i]

    points = []
    for i in range(n_points):
        zw = zetas[i]
        ell_w = a_even + zw[2]
        if dual:
            zeta = tuple(-lam * z for z in reversed(zw))
            ell = lam * ell_w
        else:
            zeta, ell = tuple(zw), ell_w
        if i == i0:
            pp = even_profile(p)
            zeta = tuple(zeta)
        else:
            pp = profile_from_zeta(p, zeta)
        points.append(CurvePoint(ell=ell, zeta=zeta, profile=pp))
    points.sort(key=lambda cp: cp.ell)
    return points


def curve_endpoint_kind(p: FluidParams) -> str:
    """'connected-support' or 'alpha-zero', per the continuum class."""
    regime = classify_regime(p)
    if regime.continuum is ContinuumClass.UNIQUE_EVEN:
        raise RegimeError("no curve endpoints in the unique-even regime")
    return ("connected-support"
            if regime.continuum is ContinuumClass.CONNECTED_ENDPOINTS
            else "alpha-zero")


# ----------------------------------------------------------------------
# closed forms along the curve
# ----------------------------------------------------------------------


def _fifth_power_energy(p: FluidParams, zeta: Sequence[float]) -> float:
    R, Rmu, e2 = p.R, p.R_mu, p.eta**2
    g1, b1, a1, a, b, g = zeta
    return (R * (g**5 - g1**5)
            + (Rmu - R) ** 2 * (b**5 - b1**5)
            - R * (Rmu - R - 1.0) ** 2 * (a**5 - a1**5) / (1.0 + R)
            ) / (90.0 * e2 * Rmu**2)


def curve_energy_closed_form(p: FluidParams, zeta: Sequence[float]) -> float:
    """Rescaled energy of a curve state from fifth powers of the sextuplet."""
    if p.R_mu > p.R + 1.0:
        return _fifth_power_energy(p, zeta)
    if p.R_mu < p.R:
        p1, lam = dual_params(p)
        zeta_d = tuple(-z / lam for z in reversed(tuple(zeta)))
        return _fifth_power_energy(p1, zeta_d) / lam
    raise RegimeError("closed-form curve energy needs R_mu > R + 1 or R_mu < R")


def curve_jacobian_det(p: FluidParams, zeta: Sequence[float]) -> float:
    """Closed-form Jacobian determinant of the curve system (positive inside)."""
    R, Rmu = p.R, p.R_mu
    g1, b1, a1, a, b, g = zeta
    return (72.0 * (Rmu - R - 1.0) * (Rmu - R) ** 2 * a * b * b1 * g * g1
            * ((b - b1) * (g - a) + R * (g - g1) * (b - a)))


# ----------------------------------------------------------------------
# serialization
# ----------------------------------------------------------------------


def profile_to_dict(pp: ProfilePair) -> dict:
    return {
        "params": {"R": pp.params.R, "R_mu": pp.params.R_mu, "eta": pp.params.eta},
        "label": pp.label,
        "zeta": list(pp.zeta) if pp.zeta is not None else None,
        "F": [{"l": l, "r": r, "c0": c0, "c2": c2} for l, r, c0, c2 in pp.F.pieces],
        "G": [{"l": l, "r": r, "c0": c0, "c2": c2} for l, r, c0, c2 in pp.G.pieces],
        "support_F": [list(iv) for iv in pp.support_F],
        "support_G": [list(iv) for iv in pp.support_G],
    }


def sample_profile(pp: ProfilePair, n: int = 1001,
                   margin: float = 0.05) -> np.ndarray:
    """Columns x, F, G, eta^2 F + G on a uniform grid spanning both supports."""
    lo = min(pp.F.pieces[0][0], pp.G.pieces[0][0])
    hi = max(pp.F.pieces[-1][1], pp.G.pieces[-1][1])
    pad = margin * (hi - lo)
    x = np.linspace(lo - pad, hi + pad, n)
    Fx, Gx = pp.F(x), pp.G(x)
    return np.column_stack([x, Fx, Gx, pp.params.eta**2 * Fx + Gx])
