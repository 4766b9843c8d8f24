"""Scalar bracketed root finding and damped Newton for small dense systems.

Every profile construction in this package reduces to either a single
monotone (or unimodal) scalar equation, solved here by Brent's method on a
sign-change bracket, or to a polynomial system of at most five equations,
solved by Newton iterations with an analytic Jacobian and a backtracking
line search.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import brentq

__all__ = [
    "RootConfig",
    "NewtonConfig",
    "NumericsError",
    "NoBracketError",
    "MaxIterExceededError",
    "SingularJacobianError",
    "StepTooSmallError",
    "find_root_bracketed",
    "newton_solve",
]


class NumericsError(Exception):
    """Base class for solver failures."""


class NoBracketError(NumericsError):
    pass


class MaxIterExceededError(NumericsError):
    pass


class SingularJacobianError(NumericsError):
    pass


class StepTooSmallError(NumericsError):
    pass


# brentq rejects relative tolerances below ~4*eps
_MIN_RTOL = 4.0 * np.finfo(float).eps


@dataclass(frozen=True)
class RootConfig:
    rel_tol: float = 1e-13
    abs_tol: float = 1e-14
    max_iter: int = 200

    def __post_init__(self):
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")


@dataclass(frozen=True)
class NewtonConfig:
    tol: float = 1e-12
    max_iter: int = 50
    damping: float = 0.5
    min_step: float = 1e-12

    def __post_init__(self):
        if not (0.0 < self.damping < 1.0):
            raise ValueError("damping must lie in (0, 1)")


def find_root_bracketed(f: Callable[[float], float], a: float, b: float,
                        cfg: RootConfig = RootConfig()) -> float:
    """Root of ``f`` inside the sign-change bracket [a, b] (Brent's method).

    Raises NoBracketError when f(a) and f(b) have the same strict sign, and
    MaxIterExceededError when Brent fails to converge within cfg.max_iter.
    The result never leaves [a, b].
    """
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if fa * fb > 0.0:
        raise NoBracketError(f"f({a}) = {fa:.6g} and f({b}) = {fb:.6g} have the same sign")
    x, res = brentq(
        f, a, b,
        xtol=cfg.abs_tol, rtol=max(cfg.rel_tol, _MIN_RTOL),
        maxiter=cfg.max_iter, full_output=True, disp=False,
    )
    if not res.converged:
        raise MaxIterExceededError(f"no convergence in {cfg.max_iter} iterations")
    return float(x)


def newton_solve(F: Callable[[np.ndarray], np.ndarray],
                 J: Callable[[np.ndarray], np.ndarray],
                 x0: Sequence[float],
                 cfg: NewtonConfig = NewtonConfig()) -> np.ndarray:
    """Damped Newton iteration for F(x) = 0 with analytic Jacobian J.

    The step is halved until the max-norm residual decreases; acceptance of
    the full step once the iterate is close enough gives the usual quadratic
    tail.  Raises SingularJacobianError / StepTooSmallError /
    MaxIterExceededError on the corresponding failures.
    """
    x = np.asarray(x0, dtype=float).copy()
    Fx = np.asarray(F(x), dtype=float)
    norm = np.max(np.abs(Fx))
    for _ in range(cfg.max_iter):
        if norm <= cfg.tol:
            return x
        Jx = np.asarray(J(x), dtype=float)
        det = np.linalg.det(Jx)
        scale = float(np.prod(np.linalg.norm(Jx, axis=1)))  # Hadamard bound
        if not np.isfinite(det) or abs(det) < 1e-14 * max(scale, 1e-300):
            raise SingularJacobianError(f"|det J| = {abs(det):.3e} below 1e-14 * scale")
        try:
            dx = np.linalg.solve(Jx, -Fx)
        except np.linalg.LinAlgError as exc:
            raise SingularJacobianError(str(exc)) from exc
        t = 1.0
        while True:
            x_new = x + t * dx
            F_new = np.asarray(F(x_new), dtype=float)
            norm_new = np.max(np.abs(F_new))
            if np.isfinite(norm_new) and norm_new < norm:
                break
            t *= cfg.damping
            if t < cfg.min_step:
                raise StepTooSmallError(
                    f"line search stalled at step {t:.3e} with residual {norm:.3e}")
        x, Fx, norm = x_new, F_new, norm_new
    if norm <= cfg.tol:
        return x
    raise MaxIterExceededError(f"residual {norm:.3e} after {cfg.max_iter} iterations")
