"""Scalar minimization and central-difference derivatives.

The minimizer seeds a bounded Brent refinement with a coarse grid scan; the
grid guards against the mild multimodality of the MA(1) objectives at large
coefficient values.
"""

from __future__ import annotations

from typing import Callable

import numpy as np
from scipy import optimize as sp_optimize

__all__ = ["MinimizationError", "minimize_scalar", "num_grad", "num_hess"]

_EPS = float(np.finfo(float).eps)
GRAD_STEP = _EPS ** (1.0 / 3.0)
HESS_STEP = _EPS**0.25


class MinimizationError(RuntimeError):
    """The objective could not be minimized on the requested interval."""


def minimize_scalar(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-6,
    grid_points: int = 64,
) -> float:
    """Minimize a scalar function on the open interval (lo, hi).

    Evaluates ``f`` on ``grid_points`` interior seeds, then refines the best
    basin with bounded Brent search to absolute tolerance ``tol``.  For a
    unimodal objective the result is within ``tol`` of the minimizer; for a
    multimodal one it is a local minimizer of the best grid basin.

    Raises :class:`MinimizationError` if ``f`` is non-finite at every seed.
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got ({lo}, {hi})")
    xs = np.linspace(lo, hi, grid_points + 2)[1:-1]
    fs = np.array([f(x) for x in xs], dtype=float)
    finite = np.isfinite(fs)
    if not finite.any():
        raise MinimizationError("objective is non-finite at every grid seed")
    fs = np.where(finite, fs, np.inf)
    best = int(np.argmin(fs))
    left = xs[best - 1] if best > 0 else lo
    right = xs[best + 1] if best < len(xs) - 1 else hi
    result = sp_optimize.minimize_scalar(
        f, bounds=(left, right), method="bounded", options={"xatol": tol}
    )
    x_star = float(result.x)
    f_star = f(x_star)
    if not np.isfinite(f_star) or f_star > fs[best]:
        return float(xs[best])
    return x_star


def num_grad(f: Callable[[float], np.ndarray], x: float, h: float | None = None):
    """Central-difference first derivative ``(f(x+h) - f(x-h)) / (2h)``.

    ``f`` may return a scalar or an array (differentiated elementwise).  The
    default step is ``eps**(1/3) * max(1, |x|)``.
    """
    if h is None:
        h = GRAD_STEP * max(1.0, abs(x))
    with np.errstate(invalid="ignore"):
        grad = (np.asarray(f(x + h), dtype=float) - np.asarray(f(x - h), dtype=float)) / (2.0 * h)
    if not np.all(np.isfinite(grad)):
        raise ValueError(f"non-finite derivative evaluation near x={x}")
    return grad


def num_hess(f: Callable[[float], np.ndarray], x: float, h: float | None = None):
    """Central-difference second derivative ``(f(x+h) - 2 f(x) + f(x-h)) / h^2``
    with default step ``eps**(1/4) * max(1, |x|)``."""
    if h is None:
        h = HESS_STEP * max(1.0, abs(x))
    fp = np.asarray(f(x + h), dtype=float)
    f0 = np.asarray(f(x), dtype=float)
    fm = np.asarray(f(x - h), dtype=float)
    with np.errstate(invalid="ignore"):
        hess = (fp - 2.0 * f0 + fm) / (h * h)
    if not np.all(np.isfinite(hess)):
        raise ValueError(f"non-finite second-derivative evaluation near x={x}")
    return hess
