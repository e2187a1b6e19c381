"""Gaussian kernel density and its global maximizer (EPDFM / EPDFMW)."""

from __future__ import annotations

import logging
import math

import numpy as np
from scipy import optimize

from minimode.core.order_stats import SortedSample, WeightedSortedSample
from minimode.estimators.types import KernelDensitySpec, ModeEstimate
from minimode.exceptions import DegenerateScale, NonPositiveBandwidth

logger = logging.getLogger("minimode.estimators")

MAD_CONSISTENCY = 1.4826
GRID_POINTS = 512
_SQRT_2PI = math.sqrt(2 * math.pi)
_CHUNK_ELEMENTS = 1 << 20


def normal_mad(values: np.ndarray) -> float:
    med = np.median(values)
    return float(MAD_CONSISTENCY * np.median(np.abs(values - med)))


def bandwidth_rule(s: SortedSample) -> KernelDensitySpec:
    """h = 0.9 * min(sd, normal-consistent MAD) * n^(-1/5)."""
    if s.n < 2:
        raise DegenerateScale("kernel bandwidth needs at least two observations")
    sigma = min(float(np.std(s.values, ddof=1)), normal_mad(s.values))
    if not sigma > 0:
        raise DegenerateScale(f"sample scale is {sigma}; bandwidth undefined")
    return KernelDensitySpec(h=0.9 * sigma * s.n ** (-0.2), sigma=sigma, n=s.n)


def kernel_sum(
    values: np.ndarray, weights: np.ndarray | None, h: float, x: np.ndarray
) -> np.ndarray:
    """Unnormalized sum_i w_i exp(-((x - x_i)/h)^2 / 2) at every x."""
    out = np.empty(x.size)
    step = max(1, _CHUNK_ELEMENTS // max(values.size, 1))
    for start in range(0, x.size, step):
        u = (x[start : start + step, None] - values[None, :]) / h
        k = np.exp(-0.5 * u * u)
        out[start : start + step] = k.sum(axis=1) if weights is None else k @ weights
    return out


def _density(
    values: np.ndarray, weights: np.ndarray | None, h: float, x: np.ndarray
) -> np.ndarray:
    total = values.size if weights is None else float(np.sum(weights))
    return kernel_sum(values, weights, h, x) / (total * h * _SQRT_2PI)


def _slope(values: np.ndarray, weights: np.ndarray | None, h: float, x: float) -> float:
    """Sign-carrying density derivative (up to a positive factor)."""
    u = (x - values) / h
    k = u * np.exp(-0.5 * u * u)
    return -float(k.sum() if weights is None else k @ weights)


def epdf(s: SortedSample, x: float | np.ndarray) -> float | np.ndarray:
    """Kernel density estimate at x with the rule-of-thumb bandwidth."""
    spec = bandwidth_rule(s)
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    dens = _density(s.values, None, spec.h, xs)
    return float(dens[0]) if np.ndim(x) == 0 else dens


def kde_argmax(
    values: np.ndarray, weights: np.ndarray | None, h: float, grid_points: int = GRID_POINTS
) -> tuple[float, dict]:
    """Global maximizer of the kernel density over [x_1, x_n].

    The density is scanned on the observations plus a uniform grid, then the best
    grid point is refined by Brent's method on the derivative between its
    neighbours.
    """
    lo, hi = float(values[0]), float(values[-1])
    if lo == hi:
        return lo, {"refined": False}
    grid = np.union1d(values, np.linspace(lo, hi, grid_points))
    dens = kernel_sum(values, weights, h, grid)
    i = int(np.argmax(dens))
    x0 = float(grid[i])
    g0 = _slope(values, weights, h, x0)
    if g0 == 0:
        return x0, {"refined": False}
    j = i + 1 if g0 > 0 else i - 1
    if j < 0 or j >= grid.size:
        return x0, {"refined": False}
    x1 = float(grid[j])
    if _slope(values, weights, h, x1) * g0 >= 0:
        return x0, {"refined": False}
    a, b = min(x0, x1), max(x0, x1)
    root = optimize.brentq(
        lambda x: _slope(values, weights, h, x),
        a,
        b,
        xtol=1e-15 * max(abs(a), abs(b), h),
        rtol=4 * np.finfo(float).eps,
    )
    logger.debug("kde_argmax: grid point %.6g refined to %.12g", x0, root)
    return float(root), {"refined": True}


def epdfm(s: SortedSample) -> ModeEstimate:
    spec = bandwidth_rule(s)
    value, info = kde_argmax(s.values, None, spec.h)
    return ModeEstimate(value, "epdfm", {"h": spec.h, "sigma": spec.sigma, **info})


def epdfmw(s: WeightedSortedSample, h: float) -> ModeEstimate:
    """Maximizer of the weighted kernel density with a supplied bandwidth."""
    if not h > 0:
        raise NonPositiveBandwidth(f"bandwidth must be positive, got {h}")
    value, info = kde_argmax(s.values, s.weights, h)
    return ModeEstimate(value, "epdfmw", {"h": h, **info})


__all__ = [
    "MAD_CONSISTENCY",
    "bandwidth_rule",
    "epdf",
    "epdfm",
    "epdfmw",
    "kde_argmax",
    "kernel_sum",
    "normal_mad",
]
