"""Stylized sensitivity curves, rejection points and gross-error sensitivities."""

from __future__ import annotations

import concurrent.futures
import dataclasses
import inspect
import logging
import math
from dataclasses import dataclass

import numpy as np

from minimode.core.order_stats import SortedSample
from minimode.estimators import BoundEstimator, get_estimator
from minimode.estimators.halfsample import hsm
from minimode.exceptions import InvalidConfig, NonPositiveData
from minimode.sim.distributions import ReferenceDistribution

logger = logging.getLogger("minimode.robustness")

CURVE_COLUMNS = ["estimator", "distribution", "n", "x", "S"]
ZERO_TOLERANCE = 1e-12


def quantile_sample(dist: ReferenceDistribution, n: int) -> SortedSample:
    """The n-1 quantiles at (i - 1/2)/(n - 1), i = 1..n-1.

    Adding one contamination point gives a sample of size n.
    """
    if n < 2:
        raise InvalidConfig(f"sensitivity curves need n >= 2, got {n}")
    probs = (np.arange(1, n) - 0.5) / (n - 1)
    return SortedSample(np.asarray(dist.quantile(probs), dtype=float))


def _with_point(base: SortedSample, x: float) -> SortedSample:
    return SortedSample(np.insert(base.values, np.searchsorted(base.values, x), x))


def _reference(est: BoundEstimator, n: int) -> BoundEstimator:
    """The estimator as applied to the n-1 point base sample.

    Shortest-half estimators keep the window size of the n point sample, so a point
    added far outside the data leaves the estimate unchanged.
    """
    if "half" in inspect.signature(est.func).parameters and "half" not in est.params:
        return dataclasses.replace(est, params={**est.params, "half": n // 2})
    return est


def ssc(
    estimator: BoundEstimator | str,
    dist: ReferenceDistribution,
    n: int,
    x: float,
    *,
    base: SortedSample | None = None,
) -> float:
    """n * (T(base with x added) - T(base))."""
    est = get_estimator(estimator) if isinstance(estimator, str) else estimator
    base = quantile_sample(dist, n) if base is None else base
    return n * (est(_with_point(base, x)).value - _reference(est, n)(base).value)


def build_grid(
    dist: ReferenceDistribution,
    points: int = 2001,
    tail_prob: float = 1e-5,
    extension: int = 10,
    extent: float = 1.0,
) -> np.ndarray:
    """Core grid between the tail quantiles plus `extension` points beyond each end.

    Log-spaced distributions get a geometric core and extensions in log space.
    The outermost extension point lies `extent` core spans past the core end.
    """
    lo, hi = float(dist.quantile(tail_prob)), float(dist.quantile(1.0 - tail_prob))
    offsets = np.geomspace(0.01, 1.0, extension) * extent if extension else np.empty(0)
    if dist.log_spaced:
        llo, lhi = math.log(lo), math.log(hi)
        span = lhi - llo
        core = np.exp(np.linspace(llo, lhi, points))
        left = np.exp(llo - offsets[::-1] * span)
        right = np.exp(lhi + offsets * span)
    else:
        span = hi - lo
        core = np.linspace(lo, hi, points)
        left = lo - offsets[::-1] * span
        right = hi + offsets * span
    return np.concatenate([left, core, right])


@dataclass
class SensitivityCurve:
    estimator_id: str
    distribution_id: str
    n: int
    x: np.ndarray
    s: np.ndarray
    center: float
    rho: float
    gamma: float
    excluded: int = 0

    def rows(self) -> list[dict]:
        head = {"estimator": self.estimator_id, "distribution": self.distribution_id, "n": self.n}
        return [{**head, "x": float(x), "S": float(s)} for x, s in zip(self.x, self.s, strict=True)]

    def summary(self) -> dict:
        return {
            "estimator": self.estimator_id,
            "distribution": self.distribution_id,
            "n": self.n,
            "center": self.center,
            "rho": self.rho,
            "gamma": self.gamma,
            "points": int(self.x.size),
            "excluded": self.excluded,
        }


def rejection_point(x: np.ndarray, s: np.ndarray, center: float, zero: float) -> float:
    """Largest radius |x - center| with a nonzero S.

    inf if the outermost evaluated point on either side of the centre is nonzero.
    NaN entries (points outside the estimator's domain) are skipped.
    """
    kept = np.isfinite(s)
    x, s = x[kept], s[kept]
    nonzero = np.abs(s) > zero
    if not nonzero.any():
        return 0.0
    radius = np.abs(x - center)
    for side in (x < center, x > center):
        if side.any() and nonzero[side][int(np.argmax(radius[side]))]:
            return math.inf
    return float(radius[nonzero].max())


def scan_curve(
    estimator: BoundEstimator | str,
    dist: ReferenceDistribution,
    n: int,
    grid: np.ndarray | None = None,
    *,
    workers: int = 1,
) -> SensitivityCurve:
    """Evaluate the sensitivity curve on the grid and derive rho and gamma.

    rho is measured from the half-sample mode of the base sample. Grid points the
    estimator cannot take (non-positive values for the power-transform estimators)
    get S = NaN and are counted as excluded.
    """
    est = get_estimator(estimator) if isinstance(estimator, str) else estimator
    grid = build_grid(dist) if grid is None else np.asarray(grid, dtype=float)
    base = quantile_sample(dist, n)
    t0 = _reference(est, n)(base).value

    def _point(x: float) -> float:
        try:
            return n * (est(_with_point(base, float(x))).value - t0)
        except NonPositiveData:
            return math.nan

    with concurrent.futures.ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        s = np.fromiter(executor.map(_point, grid), dtype=float, count=grid.size)

    excluded = int(np.count_nonzero(np.isnan(s)))
    if excluded:
        logger.warning("%s on %s: %d grid points outside the estimator's domain", est.name, dist.id, excluded)
    if excluded == grid.size:
        raise InvalidConfig(f"no grid point lies in the domain of {est.name}")
    center = hsm(base).value
    zero = ZERO_TOLERANCE * n * float(base.values[-1] - base.values[0])
    rho = rejection_point(grid, s, center, zero)
    gamma = float(np.nanmax(np.abs(s)))
    logger.info("%s on %s (n=%d): rho=%g gamma=%g", est.name, dist.id, n, rho, gamma)
    return SensitivityCurve(est.name, dist.id, n, grid, s, center, rho, gamma, excluded)


__all__ = [
    "CURVE_COLUMNS",
    "SensitivityCurve",
    "build_grid",
    "quantile_sample",
    "rejection_point",
    "scan_curve",
    "ssc",
]
