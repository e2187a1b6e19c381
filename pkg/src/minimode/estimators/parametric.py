"""Parametric mode (PM): normal fit to power-transformed data.

The transform is t(x; beta) = (x^beta - 1)/beta with t(x; 0) = ln x. The exponent
maximizes R(beta), the Pearson correlation between the central half of the
transformed order statistics and Blom normal scores. The search runs on a
coarse grid, widens the grid while the maximum sits near an edge, halves the
step around the maximum until the neighbouring scores agree to 1e-4 and
finishes with the vertex of the parabola through the last three points.
"""

from __future__ import annotations

import logging
import math
from functools import lru_cache

import numpy as np
from scipy import stats

from minimode.core.order_stats import SortedSample
from minimode.estimators.density import normal_mad
from minimode.estimators.types import ModeEstimate, PmTransformFit
from minimode.exceptions import DegenerateScale, NegativeDiscriminant, NonPositiveData

logger = logging.getLogger("minimode.estimators")

BETA_LEFT = -2.9
BETA_RIGHT = 4.1
BETA_STEP = 0.15
EDGE_STEPS = 6
R_TOLERANCE = 1e-4
MAX_EXPANSIONS = 20
MAX_HALVINGS = 60
_LOG_LIMIT = 1e-12


def power_transform(x: np.ndarray, beta: float) -> np.ndarray:
    if abs(beta) < _LOG_LIMIT:
        return np.log(x)
    return np.expm1(beta * np.log(x)) / beta


@lru_cache(maxsize=64)
def normal_scores(n: int) -> np.ndarray:
    """Blom approximation to the expected normal order statistics."""
    i = np.arange(1, n + 1)
    scores = stats.norm.ppf((i - 0.375) / (n + 0.25))
    scores.setflags(write=False)
    return scores


def _central_half(n: int) -> slice:
    q = n // 4
    return slice(q, n - q)


class _NormalityScore:
    """R(beta) for one sample; the transform is monotone so the sort order is fixed."""

    def __init__(self, values: np.ndarray) -> None:
        window = _central_half(values.size)
        self._x = values[window]
        self._z = normal_scores(values.size)[window]
        self.evaluations = 0

    def __call__(self, beta: float) -> float:
        self.evaluations += 1
        with np.errstate(over="ignore", invalid="ignore"):
            t = power_transform(self._x, beta)
        if not np.all(np.isfinite(t)) or np.ptp(t) == 0:
            return -math.inf
        r = float(np.corrcoef(t, self._z)[0, 1])
        return r if math.isfinite(r) else -math.inf


def _coarse_grid(left: float, right: float, step: float) -> np.ndarray:
    count = int(math.floor((right - left) / step + 1e-9))
    grid = left + step * np.arange(count + 1)
    if right - grid[-1] > 1e-9:
        grid = np.append(grid, right)
    return grid


def search_beta(values: np.ndarray) -> tuple[float, float]:
    """Exponent maximizing R(beta) and the score reached there."""
    score = _NormalityScore(values)
    left, right, step = BETA_LEFT, BETA_RIGHT, BETA_STEP

    for _ in range(MAX_EXPANSIONS):
        grid = _coarse_grid(left, right, step)
        beta0 = float(grid[int(np.argmax([score(b) for b in grid]))])
        if beta0 <= left + EDGE_STEPS * step:
            left -= EDGE_STEPS * step
        elif beta0 >= right - EDGE_STEPS * step:
            right += EDGE_STEPS * step
        else:
            break
    else:
        logger.debug("pm: grid expansion cap reached at [%.2f, %.2f]", left, right)

    r2 = score(beta0)
    for _ in range(MAX_HALVINGS):
        r1, r3 = score(beta0 - step), score(beta0 + step)
        if abs(r3 - r1) <= R_TOLERANCE:
            break
        step /= 2
        candidates = (beta0 - step, beta0, beta0 + step)
        rs = (score(candidates[0]), r2, score(candidates[2]))
        best = int(np.argmax(rs))
        beta0, r2 = candidates[best], rs[best]
    else:
        r1, r3 = score(beta0 - step), score(beta0 + step)

    beta = beta0
    curvature = r1 - 2 * r2 + r3
    if math.isfinite(curvature) and curvature < 0:
        beta = beta0 + step * (r1 - r3) / (2 * curvature)
    logger.debug("pm: beta=%.6f after %d score evaluations", beta, score.evaluations)
    return beta, score(beta)


def pm_fit(s: SortedSample, *, robust: bool = True) -> PmTransformFit:
    """Fit the transform; robust=False uses mean and sd instead of median and MAD."""
    if s.values[0] <= 0:
        raise NonPositiveData(f"power transform needs positive data, minimum is {s.values[0]}")
    if s.n < 3 or s.values[0] == s.values[-1]:
        raise DegenerateScale("power-transform fit needs at least three distinct-valued points")
    beta, r_value = search_beta(s.values)
    t = power_transform(s.values, beta)
    if robust:
        m, scale = float(np.median(t)), normal_mad(t)
    else:
        m, scale = float(np.mean(t)), float(np.std(t, ddof=1))
    return PmTransformFit(beta=beta, m=m, s=scale, r_value=r_value, robust=robust)


def pm_mode(fit: PmTransformFit) -> ModeEstimate:
    """Mode of X when t(X; beta) ~ N(m, s^2)."""
    beta, m, s = fit.beta, fit.m, fit.s
    estimator_id = "pm" if fit.robust else "standard_pm"
    if abs(beta) < _LOG_LIMIT:
        return ModeEstimate(math.exp(m - s * s), estimator_id, fit.to_dict())
    a = 1 + beta * m
    disc = a * a + 4 * beta * (beta - 1) * s * s
    if disc < 0:
        raise NegativeDiscriminant(f"no real mode for beta={beta:.4g}, m={m:.4g}, s={s:.4g}")
    u = (a + math.sqrt(disc)) / 2
    if not u > 0:
        raise NegativeDiscriminant(f"transformed mode {u:.4g} is outside the transform range")
    return ModeEstimate(math.exp(math.log(u) / beta), estimator_id, fit.to_dict())


def pm(s: SortedSample) -> ModeEstimate:
    return pm_mode(pm_fit(s))


def standard_pm(s: SortedSample) -> ModeEstimate:
    return pm_mode(pm_fit(s, robust=False))


__all__ = [
    "normal_scores",
    "pm",
    "pm_fit",
    "pm_mode",
    "power_transform",
    "search_beta",
    "standard_pm",
]
