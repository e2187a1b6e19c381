"""Robust scale estimates. All but the raw MAD are normal-consistent."""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator

import numpy as np

from minimode.core.order_stats import SortedSample
from minimode.estimators.density import bandwidth_rule, kernel_sum, normal_mad
from minimode.estimators.halfsample import hsm
from minimode.estimators.shorth import shorth_window
from minimode.estimators.types import ScaleEstimate
from minimode.exceptions import NoHalfCrossing, SampleTooSmall, UnknownEstimator

logger = logging.getLogger("minimode.estimators")

SHORTH_CONSISTENCY = 1.349
HWHM_CONSISTENCY = 1.1774
HWHM_GRID_DIVISOR = 50
SEARCH_MARGIN = 5.0
_WALK_CHUNK = 128


def sd(s: SortedSample) -> ScaleEstimate:
    if s.n < 2:
        raise SampleTooSmall("standard deviation needs at least two observations")
    return ScaleEstimate(float(np.std(s.values, ddof=1)), "sd")


def mad_normal_consistent(s: SortedSample) -> ScaleEstimate:
    return ScaleEstimate(normal_mad(s.values), "mad")


def mad_raw(s: SortedSample) -> ScaleEstimate:
    """Median absolute deviation from the median, without the normal factor."""
    med = np.median(s.values)
    return ScaleEstimate(float(np.median(np.abs(s.values - med))), "mad_raw")


def shorth_length(s: SortedSample) -> ScaleEstimate:
    if s.n < 2:
        raise SampleTooSmall("shorth length needs at least two observations")
    m, h = shorth_window(s)
    return ScaleEstimate(float((s.values[m + h] - s.values[m]) / SHORTH_CONSISTENCY), "shorth_length")


class _GridWalker:
    """Density on the lattice center + k*step, evaluated lazily in chunks."""

    def __init__(self, values: np.ndarray, h: float, center: float, step: float) -> None:
        self.values = values
        self.h = h
        self.center = center
        self.step = step
        lo = values[0] - SEARCH_MARGIN * h
        hi = values[-1] + SEARCH_MARGIN * h
        self.k_min = math.floor((lo - center) / step)
        self.k_max = math.ceil((hi - center) / step)

    def x(self, k: int | np.ndarray) -> float | np.ndarray:
        return self.center + k * self.step

    def density(self, ks: np.ndarray) -> np.ndarray:
        return kernel_sum(self.values, None, self.h, self.x(ks))

    def chunks(self, start: int, direction: int) -> Iterator[tuple[np.ndarray, np.ndarray]]:
        """Yield (ks, densities) for k = start, start+d, ... until the search bound."""
        k = start
        while self.k_min <= k <= self.k_max:
            if direction > 0:
                stop = min(k + _WALK_CHUNK, self.k_max + 1)
            else:
                stop = max(k - _WALK_CHUNK, self.k_min - 1)
            ks = np.arange(k, stop, direction)
            yield ks, self.density(ks)
            k = int(ks[-1]) + direction


def _climb(walker: _GridWalker) -> tuple[int, float]:
    """Hill walk from the center to the nearest local maximum of the lattice density."""
    f = walker.density(np.array([-1, 0, 1]))
    if f[2] > f[1] and f[2] >= f[0]:
        direction = 1
    elif f[0] > f[1]:
        direction = -1
    else:
        return 0, float(f[1])
    best_k, best_f = 0, float(f[1])
    for ks, fs in walker.chunks(direction, direction):
        for k, value in zip(ks, fs, strict=True):
            if value <= best_f:
                return best_k, best_f
            best_k, best_f = int(k), float(value)
    return best_k, best_f


def _half_crossing(walker: _GridWalker, peak_k: int, peak_f: float, direction: int) -> float:
    half = peak_f / 2
    prev_k, prev_f = peak_k, peak_f
    for ks, fs in walker.chunks(peak_k + direction, direction):
        below = np.flatnonzero(fs < half)
        if below.size:
            i = int(below[0])
            if i > 0:
                prev_k, prev_f = int(ks[i - 1]), float(fs[i - 1])
            frac = (prev_f - half) / (prev_f - float(fs[i]))
            return float(walker.x(prev_k)) + direction * frac * walker.step
        prev_k, prev_f = int(ks[-1]), float(fs[-1])
    raise NoHalfCrossing(
        f"density stays above half its peak on the {'right' if direction > 0 else 'left'}"
    )


def hwhm_scale(s: SortedSample) -> ScaleEstimate:
    """Half-width at half-maximum of the kernel density around the peak nearest the HSM,
    divided by 1.1774."""
    spec = bandwidth_rule(s)
    center = hsm(s).value
    walker = _GridWalker(s.values, spec.h, center, spec.h / HWHM_GRID_DIVISOR)
    peak_k, peak_f = _climb(walker)
    left = _half_crossing(walker, peak_k, peak_f, -1)
    right = _half_crossing(walker, peak_k, peak_f, 1)
    logger.debug("hwhm: peak at %.6g, half crossings %.6g / %.6g", walker.x(peak_k), left, right)
    return ScaleEstimate((right - left) / 2 / HWHM_CONSISTENCY, "hwhm")


_SCALE_ESTIMATORS = {
    "sd": sd,
    "mad": mad_normal_consistent,
    "mad_raw": mad_raw,
    "shorth_length": shorth_length,
    "hwhm": hwhm_scale,
}


def get_scale_estimator(name: str):
    try:
        return _SCALE_ESTIMATORS[name]
    except KeyError:
        raise UnknownEstimator(
            f"Unknown scale estimator: {name} (available: {list(_SCALE_ESTIMATORS)})"
        ) from None


def scale_names() -> list[str]:
    return list(_SCALE_ESTIMATORS)


__all__ = [
    "get_scale_estimator",
    "hwhm_scale",
    "mad_normal_consistent",
    "mad_raw",
    "scale_names",
    "sd",
    "shorth_length",
]
