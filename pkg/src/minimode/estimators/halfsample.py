"""Half-sample mode, its fraction-of-sample generalization and the weighted variant."""

from __future__ import annotations

import logging
import math

import numpy as np

from minimode.core.order_stats import (
    SortedSample,
    WeightedSortedSample,
    content_minimal_windows,
    window_widths,
)
from minimode.estimators.types import ModeEstimate
from minimode.exceptions import AlphaOutOfRange

logger = logging.getLogger("minimode.estimators")


def _terminal(v: np.ndarray) -> float:
    """Value for the 1-, 2- and 3-point cases that end every recursion."""
    if v.size == 1:
        return float(v[0])
    if v.size == 2:
        return float((v[0] + v[1]) / 2)
    left, right = v[1] - v[0], v[2] - v[1]
    if left < right:
        return float((v[0] + v[1]) / 2)
    if left > right:
        return float((v[1] + v[2]) / 2)
    return float(v[1])


def _window_size(n: int, alpha: float | None) -> int:
    if alpha is None:
        return (n + 1) // 2
    # every level must keep at least two points and drop at least one
    return min(max(math.ceil(alpha * n - 1e-9), 2), n - 1)


def _shrink(values: np.ndarray, alpha: float | None) -> tuple[np.ndarray, int]:
    v = values
    iterations = 0
    while v.size > 3:
        size = _window_size(v.size, alpha)
        j = int(np.argmin(window_widths(v, size)))
        v = v[j : j + size]
        iterations += 1
    return v, iterations


def hsm(s: SortedSample) -> ModeEstimate:
    """Half-sample mode: repeatedly keep the narrowest half until at most three points remain."""
    v, iterations = _shrink(s.values, None)
    return ModeEstimate(
        _terminal(v),
        "hsm",
        {"interval": [float(v[0]), float(v[-1])], "iterations": iterations},
    )


def fsm(s: SortedSample, alpha: float) -> ModeEstimate:
    """Fraction-of-sample mode keeping the narrowest ceil(alpha*n) points at each level."""
    if not 0.0 < alpha < 1.0:
        raise AlphaOutOfRange(f"alpha must lie in (0, 1), got {alpha}")
    v, iterations = _shrink(s.values, None if alpha == 0.5 else alpha)
    return ModeEstimate(
        _terminal(v),
        "fsm",
        {"interval": [float(v[0]), float(v[-1])], "iterations": iterations, "alpha": alpha},
    )


def _pair_value(v0: float, v1: float, w0: float, w1: float) -> float:
    if w0 == w1:
        return float((v0 + v1) / 2)
    return float((w0 * v0 + w1 * v1) / (w0 + w1))


def _weighted_terminal(v: np.ndarray, w: np.ndarray) -> float:
    """Half-sample terminal rules on at most three units of weight."""
    if v.size == 1:
        return float(v[0])
    if v.size == 2:
        # a doubled point is the closer pair of the three-unit case
        if w[0] == w[1]:
            return _pair_value(v[0], v[1], w[0], w[1])
        return float(v[0] if w[0] > w[1] else v[1])
    left, right = v[1] - v[0], v[2] - v[1]
    if left < right:
        return _pair_value(v[0], v[1], w[0], w[1])
    if left > right:
        return _pair_value(v[1], v[2], w[1], w[2])
    return float(v[1])


def _weighted_mean(v: np.ndarray, w: np.ndarray) -> float:
    return float(np.dot(w, v) / np.sum(w))


def fsmw(s: WeightedSortedSample, p: float) -> ModeEstimate:
    """Weighted fraction-of-sample mode.

    Weights count observations: a point of weight 2 behaves exactly like two coincident
    points of weight 1, and coincident values are merged before the search. Each step
    keeps the leftmost narrowest window holding ceil(p * W) of the current weight W,
    taking only the part of its last point's weight that is needed. Once at most three
    units of weight sit on at most three points, the half-sample terminal rules apply.
    With unit weights and p = 1/2 this follows `hsm` step for step.
    """
    if not 0.0 < p < 1.0:
        raise AlphaOutOfRange(f"p must lie in (0, 1), got {p}")
    merged = s.merge_coincident()
    v, w = merged.values, merged.weights.copy()
    iterations = 0
    value: float | None = None
    while v.size > 1:
        total = float(np.sum(w))
        if total <= 3.0 and v.size <= 3:
            value = _weighted_terminal(v, w)
            break
        keep = min(float(math.ceil(p * total * (1.0 - 1e-12))), total)
        starts, ends = content_minimal_windows(v, w, keep / total)
        j = int(np.argmin(v[ends] - v[starts]))
        j, e = int(starts[j]), int(ends[j])
        head = float(np.sum(w[j:e]))
        if j == 0 and e == v.size - 1 and head + w[e] <= keep:
            logger.debug("fsmw: window no longer shrinks at %d support points", v.size)
            value = _weighted_mean(v, w)
            break
        v, w = v[j : e + 1], w[j : e + 1].copy()
        w[-1] = keep - head
        iterations += 1
    if value is None:
        value = float(v[0])
    return ModeEstimate(
        value,
        "fsmw",
        {"interval": [float(v[0]), float(v[-1])], "iterations": iterations, "p": p},
    )


__all__ = ["fsm", "fsmw", "hsm"]
