"""Shortest-half estimators: the shorth and the LMS location."""

from __future__ import annotations

import numpy as np

from minimode.core.order_stats import SortedSample, window_widths
from minimode.estimators.types import ModeEstimate


def shorth_window(s: SortedSample, half: int | None = None) -> tuple[int, int]:
    """(m, h) such that values[m..m+h] is the leftmost shortest half, h = floor(n/2).

    `half` overrides h (capped at n - 1), e.g. to keep the window of a sample one
    point larger.
    """
    h = s.n // 2 if half is None else min(half, s.n - 1)
    if h <= 0:
        return 0, 0
    return int(np.argmin(window_widths(s.values, h + 1))), h


def shorth(s: SortedSample, half: int | None = None) -> ModeEstimate:
    m, h = shorth_window(s, half)
    window = s.values[m : m + h + 1]
    return ModeEstimate(
        float(np.mean(window)),
        "shorth",
        {"interval": [float(window[0]), float(window[-1])], "start": m},
    )


def lms_location(s: SortedSample, half: int | None = None) -> ModeEstimate:
    """Midpoint of the extremes of the shortest half."""
    m, h = shorth_window(s, half)
    lo, hi = s.values[m], s.values[m + h]
    return ModeEstimate(
        float((lo + hi) / 2), "lms", {"interval": [float(lo), float(hi)], "start": m}
    )


__all__ = ["lms_location", "shorth", "shorth_window"]
