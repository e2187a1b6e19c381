"""Fixed-width modal interval and the half-range mode.

The modal interval is closed, [x_i, x_i + w], and anchored at observations. The
half-range mode also searches intervals ending at an observation.
"""

from __future__ import annotations

import numpy as np

from minimode.core.order_stats import SortedSample
from minimode.estimators.types import ModeEstimate
from minimode.exceptions import NonPositiveWidth


def _densest_anchor(v: np.ndarray, w: float) -> tuple[int, int, int]:
    """Leftmost anchor whose interval holds the most points, as (anchor, lo, hi) slice bounds."""
    lo = np.searchsorted(v, v, side="left")
    hi = np.searchsorted(v, v + w, side="right")
    i = int(np.argmax(hi - lo))
    return i, int(lo[i]), int(hi[i])


def modal_interval_midpoint(s: SortedSample, w: float) -> ModeEstimate:
    if not w > 0:
        raise NonPositiveWidth(f"interval width must be positive, got {w}")
    i, lo, hi = _densest_anchor(s.values, w)
    anchor = float(s.values[i])
    return ModeEstimate(
        anchor + w / 2,
        "modal_interval",
        {"interval": [anchor, anchor + w], "count": hi - lo},
    )


def _densest_set(v: np.ndarray, w: float) -> tuple[int, int]:
    """Slice bounds of the most populated interval of width w ending or starting at a point.

    Count ties go to the tightest point set, then to the leftmost; both anchorings are
    searched so the choice mirrors under reflection.
    """
    lo = np.concatenate([np.searchsorted(v, v, side="left"), np.searchsorted(v, v - w, side="left")])
    hi = np.concatenate([np.searchsorted(v, v + w, side="right"), np.searchsorted(v, v, side="right")])
    span = v[hi - 1] - v[lo]
    best = int(np.lexsort((lo, span, lo - hi))[0])
    return int(lo[best]), int(hi[best])


def hrm(s: SortedSample) -> ModeEstimate:
    """Half-range mode: shrink to the modal interval of half the current range."""
    v = s.values
    iterations = 0
    while v.size > 2:
        r = v[-1] - v[0]
        if r == 0:
            break
        lo, hi = _densest_set(v, r / 2)
        v = v[lo:hi]
        iterations += 1
    value = float(v[0]) if v.size == 1 or v[0] == v[-1] else float(np.mean(v))
    return ModeEstimate(
        value, "hrm", {"interval": [float(v[0]), float(v[-1])], "iterations": iterations}
    )


__all__ = ["hrm", "modal_interval_midpoint"]
