"""Classical location estimators used as baselines."""

from __future__ import annotations

import numpy as np

from minimode.core.order_stats import SortedSample
from minimode.estimators.types import ModeEstimate


def median(s: SortedSample) -> ModeEstimate:
    return ModeEstimate(float(np.median(s.values)), "median")


def mean(s: SortedSample) -> ModeEstimate:
    return ModeEstimate(float(np.mean(s.values)), "mean")


__all__ = ["mean", "median"]
