"""Empirical breakdown trials: does an estimate survive nu far outliers?"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from minimode.core.order_stats import SortedSample
from minimode.estimators import BoundEstimator, get_estimator
from minimode.exceptions import InvalidConfig


@dataclass(frozen=True)
class BreakdownResult:
    bounded: bool
    estimate: float
    lower: float
    upper: float
    nu: int

    def to_dict(self) -> dict:
        return {
            "bounded": self.bounded,
            "estimate": self.estimate,
            "lower": self.lower,
            "upper": self.upper,
            "nu": self.nu,
        }


def breakdown_trial(
    estimator: BoundEstimator | str,
    clean: SortedSample,
    nu: int,
    magnitude: float,
    *,
    spread: float = 1e-12,
) -> BreakdownResult:
    """Append nu outliers near `magnitude` and check the estimate stays in [min - R, max + R].

    Outlier j sits at magnitude * (1 + j * spread): coincident to working
    precision but with nonzero spacings.
    """
    if nu < 0:
        raise InvalidConfig(f"nu must be non-negative, got {nu}")
    est = get_estimator(estimator) if isinstance(estimator, str) else estimator
    outliers = magnitude * (1.0 + spread * np.arange(nu))
    contaminated = SortedSample(np.sort(np.concatenate([clean.values, outliers]), kind="stable"))
    value = est(contaminated).value
    lo, hi = float(clean.values[0]), float(clean.values[-1])
    r = hi - lo
    return BreakdownResult(lo - r <= value <= hi + r, float(value), lo - r, hi + r, nu)


__all__ = ["BreakdownResult", "breakdown_trial"]
