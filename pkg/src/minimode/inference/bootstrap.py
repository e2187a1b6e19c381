"""Bootstrap standard errors, bias-corrected percentile quartiles and modal skewness."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy import stats

from minimode.core.order_stats import SortedSample
from minimode.estimators import BoundEstimator, get_estimator
from minimode.exceptions import EstimationError, InvalidConfig
from minimode.sim.streams import stable_tag, substream

logger = logging.getLogger("minimode.inference")

MIN_RESAMPLES = 100
QUARTILE_LEVELS = (0.25, 0.5, 0.75)


@dataclass(frozen=True)
class BootstrapSummary:
    estimate: float
    std_error: float
    q1: float
    median_q: float
    q3: float
    b: int
    z0: float
    skipped: int = 0

    def to_dict(self) -> dict:
        return {
            "estimate": self.estimate,
            "std_error": self.std_error,
            "q1": self.q1,
            "median_q": self.median_q,
            "q3": self.q3,
            "b": self.b,
            "z0": self.z0,
            "skipped": self.skipped,
        }


def bias_correction(replicates: np.ndarray, estimate: float) -> float:
    """z0 = Phi^-1(fraction of replicates below the estimate), ties counted half."""
    below = np.count_nonzero(replicates < estimate)
    equal = np.count_nonzero(replicates == estimate)
    return float(stats.norm.ppf((below + 0.5 * equal) / replicates.size))


def bc_levels(z0: float, levels: tuple[float, ...] = QUARTILE_LEVELS) -> np.ndarray:
    return stats.norm.cdf(2.0 * z0 + stats.norm.ppf(levels))


def bootstrap_summary(
    raw: SortedSample,
    estimator: BoundEstimator | str,
    b: int = 2000,
    rng: np.random.Generator | None = None,
    *,
    seed: int = 0,
) -> BootstrapSummary:
    """Resample with replacement b times and summarize the replicate estimates.

    Without an explicit rng the resamples come from the (seed, "bootstrap", estimator)
    substream. Replicates on which the estimator fails are skipped and counted.
    """
    if b < MIN_RESAMPLES:
        raise InvalidConfig(f"bootstrap needs at least {MIN_RESAMPLES} resamples, got {b}")
    est = get_estimator(estimator) if isinstance(estimator, str) else estimator
    if rng is None:
        rng = substream(seed, stable_tag("bootstrap"), stable_tag(est.name))
    theta = est(raw).value

    n = raw.n
    values = np.empty(b)
    ok = np.ones(b, dtype=bool)
    for i in range(b):
        idx = np.sort(rng.integers(0, n, size=n))
        try:
            values[i] = est(SortedSample(raw.values[idx])).value
        except EstimationError as exc:
            ok[i] = False
            logger.debug("bootstrap replicate %d skipped: %s", i, exc)
    skipped = int(b - np.count_nonzero(ok))
    reps = values[ok]
    if reps.size == 0:
        raise EstimationError(f"{est.name} failed on every bootstrap replicate")
    if skipped:
        logger.warning("%s: skipped %d of %d bootstrap replicates", est.name, skipped, b)

    z0 = bias_correction(reps, theta)
    q1, q2, q3 = np.quantile(reps, bc_levels(z0))
    return BootstrapSummary(
        estimate=theta,
        std_error=float(np.std(reps, ddof=1)) if reps.size > 1 else 0.0,
        q1=float(q1),
        median_q=float(q2),
        q3=float(q3),
        b=b,
        z0=z0,
        skipped=skipped,
    )


def modal_skewness(s: SortedSample, mode_hat: float) -> float:
    """1 - 2 * (#[x == mode]/2 + #[x < mode]) / n, with exact equality."""
    below = np.count_nonzero(s.values < mode_hat)
    equal = np.count_nonzero(s.values == mode_hat)
    return float(1.0 - 2.0 * (0.5 * equal + below) / s.n)


__all__ = [
    "BootstrapSummary",
    "bc_levels",
    "bias_correction",
    "bootstrap_summary",
    "modal_skewness",
]
