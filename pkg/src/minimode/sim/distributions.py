"""Reference distributions and the point-mass-like contamination model."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np
from scipy import stats

from minimode.core.order_stats import SortedSample, sort_sample
from minimode.exceptions import InvalidConfig, NonIntegralSplit

OUTLIER_QUANTILE = 0.9999
OUTLIER_SPREAD = 0.01
STANDARD_NORMAL_IQR = float(stats.norm.ppf(0.75) - stats.norm.ppf(0.25))


@dataclass(frozen=True)
class ReferenceDistribution:
    """A named distribution with its mode, used as the truth in studies."""

    id: str
    frozen: Any
    mode: float
    log_spaced: bool = False

    @property
    def median(self) -> float:
        return float(self.frozen.median())

    @property
    def mean(self) -> float:
        return float(self.frozen.mean())

    @property
    def iqr(self) -> float:
        return float(self.frozen.ppf(0.75) - self.frozen.ppf(0.25))

    def quantile(self, q: float | np.ndarray) -> np.ndarray:
        return self.frozen.ppf(q)

    def target(self, estimand: str) -> float:
        """True value an estimator of the given estimand is scored against."""
        if estimand == "median":
            return self.median
        if estimand == "mean":
            return self.mean
        return self.mode

    def draw(self, n: int, rng: np.random.Generator) -> np.ndarray:
        """Inverse-CDF draws (unsorted)."""
        return np.asarray(self.frozen.ppf(open_uniform(n, rng)), dtype=float)


def open_uniform(n: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform draws on the open interval (0, 1)."""
    return (rng.integers(0, 1 << 53, size=n) + 0.5) / float(1 << 53)


REFERENCE_DISTRIBUTIONS: dict[str, ReferenceDistribution] = {
    "normal": ReferenceDistribution("normal", stats.norm(loc=6.0, scale=1.0), mode=6.0),
    "lognormal": ReferenceDistribution(
        "lognormal", stats.lognorm(s=1.0, scale=math.e), mode=1.0, log_spaced=True
    ),
    "pareto": ReferenceDistribution(
        "pareto", stats.pareto(b=0.5, scale=1.0), mode=1.0, log_spaced=True
    ),
}


def get_distribution(name: str) -> ReferenceDistribution:
    try:
        return REFERENCE_DISTRIBUTIONS[name]
    except KeyError:
        raise InvalidConfig(
            f"Unknown distribution: {name} (available: {list(REFERENCE_DISTRIBUTIONS)})"
        ) from None


@dataclass(frozen=True)
class ContaminationSpec:
    """Outliers ~ N(99.99th percentile of F, (0.01 * IQR(F)/IQR(N(0,1)))^2)."""

    epsilon: float
    outlier_mean: float
    outlier_sd: float

    @classmethod
    def for_distribution(cls, dist: ReferenceDistribution, epsilon: float) -> ContaminationSpec:
        if not 0.0 <= epsilon < 1.0:
            raise InvalidConfig(f"contamination fraction must lie in [0, 1), got {epsilon}")
        return cls(
            epsilon=epsilon,
            outlier_mean=float(dist.quantile(OUTLIER_QUANTILE)),
            outlier_sd=OUTLIER_SPREAD * dist.iqr / STANDARD_NORMAL_IQR,
        )

    def outlier_count(self, n: int) -> int:
        exact = self.epsilon * n
        count = round(exact)
        if abs(exact - count) > 1e-9:
            raise NonIntegralSplit(f"epsilon*n = {self.epsilon}*{n} = {exact} is not an integer")
        return int(count)


def sample(dist: ReferenceDistribution, n: int, rng: np.random.Generator) -> SortedSample:
    return sort_sample(dist.draw(n, rng))


def contaminated_sample(
    dist: ReferenceDistribution, n: int, eps: float, rng: np.random.Generator
) -> SortedSample:
    """(1 - eps)*n draws from F plus eps*n draws from the outlier normal, sorted."""
    spec = ContaminationSpec.for_distribution(dist, eps)
    n_out = spec.outlier_count(n)
    clean = dist.draw(n - n_out, rng)
    if n_out == 0:
        return sort_sample(clean)
    outliers = rng.normal(spec.outlier_mean, spec.outlier_sd, size=n_out)
    return sort_sample(np.concatenate([clean, outliers]))


__all__ = [
    "ContaminationSpec",
    "REFERENCE_DISTRIBUTIONS",
    "ReferenceDistribution",
    "contaminated_sample",
    "get_distribution",
    "open_uniform",
    "sample",
]
