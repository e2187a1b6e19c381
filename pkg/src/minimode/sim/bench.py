"""Per-call timing of estimators on reference samples."""

from __future__ import annotations

import logging
import time
from collections.abc import Sequence
from dataclasses import dataclass

from minimode.estimators import BoundEstimator, get_estimator
from minimode.sim.distributions import get_distribution, sample
from minimode.sim.streams import cell_key, substream

logger = logging.getLogger("minimode.sim")

BENCH_COLUMNS = ["estimator", "distribution", "n", "mean_seconds", "calls"]


@dataclass(frozen=True)
class BenchResult:
    estimator: str
    distribution: str
    n: int
    mean_seconds: float
    calls: int

    def to_dict(self) -> dict:
        return {
            "estimator": self.estimator,
            "distribution": self.distribution,
            "n": self.n,
            "mean_seconds": self.mean_seconds,
            "calls": self.calls,
        }


def time_estimators(
    estimators: Sequence[BoundEstimator | str],
    dists: Sequence[str],
    ns: Sequence[int],
    calls: int,
    seed: int,
) -> list[BenchResult]:
    """Mean wall-clock seconds per call; each estimator times the same `calls` samples."""
    bound = [get_estimator(e) if isinstance(e, str) else e for e in estimators]
    results = []
    for dist_id in dists:
        dist = get_distribution(dist_id)
        for n in ns:
            key = cell_key(dist.id, n, 0.0)
            samples = [sample(dist, n, substream(seed, *key, i)) for i in range(calls)]
            for est in bound:
                start = time.perf_counter()
                for s in samples:
                    est(s)
                elapsed = (time.perf_counter() - start) / calls
                logger.debug("%s on %s n=%d: %.3g s/call", est.name, dist.id, n, elapsed)
                results.append(BenchResult(est.name, dist.id, int(n), elapsed, calls))
    return results


__all__ = ["BENCH_COLUMNS", "BenchResult", "time_estimators"]
