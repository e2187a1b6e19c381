"""Monte-Carlo contamination studies.

Every (distribution, n, epsilon) cell draws its replicate samples from substreams
keyed by (seed, distribution, n, epsilon, replicate), so results do not depend on
the number of workers or on which other cells run. All estimators in a cell see
the same samples.
"""

from __future__ import annotations

import concurrent.futures
import itertools
import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from minimode.estimators import BoundEstimator, get_estimator
from minimode.exceptions import EstimationError, InvalidConfig
from minimode.sim.distributions import (
    ContaminationSpec,
    ReferenceDistribution,
    contaminated_sample,
    get_distribution,
)
from minimode.sim.progress import StudyProgressManager
from minimode.sim.streams import cell_key, substream
from minimode.utils.metrics import evaluate_errors

logger = logging.getLogger("minimode.sim")

MIN_REPLICATES = 100
STUDY_COLUMNS = [
    "estimator",
    "distribution",
    "n",
    "epsilon",
    "bias",
    "se",
    "rmse",
    "mc_se",
    "replicates",
]


@dataclass(frozen=True)
class StudyResult:
    """Bias, standard error and RMSE of one estimator in one study cell."""

    estimator_id: str
    distribution_id: str
    n: int
    epsilon: float
    bias: float
    std_error: float
    rmse: float
    replicates: int
    mc_se: float
    excluded: int = 0

    def to_dict(self) -> dict:
        return {
            "estimator": self.estimator_id,
            "distribution": self.distribution_id,
            "n": self.n,
            "epsilon": self.epsilon,
            "bias": self.bias,
            "se": self.std_error,
            "rmse": self.rmse,
            "mc_se": self.mc_se,
            "replicates": self.replicates,
        }


@dataclass(frozen=True)
class StudyCell:
    distribution: ReferenceDistribution
    n: int
    epsilon: float

    @property
    def label(self) -> str:
        return f"{self.distribution.id} n={self.n} eps={self.epsilon:g}"


@dataclass
class CellErrors:
    """Per-replicate errors of every estimator in one cell (NaN where a replicate failed)."""

    cell: StudyCell
    errors: dict[str, np.ndarray] = field(default_factory=dict)

    def excluded(self, name: str) -> int:
        return int(np.count_nonzero(np.isnan(self.errors[name])))


def collect_errors(
    estimators: Sequence[BoundEstimator],
    cell: StudyCell,
    replicates: int,
    seed: int,
    *,
    strict: bool = False,
) -> CellErrors:
    """Run every estimator on each replicate sample of the cell."""
    dist, n, eps = cell.distribution, cell.n, cell.epsilon
    ContaminationSpec.for_distribution(dist, eps).outlier_count(n)
    key = cell_key(dist.id, n, eps)
    targets = np.array([dist.target(est.estimand) for est in estimators])
    estimates = np.full((len(estimators), replicates), np.nan)
    for rep in range(replicates):
        sample = contaminated_sample(dist, n, eps, substream(seed, *key, rep))
        for i, est in enumerate(estimators):
            try:
                estimates[i, rep] = est(sample).value
            except EstimationError as exc:
                if strict:
                    raise
                logger.debug("%s failed on %s replicate %d: %s", est.name, cell.label, rep, exc)
    errors = estimates - targets[:, None]
    return CellErrors(cell, {est.name: errors[i] for i, est in enumerate(estimators)})


def summarize(cell_errors: CellErrors) -> list[StudyResult]:
    cell = cell_errors.cell
    results: list[StudyResult] = []
    for name, errors in cell_errors.errors.items():
        used = errors[~np.isnan(errors)]
        excluded = errors.size - used.size
        if used.size == 0:
            raise EstimationError(f"{name} failed on every replicate of {cell.label}")
        if excluded:
            logger.warning("%s: excluded %d of %d replicates in %s", name, excluded, errors.size, cell.label)
        m = evaluate_errors(used)
        results.append(
            StudyResult(
                estimator_id=name,
                distribution_id=cell.distribution.id,
                n=cell.n,
                epsilon=cell.epsilon,
                bias=m["bias"],
                std_error=m["se"],
                rmse=m["rmse"],
                replicates=int(used.size),
                mc_se=m["mc_se"],
                excluded=excluded,
            )
        )
    return results


def _cells(dists: Sequence[str], ns: Sequence[int], epss: Sequence[float]) -> list[StudyCell]:
    return [
        StudyCell(get_distribution(d), int(n), float(e))
        for d, n, e in itertools.product(dists, ns, epss)
    ]


def run_study(
    estimators: Sequence[BoundEstimator | str],
    dists: Sequence[str],
    ns: Sequence[int],
    epss: Sequence[float],
    replicates: int,
    seed: int,
    *,
    workers: int = 1,
    strict: bool = False,
    progress: StudyProgressManager | None = None,
) -> list[StudyResult]:
    """Results for every (distribution, n, epsilon, estimator), in that nesting order."""
    if replicates < MIN_REPLICATES:
        raise InvalidConfig(f"replicates must be at least {MIN_REPLICATES}, got {replicates}")
    bound = [get_estimator(e) if isinstance(e, str) else e for e in estimators]
    names = [b.name for b in bound]
    if len(set(names)) != len(names):
        raise InvalidConfig(f"duplicate estimator names in study: {names}")
    cells = _cells(dists, ns, epss)
    # split errors surface before any replicate runs
    for cell in cells:
        ContaminationSpec.for_distribution(cell.distribution, cell.epsilon).outlier_count(cell.n)

    def _run(cell: StudyCell) -> list[StudyResult]:
        if progress is not None:
            progress.on_cell_start(cell.label)
        results = summarize(collect_errors(bound, cell, replicates, seed, strict=strict))
        if progress is not None:
            progress.on_cell_end(cell.label, cell.distribution.id, sum(r.excluded for r in results))
        logger.debug("finished %s", cell.label)
        return results

    by_cell: dict[int, list[StudyResult]] = {}
    with concurrent.futures.ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        futures = {executor.submit(_run, cell): i for i, cell in enumerate(cells)}
        for future in concurrent.futures.as_completed(futures):
            by_cell[futures[future]] = future.result()
    return [r for i in range(len(cells)) for r in by_cell[i]]


def run_m_study(
    scenarios: Sequence[str],
    dists: Sequence[str] = ("normal",),
    ns: Sequence[int] = (100,),
    epss: Sequence[float] = (0.0,),
    replicates: int = 1000,
    seed: int = 0,
    *,
    c: float = 1.5,
    workers: int = 1,
    strict: bool = False,
    progress: StudyProgressManager | None = None,
) -> list[StudyResult]:
    """run_study with one Huber M-estimator per initialization scenario."""
    estimators = [get_estimator(f"m_{s}", scenario=s, c=c) for s in scenarios]
    return run_study(
        estimators,
        dists,
        ns,
        epss,
        replicates,
        seed,
        workers=workers,
        strict=strict,
        progress=progress,
    )


__all__ = [
    "CellErrors",
    "STUDY_COLUMNS",
    "StudyCell",
    "StudyResult",
    "collect_errors",
    "run_m_study",
    "run_study",
    "summarize",
]
