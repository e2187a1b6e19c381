"""Synthetic primary-vertex events and weighted-mode tuning.

An event is one bunch crossing: a signal collision plus up to `max_background`
pile-up collisions, all along the beam axis. Every collision emits tracks whose
z positions scatter around the vertex and whose transverse momenta weight them.
Signal tracks are harder on average, so the pt-weighted mode of the track z
positions should land on the signal vertex.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from minimode.config.schema import VertexConfig
from minimode.core.order_stats import WeightedSortedSample, sort_weighted
from minimode.estimators import get_estimator
from minimode.exceptions import EstimationError, InvalidConfig

logger = logging.getLogger("minimode.sim")

MIN_EVENTS = 100
TUNED_PARAMETER = {"fsmw": "p", "histmw": "bin", "epdfmw": "h"}
VERTEX_COLUMNS = ["estimator", "parameter", "best_value", "bias", "sd", "rmse", "recovery", "events"]


@dataclass(frozen=True)
class VertexEvent:
    signal_z: float
    background_zs: np.ndarray
    track_z: np.ndarray
    track_pt: np.ndarray

    @property
    def sample(self) -> WeightedSortedSample:
        return sort_weighted(self.track_z, self.track_pt)

    @property
    def n_tracks(self) -> int:
        return int(self.track_z.size)


def _emit(
    z: float, count: int, pt_mean: float, cfg: VertexConfig, rng: np.random.Generator
) -> tuple[np.ndarray, np.ndarray]:
    zs = np.full(count, z)
    if cfg.z_smear > 0:
        zs = zs + rng.normal(0.0, cfg.z_smear, size=count)
    return zs, rng.exponential(pt_mean, size=count)


def generate_event(cfg: VertexConfig, rng: np.random.Generator) -> VertexEvent:
    """Draw one crossing.

    Tracks at or below the momentum threshold are dropped; if that removes every
    track, the hardest one is kept so the event always has a sample.
    """
    lo, hi = cfg.region
    signal_z = float(rng.uniform(lo, hi))
    k = int(rng.integers(0, cfg.max_background + 1))
    background_zs = rng.uniform(lo, hi, size=k)

    zs, pts = [], []
    z, pt = _emit(signal_z, cfg.signal_tracks, cfg.signal_pt_mean, cfg, rng)
    zs.append(z)
    pts.append(pt)
    for bz in background_zs:
        z, pt = _emit(float(bz), cfg.background_tracks, cfg.background_pt_mean, cfg, rng)
        zs.append(z)
        pts.append(pt)
    track_z, track_pt = np.concatenate(zs), np.concatenate(pts)

    keep = track_pt > cfg.pt_threshold
    if not keep.any():
        keep = track_pt == track_pt.max()
    return VertexEvent(signal_z, background_zs, track_z[keep], track_pt[keep])


def generate_events(cfg: VertexConfig, rng: np.random.Generator, count: int | None = None) -> list[VertexEvent]:
    return [generate_event(cfg, rng) for _ in range(cfg.events if count is None else count)]


@dataclass
class VertexReport:
    """Accuracy of one tuned estimator against the true signal positions."""

    estimator: str
    parameter: str
    best_value: float
    bias: float
    sd: float
    rmse: float
    recovery: float
    events: int
    scan: list[dict[str, float]] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "estimator": self.estimator,
            "parameter": self.parameter,
            "best_value": self.best_value,
            "bias": self.bias,
            "sd": self.sd,
            "rmse": self.rmse,
            "recovery": self.recovery,
            "events": self.events,
        }


def deviations(
    events: Sequence[VertexEvent], estimator: str, params: Mapping[str, Any]
) -> np.ndarray:
    est = get_estimator(estimator, **params)
    return np.array([est(ev.sample).value - ev.signal_z for ev in events])


def _score(dev: np.ndarray, tolerance: float) -> dict[str, float]:
    return {
        "bias": float(np.mean(dev)),
        "sd": float(np.std(dev)),
        "rmse": float(np.sqrt(np.mean(dev * dev))),
        "recovery": float(np.mean(np.abs(dev) <= tolerance)),
    }


def tune(
    events: Sequence[VertexEvent],
    estimator: str,
    grid: Sequence[float],
    *,
    tolerance: float = 0.2,
) -> VertexReport:
    """Grid-search the estimator's tuning parameter for the smallest mean squared deviation."""
    if estimator not in TUNED_PARAMETER:
        raise InvalidConfig(f"{estimator} has no vertex tuning parameter (use {list(TUNED_PARAMETER)})")
    if not grid:
        raise InvalidConfig(f"empty parameter grid for {estimator}")
    name = TUNED_PARAMETER[estimator]
    best: tuple[float, dict[str, float]] | None = None
    scan: list[dict[str, float]] = []
    for value in grid:
        try:
            dev = deviations(events, estimator, {name: float(value)})
        except EstimationError as exc:
            logger.warning("%s(%s=%g) skipped: %s", estimator, name, value, exc)
            continue
        scores = _score(dev, tolerance)
        scan.append({name: float(value), **scores})
        logger.debug("%s %s=%g rmse=%.4f", estimator, name, value, scores["rmse"])
        if best is None or scores["rmse"] < best[1]["rmse"]:
            best = (float(value), scores)
    if best is None:
        raise EstimationError(f"{estimator} failed for every value in {list(grid)}")
    return VertexReport(estimator, name, best[0], events=len(events), scan=scan, **best[1])


def vertex_study(
    events: Sequence[VertexEvent],
    grids: Mapping[str, Sequence[float]],
    *,
    tolerance: float = 0.2,
) -> list[VertexReport]:
    """Tune each estimator named in `grids` and report bias, sd and RMSE at its best value."""
    if len(events) < MIN_EVENTS:
        raise InvalidConfig(f"vertex study needs at least {MIN_EVENTS} events, got {len(events)}")
    reports = []
    for estimator, grid in grids.items():
        report = tune(events, estimator, grid, tolerance=tolerance)
        logger.info(
            "%s: best %s=%g rmse=%.4f", estimator, report.parameter, report.best_value, report.rmse
        )
        reports.append(report)
    return reports


__all__ = [
    "VERTEX_COLUMNS",
    "VertexEvent",
    "VertexReport",
    "deviations",
    "generate_event",
    "generate_events",
    "tune",
    "vertex_study",
]
