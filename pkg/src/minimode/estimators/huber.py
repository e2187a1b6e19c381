"""Huber location M-estimator by iteratively reweighted least squares.

The scale is fixed by the initialization scenario; only the location is iterated.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np

from minimode.core.order_stats import SortedSample
from minimode.estimators.halfsample import hsm
from minimode.estimators.location import mean, median
from minimode.estimators.scale import get_scale_estimator
from minimode.estimators.types import ModeEstimate
from minimode.exceptions import (
    DegenerateInitialScale,
    DegenerateScale,
    EstimationError,
    SampleTooSmall,
)

logger = logging.getLogger("minimode.estimators")

DEFAULT_C = 1.5


@dataclass(frozen=True)
class InitScenario:
    id: str
    location_method: str
    scale_method: str

    def to_dict(self) -> dict[str, str]:
        return {"id": self.id, "location": self.location_method, "scale": self.scale_method}


SCENARIOS: dict[str, InitScenario] = {
    s.id: s
    for s in (
        InitScenario("a", "mean", "sd"),
        InitScenario("b", "median", "mad_raw"),
        InitScenario("c", "median", "shorth_length"),
        InitScenario("d", "hsm", "shorth_length"),
        InitScenario("e", "median", "hwhm"),
        InitScenario("f", "hsm", "hwhm"),
    )
}

_INITIAL_LOCATIONS = {"mean": mean, "median": median, "hsm": hsm}


def get_scenario(scenario_id: str) -> InitScenario:
    try:
        return SCENARIOS[scenario_id]
    except KeyError:
        raise EstimationError(
            f"Unknown initialization scenario '{scenario_id}' (available: {list(SCENARIOS)})"
        ) from None


@dataclass(frozen=True)
class MEstimateResult:
    location: float
    iterations: int
    converged: bool
    init_used: InitScenario
    scale: float = 0.0

    def to_dict(self) -> dict[str, Any]:
        return {
            "location": self.location,
            "iterations": self.iterations,
            "converged": self.converged,
            "scenario": self.init_used.to_dict(),
            "scale": self.scale,
        }


def huber_psi(t: float | np.ndarray, c: float = DEFAULT_C) -> float | np.ndarray:
    """psi(t) = t inside [-c, c], c*sign(t) outside."""
    if not c > 0:
        raise ValueError(f"tuning constant must be positive, got {c}")
    out = np.clip(t, -c, c)
    return float(out) if np.ndim(out) == 0 else out


def m_estimate(
    s: SortedSample,
    init: InitScenario,
    c: float = DEFAULT_C,
    tol: float = 1e-8,
    max_iter: int = 200,
) -> MEstimateResult:
    x = s.values
    try:
        scale = get_scale_estimator(init.scale_method)(s).value
    except (DegenerateScale, SampleTooSmall) as exc:
        raise DegenerateInitialScale(f"scenario ({init.id}): {exc}") from exc
    if not scale > 0:
        raise DegenerateInitialScale(f"scenario ({init.id}): initial {init.scale_method} is 0")

    mu = _INITIAL_LOCATIONS[init.location_method](s).value
    for iteration in range(1, max_iter + 1):
        r = np.abs(x - mu) / scale
        w = np.where(r <= c, 1.0, c / np.maximum(r, c))
        new_mu = float(np.dot(w, x) / np.sum(w))
        step = abs(new_mu - mu)
        mu = new_mu
        if step <= tol * scale:
            return MEstimateResult(mu, iteration, True, init, scale)
    logger.warning("Huber IRLS (scenario %s) did not converge in %d iterations", init.id, max_iter)
    return MEstimateResult(mu, max_iter, False, init, scale)


def m_location(s: SortedSample, scenario: str = "b", c: float = DEFAULT_C) -> ModeEstimate:
    """m_estimate under a named scenario, shaped like the other estimators' output."""
    result = m_estimate(s, get_scenario(scenario), c=c)
    return ModeEstimate(
        result.location,
        f"m_{scenario}",
        {"iterations": result.iterations, "converged": result.converged, "scale": result.scale},
    )


__all__ = [
    "DEFAULT_C",
    "InitScenario",
    "MEstimateResult",
    "SCENARIOS",
    "get_scenario",
    "huber_psi",
    "m_estimate",
    "m_location",
]
