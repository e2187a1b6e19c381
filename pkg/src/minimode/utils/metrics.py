"""Error summaries for Monte-Carlo studies."""

from __future__ import annotations

from typing import Protocol

import numpy as np


class Metric(Protocol):
    """Protocol for summaries of a vector of estimation errors."""

    name: str

    def compute(self, errors: np.ndarray) -> float: ...


class Bias:
    """Mean error."""

    name = "bias"

    def compute(self, errors: np.ndarray) -> float:
        return float(np.mean(errors))


class StdError:
    """Spread of the estimates around their own mean (population form, ddof=0)."""

    name = "se"

    def compute(self, errors: np.ndarray) -> float:
        return float(np.std(errors, ddof=0))


class Rmse:
    """Square root of the mean squared error."""

    name = "rmse"

    def compute(self, errors: np.ndarray) -> float:
        return float(np.sqrt(np.mean(np.square(errors))))


class McStdError:
    """Monte-Carlo standard error of the bias."""

    name = "mc_se"

    def compute(self, errors: np.ndarray) -> float:
        if errors.size < 2:
            return float("nan")
        return float(np.std(errors, ddof=1) / np.sqrt(errors.size))


_METRIC_REGISTRY: dict[str, Metric] = {}


def register_metric(metric: Metric) -> None:
    _METRIC_REGISTRY[metric.name] = metric


def get_metrics() -> dict[str, Metric]:
    return dict(_METRIC_REGISTRY)


for _metric in (Bias(), StdError(), Rmse(), McStdError()):
    register_metric(_metric)


def evaluate_errors(errors: np.ndarray) -> dict[str, float]:
    """Run all registered metrics and return {metric_name: value}."""
    errors = np.asarray(errors, dtype=float)
    if errors.size == 0:
        raise ValueError("Cannot summarise an empty error vector")
    return {name: metric.compute(errors) for name, metric in _METRIC_REGISTRY.items()}


__all__ = ["Metric", "evaluate_errors", "get_metrics", "register_metric"]
