"""Estimator registry for mini-mode."""

from __future__ import annotations

import copy
import importlib
import inspect
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any, NamedTuple

from minimode.core.order_stats import SortedSample, WeightedSortedSample
from minimode.estimators.types import ModeEstimate
from minimode.exceptions import UnknownEstimator


class _Entry(NamedTuple):
    path: str
    estimand: str
    weighted: bool = False
    defaults: dict[str, Any] = {}


_ESTIMATOR_MAPPING: dict[str, _Entry] = {
    "hsm": _Entry("minimode.estimators.halfsample.hsm", "mode"),
    "fsm": _Entry("minimode.estimators.halfsample.fsm", "mode", defaults={"alpha": 0.5}),
    "fsmw": _Entry("minimode.estimators.halfsample.fsmw", "mode", True, {"p": 0.06}),
    "shorth": _Entry("minimode.estimators.shorth.shorth", "mode"),
    "lms": _Entry("minimode.estimators.shorth.lms_location", "mode"),
    "modal_interval": _Entry(
        "minimode.estimators.modal_interval.modal_interval_midpoint", "mode", defaults={"w": 1.0}
    ),
    "hrm": _Entry("minimode.estimators.modal_interval.hrm", "mode"),
    "epdfm": _Entry("minimode.estimators.density.epdfm", "mode"),
    "epdfmw": _Entry("minimode.estimators.density.epdfmw", "mode", True, {"h": 0.018}),
    "histmw": _Entry(
        "minimode.estimators.histogram.histmw", "mode", True, {"bin": 0.008, "origin": 0.0}
    ),
    "grenander": _Entry("minimode.estimators.grenander.grenander", "mode", defaults={"p": 2.0, "k": 3}),
    "pm": _Entry("minimode.estimators.parametric.pm", "mode"),
    "standard_pm": _Entry("minimode.estimators.parametric.standard_pm", "mode"),
    "median": _Entry("minimode.estimators.location.median", "median"),
    "mean": _Entry("minimode.estimators.location.mean", "mean"),
    **{
        f"m_{sid}": _Entry(
            "minimode.estimators.huber.m_location", "location", defaults={"scenario": sid, "c": 1.5}
        )
        for sid in "abcdef"
    },
}


@dataclass(frozen=True)
class BoundEstimator:
    """An estimator function with its parameters fixed."""

    name: str
    estimand: str
    weighted: bool
    func: Callable[..., ModeEstimate]
    params: dict[str, Any] = field(default_factory=dict)

    def __call__(self, sample: SortedSample | WeightedSortedSample) -> ModeEstimate:
        if self.weighted and isinstance(sample, SortedSample):
            sample = WeightedSortedSample.uniform(sample)
        elif not self.weighted and isinstance(sample, WeightedSortedSample):
            sample = SortedSample(sample.values)
        return self.func(sample, **self.params)

    def serialize(self) -> dict[str, Any]:
        return {"estimator": self.name, "estimand": self.estimand, "params": dict(self.params)}


def estimator_names() -> list[str]:
    return list(_ESTIMATOR_MAPPING)


def get_estimator(name: str, **params: Any) -> BoundEstimator:
    """Resolve an estimator by name.

    Parameters the target function does not accept are dropped, so one flat
    parameter dict (e.g. from the CLI) can be passed to any estimator.
    """
    try:
        entry = _ESTIMATOR_MAPPING[name]
    except KeyError:
        raise UnknownEstimator(
            f"Unknown estimator: {name} (available: {estimator_names()})"
        ) from None
    module_name, func_name = entry.path.rsplit(".", 1)
    func = getattr(importlib.import_module(module_name), func_name)
    accepted = set(inspect.signature(func).parameters) - {"s"}
    merged = copy.deepcopy(entry.defaults)
    merged.update({k: v for k, v in params.items() if v is not None})
    bound = {k: v for k, v in merged.items() if k in accepted}
    return BoundEstimator(name, entry.estimand, entry.weighted, func, bound)


__all__ = ["BoundEstimator", "estimator_names", "get_estimator"]
