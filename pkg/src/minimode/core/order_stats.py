"""Sorted samples and the shortest-window searches shared by interval estimators.

Indices returned by this module are 0-based.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from minimode.exceptions import (
    AlphaOutOfRange,
    EmptySample,
    KTooLarge,
    MalformedInput,
    NonFiniteValue,
)

# relative slack on the content threshold so that exact-fraction windows survive
# floating-point accumulation of the weights
_CONTENT_RTOL = 1e-12


def _as_finite_vector(raw: Iterable[float] | np.ndarray, what: str = "sample") -> np.ndarray:
    try:
        arr = np.array(raw, dtype=float)
    except (TypeError, ValueError) as exc:
        raise MalformedInput(f"{what} must contain real numbers: {exc}") from exc
    if arr.ndim != 1:
        raise MalformedInput(f"{what} must be one-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise EmptySample(f"{what} is empty")
    if not np.all(np.isfinite(arr)):
        bad = int(np.flatnonzero(~np.isfinite(arr))[0])
        raise NonFiniteValue(f"{what} has a non-finite value at position {bad}: {arr[bad]}")
    return arr


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class SortedSample:
    """Nondecreasing, finite, nonempty vector of observations."""

    values: np.ndarray

    def __post_init__(self) -> None:
        arr = _as_finite_vector(self.values)
        if arr.size > 1 and np.any(arr[1:] < arr[:-1]):
            raise ValueError("SortedSample values must be nondecreasing; use sort_sample()")
        object.__setattr__(self, "values", _freeze(arr))

    @property
    def n(self) -> int:
        return int(self.values.size)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SortedSample):
            return NotImplemented
        return np.array_equal(self.values, other.values)

    def __hash__(self) -> int:
        return hash(self.values.tobytes())

    def to_list(self) -> list[float]:
        return self.values.tolist()

    def transformed(self, a: float, b: float = 0.0) -> SortedSample:
        """Return the sample mapped through x -> a*x + b (re-sorted when a < 0)."""
        return sort_sample(a * self.values + b)


@dataclass(frozen=True, eq=False)
class WeightedSortedSample:
    """Sorted observations with strictly positive weights."""

    values: np.ndarray
    weights: np.ndarray

    def __post_init__(self) -> None:
        values = _as_finite_vector(self.values)
        weights = _as_finite_vector(self.weights, what="weights")
        if values.shape != weights.shape:
            raise MalformedInput(
                f"values and weights differ in length ({values.size} vs {weights.size})"
            )
        if np.any(weights <= 0):
            raise MalformedInput("weights must be strictly positive")
        if values.size > 1 and np.any(values[1:] < values[:-1]):
            raise ValueError("WeightedSortedSample values must be nondecreasing; use sort_weighted()")
        object.__setattr__(self, "values", _freeze(values))
        object.__setattr__(self, "weights", _freeze(weights))

    @property
    def n(self) -> int:
        return int(self.values.size)

    @property
    def total_weight(self) -> float:
        return float(np.sum(self.weights))

    def __len__(self) -> int:
        return self.n

    @classmethod
    def uniform(cls, sample: SortedSample, weight: float = 1.0) -> WeightedSortedSample:
        return cls(sample.values, np.full(sample.n, float(weight)))

    def merge_coincident(self) -> WeightedSortedSample:
        """Collapse equal values into one support point carrying the summed weight."""
        if self.n == 1:
            return self
        starts = np.flatnonzero(np.concatenate(([True], self.values[1:] != self.values[:-1])))
        if starts.size == self.n:
            return self
        return WeightedSortedSample(self.values[starts], np.add.reduceat(self.weights, starts))

    def transformed(self, a: float, b: float = 0.0) -> WeightedSortedSample:
        return sort_weighted(a * self.values + b, self.weights)


def sort_sample(raw: Iterable[float] | np.ndarray) -> SortedSample:
    """Validate and stably sort raw observations."""
    arr = _as_finite_vector(raw)
    return SortedSample(np.sort(arr, kind="stable"))


def sort_weighted(
    values: Iterable[float] | np.ndarray, weights: Iterable[float] | np.ndarray
) -> WeightedSortedSample:
    """Sort (value, weight) pairs by value, keeping pairs together."""
    v = _as_finite_vector(values)
    w = _as_finite_vector(weights, what="weights")
    if v.shape != w.shape:
        raise MalformedInput(f"values and weights differ in length ({v.size} vs {w.size})")
    order = np.argsort(v, kind="stable")
    return WeightedSortedSample(v[order], w[order])


def window_widths(values: np.ndarray, k: int) -> np.ndarray:
    """Widths values[j+k-1] - values[j] of every k-point window."""
    return values[k - 1 :] - values[: values.size - k + 1]


def shortest_interval(s: SortedSample, k: int) -> int:
    """Start index of the leftmost width-minimal window of k consecutive points."""
    if k < 1:
        raise KTooLarge(f"window size must be at least 1, got {k}")
    if k > s.n:
        raise KTooLarge(f"window size {k} exceeds sample size {s.n}")
    return int(np.argmin(window_widths(s.values, k)))


def content_minimal_windows(
    values: np.ndarray, weights: np.ndarray, p: float
) -> tuple[np.ndarray, np.ndarray]:
    """All windows [j, e] holding at least p of the total weight that lose the
    property when either endpoint is dropped. Returns (starts, ends)."""
    n = values.size
    cum = np.concatenate(([0.0], np.cumsum(weights)))
    total = cum[-1]
    target = p * total - _CONTENT_RTOL * total
    ends = np.searchsorted(cum, cum[:-1] + target, side="left") - 1
    starts = np.arange(n)
    valid = ends < n
    starts, ends = starts[valid], np.maximum(ends[valid], starts[valid])
    minimal = (cum[ends + 1] - cum[starts + 1]) < target
    return starts[minimal], ends[minimal]


def shortest_weighted_interval(s: WeightedSortedSample, p: float) -> tuple[int, int]:
    """Narrowest content-minimal window holding at least p of the total weight.

    Returns inclusive (start, end) indices; ties go to the smallest start.
    """
    if not 0.0 < p <= 1.0:
        raise AlphaOutOfRange(f"content fraction must lie in (0, 1], got {p}")
    starts, ends = content_minimal_windows(s.values, s.weights, p)
    idx = int(np.argmin(s.values[ends] - s.values[starts]))
    return int(starts[idx]), int(ends[idx])


__all__ = [
    "SortedSample",
    "WeightedSortedSample",
    "content_minimal_windows",
    "shortest_interval",
    "shortest_weighted_interval",
    "sort_sample",
    "sort_weighted",
    "window_widths",
]
