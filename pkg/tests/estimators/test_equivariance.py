"""Affine equivariance T(a*x + b) = a*T(x) + b across the location estimators."""

from __future__ import annotations

import numpy as np
import pytest

from minimode.core.order_stats import sort_sample
from minimode.estimators import get_estimator
from minimode.estimators.halfsample import hsm

TRIPLES = 1000
AFFINE = ["hsm", "fsm", "shorth", "lms", "hrm", "epdfm", "grenander", "median", "mean"]
REFLECTION = ["hsm", "shorth", "lms", "hrm", "epdfm", "grenander", "median", "mean"]


def _triples(seed: int, count: int):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(5, 40))
        x = sort_sample(rng.standard_t(4, size=n) * rng.uniform(0.1, 10))
        a = float(rng.uniform(0.05, 20))
        b = float(rng.uniform(-1000, 1000))
        yield x, a, b


def _tolerance(x, a: float, b: float) -> float:
    return 1e-9 * (a * float(np.ptp(x.values)) + abs(b) + 1.0)


@pytest.mark.parametrize("name", AFFINE)
def test_affine_equivariance(name: str) -> None:
    est = get_estimator(name)
    count = TRIPLES if name not in ("epdfm", "grenander") else TRIPLES // 5
    for x, a, b in _triples(1, count):
        expected = a * est(x).value + b
        assert abs(est(x.transformed(a, b)).value - expected) <= _tolerance(x, a, b)


@pytest.mark.parametrize("name", REFLECTION)
def test_reflection_equivariance(name: str) -> None:
    est = get_estimator(name)
    for x, _, _ in _triples(2, 200):
        assert abs(est(x.transformed(-1.0)).value + est(x).value) <= _tolerance(x, 1.0, 0.0)


def test_pm_is_scale_equivariant() -> None:
    est = get_estimator("pm")
    rng = np.random.default_rng(3)
    for _ in range(20):
        x = sort_sample(rng.lognormal(0.5, 0.6, size=200))
        a = float(rng.uniform(0.1, 50))
        assert est(x.transformed(a)).value == pytest.approx(a * est(x).value, rel=1e-6)


def test_hsm_bounded_under_contamination(normal_sample) -> None:
    clean = normal_sample(60).values
    lo, hi = clean[0], clean[-1]
    for nu in (1, 10, 29):
        for magnitude in (1e3, 1e9, -1e9):
            outliers = magnitude * (1 + np.arange(nu) / nu)
            value = hsm(sort_sample(np.concatenate([clean, outliers]))).value
            assert lo - (hi - lo) <= value <= hi + (hi - lo)


def test_hsm_converges_on_quantile_samples(normal_sample) -> None:
    errors = [abs(hsm(normal_sample(2**k, loc=1.0)).value - 1.0) for k in range(5, 13)]
    assert errors[-1] < errors[0]
    assert errors[-1] < 0.05
