from __future__ import annotations

import numpy as np
import pytest

from minimode.core.order_stats import sort_sample
from minimode.exceptions import InvalidConfig
from minimode.robustness.breakdown import breakdown_trial


@pytest.mark.parametrize("nu", [0, 1, 10, 20])
@pytest.mark.parametrize("name", ["hsm", "shorth", "lms", "median"])
def test_high_breakdown_estimators_stay_bounded(normal_sample, name: str, nu: int) -> None:
    result = breakdown_trial(name, normal_sample(50), nu, 1e9)
    assert result.bounded
    assert result.lower <= result.estimate <= result.upper


def test_mean_breaks_with_one_outlier(normal_sample) -> None:
    assert not breakdown_trial("mean", normal_sample(50), 1, 1e9).bounded


def test_grenander_diverges_with_k_plus_one_outliers(normal_sample) -> None:
    clean = normal_sample(50)
    result = breakdown_trial("grenander", clean, 4, 1e9)
    assert not result.bounded
    assert result.estimate > clean.values[-1]


def test_breakdown_result_serializes(normal_sample) -> None:
    d = breakdown_trial("hsm", normal_sample(20), 3, -1e6).to_dict()
    assert d["nu"] == 3
    assert set(d) == {"bounded", "estimate", "lower", "upper", "nu"}


def test_breakdown_rejects_negative_nu(normal_sample) -> None:
    with pytest.raises(InvalidConfig):
        breakdown_trial("hsm", normal_sample(10), -1, 1e9)


@pytest.mark.parametrize("name", ["hsm", "shorth", "lms", "hrm", "median"])
def test_survives_just_under_half_outliers(name: str) -> None:
    rng = np.random.default_rng(41)
    for _ in range(100):
        n = int(rng.integers(6, 80))
        nu = (n - 1) // 2
        clean = sort_sample(rng.normal(size=n - nu) * rng.uniform(0.5, 3))
        assert breakdown_trial(name, clean, nu, 1e9).bounded


def test_mean_and_grenander_escape_in_random_trials() -> None:
    rng = np.random.default_rng(42)
    for _ in range(100):
        clean = sort_sample(rng.normal(size=int(rng.integers(10, 60))))
        assert not breakdown_trial("mean", clean, 1, 1e9).bounded
        assert not breakdown_trial("grenander", clean, 4, 1e9).bounded
