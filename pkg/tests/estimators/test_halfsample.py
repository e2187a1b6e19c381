from __future__ import annotations

import numpy as np
import pytest

from minimode.core.order_stats import sort_sample, sort_weighted
from minimode.estimators.halfsample import fsm, fsmw, hsm
from minimode.exceptions import AlphaOutOfRange


def _reference_hsm(x: list[float]) -> float:
    """Recursive half-sample mode written straight from the definition."""
    n = len(x)
    if n == 1:
        return x[0]
    if n == 2:
        return (x[0] + x[1]) / 2
    if n == 3:
        if x[1] - x[0] < x[2] - x[1]:
            return (x[0] + x[1]) / 2
        if x[1] - x[0] > x[2] - x[1]:
            return (x[1] + x[2]) / 2
        return x[1]
    size = -(-n // 2)
    best = 0
    for j in range(1, n - size + 1):
        if x[j + size - 1] - x[j] < x[best + size - 1] - x[best]:
            best = j
    return _reference_hsm(x[best : best + size])


@pytest.mark.parametrize(
    ("values", "expected"),
    [([5], 5.0), ([1, 2], 1.5), ([1, 2, 3], 2.0), ([0, 1, 3], 0.5), ([0, 1, 1.1, 5], 1.05)],
)
def test_hsm_worked_examples(values: list[float], expected: float) -> None:
    assert hsm(sort_sample(values)).value == expected


def test_hsm_matches_recursive_reference() -> None:
    rng = np.random.default_rng(2024)
    for trial in range(10_000):
        n = int(rng.integers(1, 65))
        if trial % 3 == 0:
            raw = rng.integers(0, 8, size=n).astype(float)
        else:
            raw = rng.standard_normal(n) * rng.uniform(0.1, 10)
        s = sort_sample(raw)
        assert hsm(s).value == _reference_hsm(s.values.tolist())


def test_hsm_reports_final_interval() -> None:
    est = hsm(sort_sample([0, 1, 1.1, 5]))
    assert est.estimator_id == "hsm"
    assert est.diagnostics["interval"] == [1.0, 1.1]
    assert est.diagnostics["iterations"] == 1


def test_hsm_city_data_is_fifty(city_1930) -> None:
    assert hsm(city_1930).value == 50.0


def test_fsm_examples() -> None:
    assert fsm(sort_sample([5]), 0.3).value == 5.0
    assert fsm(sort_sample([0, 1, 2, 3, 4, 100]), 1 / 3).value == 0.5


def test_fsm_half_equals_hsm() -> None:
    rng = np.random.default_rng(3)
    for _ in range(200):
        s = sort_sample(rng.gamma(2.0, size=int(rng.integers(1, 80))))
        assert fsm(s, 0.5).value == hsm(s).value


@pytest.mark.parametrize("alpha", [0.0, 1.0, -0.2, 1.3])
def test_fsm_rejects_alpha_outside_unit_interval(alpha: float) -> None:
    with pytest.raises(AlphaOutOfRange):
        fsm(sort_sample([1, 2, 3]), alpha)


def test_fsm_estimate_stays_inside_sample() -> None:
    rng = np.random.default_rng(5)
    for alpha in (0.1, 0.25, 0.6, 0.9):
        for _ in range(50):
            s = sort_sample(rng.lognormal(size=int(rng.integers(1, 60))))
            assert s.values[0] <= fsm(s, alpha).value <= s.values[-1]


def test_fsmw_examples() -> None:
    equal = sort_weighted([0, 1, 1.1, 5], [1, 1, 1, 1])
    assert fsmw(equal, 0.5).value == pytest.approx(1.05)
    assert fsmw(sort_weighted([0, 10], [9, 1]), 0.5).value == 0.0


def test_fsmw_duplicate_equals_double_weight() -> None:
    duplicated = sort_weighted([0.0, 1.0, 1.0, 1.4, 3.0, 3.2], [1, 1, 1, 2, 1, 1])
    doubled = sort_weighted([0.0, 1.0, 1.4, 3.0, 3.2], [1, 2, 2, 1, 1])
    for p in (0.06, 0.2, 0.5, 0.8):
        assert fsmw(duplicated, p).value == fsmw(doubled, p).value


def test_fsmw_unit_weights_half_reproduces_hsm() -> None:
    rng = np.random.default_rng(17)
    for _ in range(500):
        s = sort_sample(rng.standard_normal(int(rng.integers(1, 50))))
        w = sort_weighted(s.values, np.ones(s.n))
        assert fsmw(w, 0.5).value == hsm(s).value


def test_fsmw_tied_values_follow_hsm() -> None:
    assert fsmw(sort_weighted([0, 0, 1, 1], np.ones(4)), 0.5).value == 0.0
    assert hsm(sort_sample([0, 0, 1, 1])).value == 0.0
    rng = np.random.default_rng(23)
    for _ in range(2000):
        s = sort_sample(rng.integers(0, 6, size=int(rng.integers(1, 40))).astype(float))
        w = sort_weighted(s.values, np.ones(s.n))
        assert fsmw(w, 0.5).value == hsm(s).value


def test_fsmw_integer_weights_count_observations() -> None:
    counted = sort_weighted([0.0, 1.0, 4.0], [2, 1, 3])
    expanded = sort_sample([0.0, 0.0, 1.0, 4.0, 4.0, 4.0])
    assert fsmw(counted, 0.5).value == hsm(expanded).value == 4.0
    assert fsmw(sort_weighted([0.0, 1.0], [1, 2]), 0.5).value == 1.0


def test_fsmw_single_support_point() -> None:
    assert fsmw(sort_weighted([2.5, 2.5, 2.5], [1, 3, 2]), 0.06).value == 2.5


@pytest.mark.parametrize("p", [0.0, 1.0])
def test_fsmw_rejects_bad_fraction(p: float) -> None:
    with pytest.raises(AlphaOutOfRange):
        fsmw(sort_weighted([1, 2], [1, 1]), p)
