from __future__ import annotations

import numpy as np
import pytest

from minimode.core.order_stats import sort_sample
from minimode.estimators.modal_interval import hrm, modal_interval_midpoint
from minimode.exceptions import NonPositiveWidth


def test_modal_interval_examples() -> None:
    est = modal_interval_midpoint(sort_sample([0, 0.1, 5]), 1.0)
    assert est.value == 0.5
    assert est.diagnostics["count"] == 2
    assert modal_interval_midpoint(sort_sample([5]), 2.0).value == 6.0
    # wider than the range: the first anchor already holds everything
    assert modal_interval_midpoint(sort_sample([1, 2, 3]), 5.0).value == 3.5


@pytest.mark.parametrize("w", [0.0, -1.0])
def test_modal_interval_rejects_nonpositive_width(w: float) -> None:
    with pytest.raises(NonPositiveWidth):
        modal_interval_midpoint(sort_sample([1, 2]), w)


@pytest.mark.parametrize(
    ("values", "expected"),
    [([0, 0.1, 0.2, 10], 0.05), ([1, 2], 1.5), ([5], 5.0), ([3, 3, 3], 3.0)],
)
def test_hrm_examples(values: list[float], expected: float) -> None:
    assert hrm(sort_sample(values)).value == pytest.approx(expected)


def test_hrm_iterations_reported() -> None:
    est = hrm(sort_sample([0, 0.1, 0.2, 10]))
    assert est.diagnostics["iterations"] == 2
    assert est.diagnostics["interval"] == [0.0, 0.1]


def test_hrm_stays_inside_sample() -> None:
    rng = np.random.default_rng(21)
    for _ in range(300):
        s = sort_sample(rng.lognormal(size=int(rng.integers(1, 100))))
        assert s.values[0] <= hrm(s).value <= s.values[-1]


def test_hrm_mirrors_under_reflection() -> None:
    s = sort_sample([0.0, 1.0, 1.2, 1.3, 4.0, 4.1, 4.15, 9.0])
    assert hrm(s.transformed(-1.0)).value == pytest.approx(-hrm(s).value, abs=1e-12)
    right_heavy = sort_sample([0.0, 5.0, 9.7, 9.8, 10.0])
    assert hrm(right_heavy).value == pytest.approx(9.75)
    assert hrm(right_heavy.transformed(-1.0)).value == pytest.approx(-9.75)
