from __future__ import annotations

import numpy as np
import pytest

from minimode.core.order_stats import sort_sample
from minimode.estimators.shorth import lms_location, shorth, shorth_window


@pytest.mark.parametrize(
    ("values", "expected"),
    [([0, 1, 2, 9], 1.0), ([5], 5.0), ([-2, -0.1, 0, 0.1, 2], 0.0)],
)
def test_shorth_examples(values: list[float], expected: float) -> None:
    assert shorth(sort_sample(values)).value == pytest.approx(expected, abs=1e-15)


def test_shorth_ties_take_leftmost_window() -> None:
    assert shorth_window(sort_sample([-1, 0, 1])) == (0, 1)
    assert shorth(sort_sample([-1, 0, 1])).value == -0.5


def test_lms_is_midpoint_of_shortest_half() -> None:
    est = lms_location(sort_sample([0, 1, 2, 9]))
    assert est.value == 1.0
    assert est.diagnostics["interval"] == [0.0, 2.0]
    assert lms_location(sort_sample([5])).value == 5.0


def test_lms_and_shorth_share_window() -> None:
    rng = np.random.default_rng(8)
    for _ in range(200):
        s = sort_sample(rng.standard_t(3, size=int(rng.integers(1, 60))))
        a, b = shorth(s), lms_location(s)
        assert a.diagnostics["start"] == b.diagnostics["start"]
        assert a.diagnostics["interval"] == b.diagnostics["interval"]
        assert s.values[0] <= a.value <= s.values[-1]
        assert s.values[0] <= b.value <= s.values[-1]
