from __future__ import annotations

import pytest

from minimode.core.order_stats import sort_weighted
from minimode.estimators.histogram import histmw
from minimode.exceptions import NonPositiveBinWidth


def test_histmw_picks_heaviest_bin() -> None:
    values = [0.1, 0.2, 5.0]
    assert histmw(sort_weighted(values, [1, 1, 1]), 1.0).value == 0.5
    assert histmw(sort_weighted(values, [1, 1, 3]), 1.0).value == 5.5


def test_histmw_origin_shifts_bins() -> None:
    est = histmw(sort_weighted([0.1, 0.2, 5.0], [1, 1, 1]), 1.0, origin=0.25)
    assert est.diagnostics["bin_index"] == -1
    assert est.value == pytest.approx(-0.25)


def test_histmw_tie_is_leftmost() -> None:
    assert histmw(sort_weighted([0.5, 1.5], [2, 2]), 1.0).value == 0.5


def test_histmw_single_point() -> None:
    est = histmw(sort_weighted([2.3], [3.0]), 1.0)
    assert est.value == 2.5
    assert est.diagnostics["content"] == 3.0


@pytest.mark.parametrize("bin_width", [0.0, -0.5])
def test_histmw_rejects_nonpositive_bin(bin_width: float) -> None:
    with pytest.raises(NonPositiveBinWidth):
        histmw(sort_weighted([1.0], [1.0]), bin_width)


def test_histmw_value_on_edge_opens_its_bin() -> None:
    est = histmw(sort_weighted([0.3, 0.35, 0.05], [1, 1, 1]), 0.1)
    assert est.diagnostics["bin_index"] == 3
    assert est.value == pytest.approx(0.35)
    assert histmw(sort_weighted([0.7, 0.75, 0.1], [1, 1, 1]), 0.1, origin=0.1).value == pytest.approx(0.75)
