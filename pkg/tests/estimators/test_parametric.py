from __future__ import annotations

import math

import numpy as np
import pytest
from scipy import stats

from minimode.core.order_stats import SortedSample, sort_sample
from minimode.estimators.parametric import (
    normal_scores,
    pm,
    pm_fit,
    pm_mode,
    power_transform,
    search_beta,
    standard_pm,
)
from minimode.estimators.types import PmTransformFit
from minimode.exceptions import DegenerateScale, NegativeDiscriminant, NonPositiveData


def _lognormal_quantiles(n: int) -> SortedSample:
    probs = (np.arange(1, n + 1) - 0.5) / n
    return SortedSample(stats.lognorm.ppf(probs, 1.0))


def test_power_transform_is_continuous_at_zero() -> None:
    x = np.array([0.5, 1.0, 2.0, 7.0])
    assert power_transform(x, 0.0) == pytest.approx(np.log(x))
    assert power_transform(x, 1e-7) == pytest.approx(np.log(x), abs=1e-5)
    assert power_transform(x, 1.0) == pytest.approx(x - 1)


def test_normal_scores_are_symmetric_and_cached() -> None:
    z = normal_scores(11)
    assert z[5] == pytest.approx(0.0, abs=1e-12)
    assert z == pytest.approx(-z[::-1])
    assert normal_scores(11) is z


@pytest.mark.parametrize(
    ("beta", "m", "s", "expected"),
    [
        (1.0, 2.0, 0.7, 3.0),
        (0.0, 0.0, 1.0, math.exp(-1.0)),
        (0.0, 1.5, 0.5, math.exp(1.25)),
    ],
)
def test_pm_mode_closed_form(beta: float, m: float, s: float, expected: float) -> None:
    fit = PmTransformFit(beta=beta, m=m, s=s, r_value=1.0)
    assert pm_mode(fit).value == pytest.approx(expected)


def test_pm_mode_negative_discriminant() -> None:
    with pytest.raises(NegativeDiscriminant):
        pm_mode(PmTransformFit(beta=0.5, m=-2.0, s=1.0, r_value=1.0))


def test_pm_on_lognormal_quantiles() -> None:
    s = _lognormal_quantiles(1000)
    fit = pm_fit(s)
    assert fit.beta == pytest.approx(0.0, abs=0.05)
    assert fit.r_value > 0.999
    assert pm(s).value == pytest.approx(math.exp(-1.0), abs=0.03)
    assert standard_pm(s).estimator_id == "standard_pm"


def test_pm_rejects_nonpositive_data() -> None:
    with pytest.raises(NonPositiveData):
        pm(sort_sample([-1.0, 1.0, 2.0]))
    with pytest.raises(NonPositiveData):
        pm(sort_sample([0.0, 1.0, 2.0]))


@pytest.mark.parametrize("values", [[1.0, 2.0], [3.0, 3.0, 3.0, 3.0]])
def test_pm_rejects_degenerate_samples(values: list[float]) -> None:
    with pytest.raises(DegenerateScale):
        pm_fit(sort_sample(values))


def test_pm_fit_on_normal_scores_is_linear() -> None:
    s = SortedSample(6.0 + normal_scores(400))
    fit = pm_fit(s)
    assert fit.beta == pytest.approx(1.0, abs=0.05)
    assert fit.r_value == pytest.approx(1.0, abs=1e-9)
    assert pm(s).value == pytest.approx(6.0, abs=0.05)


def test_normality_score_ignores_units() -> None:
    s = _lognormal_quantiles(300)
    beta, r_value = search_beta(s.values)
    for factor in (0.01, 3.7, 250.0):
        scaled_beta, scaled_r = search_beta(factor * s.values)
        assert scaled_beta == pytest.approx(beta, abs=1e-6)
        assert scaled_r == pytest.approx(r_value, abs=1e-9)
