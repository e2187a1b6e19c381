from __future__ import annotations

import numpy as np
import pytest

from minimode.core.order_stats import sort_sample
from minimode.estimators.huber import (
    SCENARIOS,
    get_scenario,
    huber_psi,
    m_estimate,
    m_location,
)
from minimode.exceptions import DegenerateInitialScale, EstimationError


@pytest.mark.parametrize(("t", "expected"), [(0.5, 0.5), (3.0, 1.5), (-3.0, -1.5), (1.5, 1.5)])
def test_huber_psi(t: float, expected: float) -> None:
    assert huber_psi(t, 1.5) == expected


def test_huber_psi_vector_and_bad_c() -> None:
    assert huber_psi(np.array([-2.0, 0.0, 2.0]), 1.0).tolist() == [-1.0, 0.0, 1.0]
    with pytest.raises(ValueError):
        huber_psi(1.0, 0.0)


def test_scenarios_table() -> None:
    assert list(SCENARIOS) == ["a", "b", "c", "d", "e", "f"]
    assert SCENARIOS["d"].location_method == "hsm"
    assert SCENARIOS["f"].scale_method == "hwhm"
    with pytest.raises(EstimationError, match="scenario"):
        get_scenario("z")


@pytest.mark.parametrize("sid", list("abcdef"))
def test_m_estimate_symmetric_sample(normal_sample, sid: str) -> None:
    result = m_estimate(normal_sample(100, loc=3.0), SCENARIOS[sid])
    assert result.converged
    assert result.location == pytest.approx(3.0, abs=1e-6)
    assert result.scale > 0


def test_c_and_d_agree_on_symmetric_data(normal_sample) -> None:
    s = normal_sample(100)
    c = m_estimate(s, SCENARIOS["c"]).location
    d = m_estimate(s, SCENARIOS["d"]).location
    assert c == pytest.approx(d, abs=1e-6)


@pytest.mark.parametrize("sid", list("abcdef"))
def test_m_estimate_is_equivariant(sid: str) -> None:
    rng = np.random.default_rng(13)
    for _ in range(10):
        s = sort_sample(rng.normal(size=60))
        a, b = float(rng.uniform(0.2, 5)), float(rng.uniform(-50, 50))
        base = m_estimate(s, SCENARIOS[sid]).location
        moved = m_estimate(s.transformed(a, b), SCENARIOS[sid]).location
        assert moved == pytest.approx(a * base + b, rel=1e-7, abs=1e-7 * a)


def test_single_outlier_moves_estimate_by_bounded_step(normal_sample) -> None:
    clean = normal_sample(100)
    before = m_estimate(clean, SCENARIOS["b"]).location
    after = m_estimate(sort_sample(np.append(clean.values, 1e9)), SCENARIOS["b"])
    assert abs(after.location - before) < 2 * 1.5 * after.scale / 100


def test_degenerate_initial_scale() -> None:
    with pytest.raises(DegenerateInitialScale, match=r"\(b\)"):
        m_estimate(sort_sample([1, 1, 1, 5]), SCENARIOS["b"])


def test_m_location_shape() -> None:
    est = m_location(sort_sample([1.0, 2.0, 2.5, 3.0, 9.0]), scenario="b", c=1.5)
    assert est.estimator_id == "m_b"
    assert est.diagnostics["converged"] is True


def test_median_scenario_uses_raw_mad() -> None:
    s = sort_sample([1.0, 2.0, 2.5, 3.0, 9.0])
    assert SCENARIOS["b"].scale_method == "mad_raw"
    assert m_estimate(s, SCENARIOS["b"]).scale == 0.5
