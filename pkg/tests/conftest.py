from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
import pytest
from scipy import stats

# Allow `pytest` without editable install.
ROOT = Path(__file__).resolve().parents[1]
SRC = ROOT / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

from minimode.core.order_stats import SortedSample  # noqa: E402
from minimode.data.loader import load_city_sizes  # noqa: E402


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption(
        "--run-slow",
        action="store_true",
        default=False,
        help="Run tests marked with 'slow' (full-size Monte-Carlo reproductions).",
    )


def pytest_collection_modifyitems(config: pytest.Config, items: list[pytest.Item]) -> None:
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="slow tests require --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


def normal_quantiles(n: int, loc: float = 0.0, scale: float = 1.0) -> SortedSample:
    """Phi^-1((i - 1/2)/n), i = 1..n."""
    probs = (np.arange(1, n + 1) - 0.5) / n
    return SortedSample(stats.norm.ppf(probs, loc=loc, scale=scale))


@pytest.fixture
def normal_sample():
    return normal_quantiles


@pytest.fixture
def standard_normal_quantiles() -> SortedSample:
    return normal_quantiles(1000)


@pytest.fixture
def city_1930() -> SortedSample:
    return load_city_sizes("x")


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240607)
