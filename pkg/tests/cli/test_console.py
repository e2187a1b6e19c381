from __future__ import annotations

import math

import pytest

from minimode.cli.console import format_number, get_console, get_err_console


def test_one_console_per_stream() -> None:
    assert get_console() is get_console()
    assert get_err_console() is get_console(stderr=True)
    assert get_err_console() is not get_console()
    assert get_err_console().stderr


@pytest.mark.parametrize(
    ("value", "digits", "text"),
    [
        (1.23456, 3, "1.235"),
        (0.5, 4, "0.5000"),
        (math.inf, 3, "inf"),
        (-math.inf, 3, "-inf"),
        (math.nan, 3, "nan"),
    ],
)
def test_format_number(value: float, digits: int, text: str) -> None:
    assert format_number(value, digits) == text
