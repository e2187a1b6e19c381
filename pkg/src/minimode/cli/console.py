"""Rich consoles and number formatting shared by the `modal` output components."""

from __future__ import annotations

import math

from rich.console import Console
from rich.theme import Theme

MODAL_THEME = Theme(
    {
        "estimator": "bold",
        "path": "cyan",
        "error": "bold red",
        "muted": "dim",
    }
)

_consoles: dict[bool, Console] = {}


def get_console(stderr: bool = False) -> Console:
    """One themed console per stream. CSV and JSON results own stdout."""
    if stderr not in _consoles:
        _consoles[stderr] = Console(stderr=stderr, theme=MODAL_THEME)
    return _consoles[stderr]


def get_err_console() -> Console:
    return get_console(stderr=True)


def format_number(value: float, digits: int = 3) -> str:
    """Fixed-point table cell; infinite rejection points and excluded values print as words."""
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return f"{value:.{digits}f}"


__all__ = ["MODAL_THEME", "format_number", "get_console", "get_err_console"]
