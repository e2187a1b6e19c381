"""Sample file parsing and the bundled city-size data."""

from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from minimode.core.order_stats import SortedSample, WeightedSortedSample, sort_sample, sort_weighted
from minimode.exceptions import EmptySample, MalformedInput

logger = logging.getLogger("minimode.data")

CITY_COLUMNS = ("u", "x")


@dataclass(frozen=True)
class LoadedSample:
    values: np.ndarray
    weights: np.ndarray | None = None
    columns: tuple[str, ...] = ()

    @property
    def weighted(self) -> bool:
        return self.weights is not None

    def sorted(self) -> SortedSample:
        return sort_sample(self.values)

    def sorted_weighted(self) -> WeightedSortedSample:
        if self.weights is None:
            return WeightedSortedSample.uniform(self.sorted())
        return sort_weighted(self.values, self.weights)


def _data_lines(text: str) -> list[str]:
    return [line for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]


def _is_number(field: str) -> bool:
    try:
        float(field)
    except ValueError:
        return False
    return True


VALUE_NAMES = ("value", "z")
WEIGHT_NAMES = ("weight", "pt")


def _named(columns: tuple[str, ...], names: tuple[str, ...]) -> int | None:
    lowered = [c.lower() for c in columns]
    for name in names:
        if name in lowered:
            return lowered.index(name)
    return None


def _select_columns(columns: tuple[str, ...], width: int, source: str) -> tuple[int, int | None]:
    """Indices of the value and weight columns.

    Named columns (value/z, weight/pt) are picked wherever they sit. Without them a
    one- or two-column file maps positionally; wider files must name their value column.
    """
    value = _named(columns, VALUE_NAMES) if columns else None
    weight = _named(columns, WEIGHT_NAMES) if columns else None
    if value is None:
        if width > 2 and not columns:
            raise MalformedInput(f"{source}: expected one or two columns without a header, got {width}")
        if width > 2:
            raise MalformedInput(
                f"{source}: {width} columns need a header naming the value column ({', '.join(VALUE_NAMES)})"
            )
        value = 1 if weight == 0 and width == 2 else 0
    if weight is None and width == 2:
        weight = 1 - value
    if weight == value:
        weight = None
    ignored = [c for i, c in enumerate(columns) if i not in (value, weight)]
    if ignored:
        logger.info("%s: ignoring columns %s", source, ", ".join(ignored))
    return value, weight


def parse_sample_text(text: str, source: str = "<input>") -> LoadedSample:
    """One value per line, or CSV with a value column and an optional weight column.

    A first row whose first field is not a number is taken as the header.
    """
    rows = list(csv.reader(io.StringIO("\n".join(_data_lines(text)))))
    if not rows:
        raise EmptySample(f"{source}: no observations")
    columns: tuple[str, ...] = ()
    if not _is_number(rows[0][0].strip()):
        columns = tuple(c.strip() for c in rows[0])
        rows = rows[1:]
    if not rows:
        raise EmptySample(f"{source}: no observations")

    width = len(columns) if columns else len(rows[0])
    value_col, weight_col = _select_columns(columns, width, source)
    values, weights = [], []
    for lineno, row in enumerate(rows, start=1):
        if len(row) != width:
            raise MalformedInput(f"{source}: row {lineno} has {len(row)} fields, expected {width}")
        try:
            values.append(float(row[value_col]))
            if weight_col is not None:
                weights.append(float(row[weight_col]))
        except ValueError as exc:
            raise MalformedInput(f"{source}: row {lineno}: {exc}") from exc
    return LoadedSample(
        np.asarray(values), np.asarray(weights) if weight_col is not None else None, columns
    )


def load_sample_file(path: Path | str) -> LoadedSample:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from exc
    return parse_sample_text(text, source=str(path))


def load_city_sizes(column: str = "x") -> SortedSample:
    """The bundled 49-city population sample (thousands): u = 1920, x = 1930."""
    if column not in CITY_COLUMNS:
        raise MalformedInput(f"city data has columns {CITY_COLUMNS}, not {column!r}")
    text = resources.files("minimode.data").joinpath("city_sizes.csv").read_text(encoding="utf-8")
    reader = csv.DictReader(io.StringIO("\n".join(_data_lines(text))))
    return sort_sample([float(row[column]) for row in reader])


__all__ = ["LoadedSample", "load_city_sizes", "load_sample_file", "parse_sample_text"]
