"""Helpers shared by the subcommands: config layering, errors, output."""

from __future__ import annotations

from collections.abc import Iterator, Mapping, Sequence
from contextlib import contextmanager
from pathlib import Path
from typing import Any

import typer

from minimode.cli.console import get_console, get_err_console
from minimode.config import build_config
from minimode.config.schema import ModeConfig, validate_config
from minimode.data.loader import LoadedSample, load_city_sizes, load_sample_file
from minimode.estimators import BoundEstimator, get_estimator
from minimode.exceptions import MalformedInput, MinimodeError
from minimode.utils.serialize import UNSET, render_csv, render_json, write_text

console = get_console()
err_console = get_err_console()


@contextmanager
def cli_errors() -> Iterator[None]:
    """Turn library errors into a red message and the family's exit code."""
    try:
        yield
    except MinimodeError as exc:
        err_console.print(f"[error]Error:[/error] {exc}")
        raise typer.Exit(exc.exit_code) from exc


def flag(value: Any) -> Any:
    """UNSET for options the user did not pass, so config values survive the merge."""
    if value is None or (isinstance(value, list) and not value):
        return UNSET
    return value


def load_mode_config(config_spec: list[str] | None, overrides: Mapping[str, Any]) -> ModeConfig:
    return validate_config(build_config(config_spec, dict(overrides)))


def output_target(out: Path | None, config: ModeConfig) -> Path | None:
    """--out wins over run.output_path; None means stdout."""
    if out is not None:
        return out
    return Path(config.run.output_path) if config.run.output_path else None


def bind_estimator(name: str, config: ModeConfig, params: Mapping[str, Any]) -> BoundEstimator:
    """Registry lookup with config defaults overridden by explicit CLI parameters."""
    merged = config.estimator_params(name)
    merged.update({k: v for k, v in params.items() if v is not None})
    return get_estimator(name, **merged)


def load_input(input_file: Path | None, city: str | None) -> LoadedSample:
    if (input_file is None) == (city is None):
        raise MalformedInput("provide exactly one of --input/-f or --city")
    if city is not None:
        return LoadedSample(load_city_sizes(city).values, None, (city,))
    return load_sample_file(input_file)


def render_table(rows: Sequence[Mapping[str, Any]], columns: Sequence[str], fmt: str, key: str) -> str:
    if fmt == "json":
        return render_json({key: [dict(r) for r in rows]})
    return render_csv(rows, columns)


def emit(text: str, out: Path | None) -> None:
    """Write to --out when given, otherwise to stdout."""
    if out is None:
        typer.echo(text, nl=False)
        return
    write_text(text, out)
    err_console.print(f"Wrote [path]{out}[/path]")


__all__ = [
    "bind_estimator",
    "cli_errors",
    "console",
    "emit",
    "err_console",
    "flag",
    "load_input",
    "load_mode_config",
    "output_target",
    "render_table",
]
