"""`modal estimate`: one estimate from a data file."""

from __future__ import annotations

import logging
from pathlib import Path

import typer

from minimode.estimators.scale import get_scale_estimator, scale_names
from minimode.run.common import (
    bind_estimator,
    cli_errors,
    emit,
    load_input,
    load_mode_config,
    output_target,
)
from minimode.utils.serialize import render_json

logger = logging.getLogger("minimode.run")

app = typer.Typer(
    name="estimate",
    help="Estimate the mode (or a scale) of a sample file.",
    add_completion=False,
)


@app.callback(invoke_without_command=True)
def main(
    input_file: Path | None = typer.Option(
        None, "--input", "-f", help="One value per line, or CSV with value[,weight] columns."
    ),
    city: str | None = typer.Option(
        None, "--city", help="Use the bundled city-size data: column u (1920) or x (1930)."
    ),
    estimator: str = typer.Option("hsm", "--estimator", "-e", help="Estimator or scale name."),
    p: float | None = typer.Option(None, "--p", help="fsmw window fraction (default 0.06) or grenander power."),
    k: int | None = typer.Option(None, "--k", help="grenander spacing (default 3)."),
    alpha: float | None = typer.Option(None, "--alpha", help="fsm window fraction (default 0.5)."),
    h: float | None = typer.Option(None, "--h", help="epdfmw bandwidth (default 0.018)."),
    bin_width: float | None = typer.Option(None, "--bin", help="histmw bin width (default 0.008)."),
    origin: float | None = typer.Option(None, "--origin", help="histmw bin origin (default 0)."),
    width: float | None = typer.Option(None, "--width", help="modal_interval width (default 1)."),
    scenario: str | None = typer.Option(None, "--scenario", help="Huber initialization a-f."),
    c: float | None = typer.Option(None, "--huber-c", help="Huber tuning constant (default 1.5)."),
    config_spec: list[str] | None = typer.Option(
        None, "--config", "-c", help="Config file(s) or key=value overrides."
    ),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write the JSON here instead of stdout."),
) -> None:
    """Print the estimate and its diagnostics as JSON."""
    with cli_errors():
        data = load_input(input_file, city)
        config = load_mode_config(config_spec, {})
        out = output_target(out, config)
        if estimator in scale_names():
            result = get_scale_estimator(estimator)(data.sorted()).to_dict()
        else:
            if scenario is not None and estimator.startswith("m_"):
                estimator = f"m_{scenario}"
            params = {
                "p": p,
                "k": k,
                "alpha": alpha,
                "h": h,
                "bin": bin_width,
                "origin": origin,
                "w": width,
                "c": c,
            }
            est = bind_estimator(estimator, config, params)
            if data.weighted and not est.weighted:
                logger.warning("%s ignores weights; using the values only", est.name)
            sample = data.sorted_weighted() if est.weighted else data.sorted()
            result = est(sample).to_dict()
        emit(render_json(result), out)
