"""`modal ssc`: stylized sensitivity curve of one estimator."""

from __future__ import annotations

from pathlib import Path

import typer

from minimode.cli.components import print_curve_summary
from minimode.robustness.sensitivity import CURVE_COLUMNS, build_grid, scan_curve
from minimode.run.common import (
    bind_estimator,
    cli_errors,
    emit,
    flag,
    load_mode_config,
    output_target,
    render_table,
)
from minimode.sim.distributions import get_distribution
from minimode.utils.serialize import render_json

app = typer.Typer(
    name="ssc",
    help="Sensitivity curve, rejection point and gross-error sensitivity.",
    add_completion=False,
)


@app.callback(invoke_without_command=True)
def main(
    estimator: str = typer.Option("hsm", "--estimator", "-e", help="Estimator name."),
    dist: str = typer.Option("normal", "--dist", help="normal, lognormal or pareto."),
    n: int | None = typer.Option(None, "--n", help="Contaminated sample size (default 100)."),
    points: int | None = typer.Option(None, "--points", help="Core grid points (default 2001)."),
    p: float | None = typer.Option(None, "--p", help="fsmw fraction or grenander power."),
    k: int | None = typer.Option(None, "--k", help="grenander spacing."),
    alpha: float | None = typer.Option(None, "--alpha", help="fsm window fraction."),
    workers: int | None = typer.Option(None, "--workers", "-w", help="Parallel grid points."),
    fmt: str | None = typer.Option(None, "--format", help="csv (curve) or json (summary + curve)."),
    out: Path | None = typer.Option(None, "--out", "-o", help="Output file (stdout if omitted)."),
    config_spec: list[str] | None = typer.Option(
        None, "--config", "-c", help="Config file(s) or key=value overrides."
    ),
) -> None:
    """Evaluate the curve on the quantile sample of the chosen distribution."""
    with cli_errors():
        config = load_mode_config(
            config_spec,
            {
                "run": {"workers": flag(workers), "format": flag(fmt)},
                "ssc": {"n": flag(n), "points": flag(points)},
            },
        )
        out = output_target(out, config)
        cfg = config.ssc
        reference = get_distribution(dist)
        est = bind_estimator(estimator, config, {"p": p, "k": k, "alpha": alpha})
        grid = build_grid(reference, cfg.points, cfg.tail_prob, cfg.extension, cfg.extent)
        curve = scan_curve(est, reference, cfg.n, grid, workers=config.run.workers)
        if out is not None:
            print_curve_summary(curve)
        if config.run.format == "json":
            text = render_json({"summary": curve.summary(), "curve": curve.rows()})
        else:
            text = render_table(curve.rows(), CURVE_COLUMNS, "csv", "curve")
        emit(text, out)
