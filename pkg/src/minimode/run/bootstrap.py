"""`modal bootstrap`: bootstrap summary and modal skewness of a sample."""

from __future__ import annotations

from pathlib import Path

import typer

from minimode.cli.components import print_bootstrap
from minimode.inference.bootstrap import bootstrap_summary, modal_skewness
from minimode.run.common import (
    bind_estimator,
    cli_errors,
    emit,
    flag,
    load_input,
    load_mode_config,
    output_target,
)
from minimode.utils.serialize import render_json

app = typer.Typer(
    name="bootstrap",
    help="Bootstrap SE, bias-corrected quartiles and modal skewness.",
    add_completion=False,
)


@app.callback(invoke_without_command=True)
def main(
    input_file: Path | None = typer.Option(
        None, "--input", "-f", help="One value per line, or CSV with a value column."
    ),
    city: str | None = typer.Option(
        None, "--city", help="Use the bundled city-size data: column u (1920) or x (1930)."
    ),
    estimator: str | None = typer.Option(None, "--estimator", "-e", help="Estimator (default hsm)."),
    b: int | None = typer.Option(None, "--b", "--reps", help="Resamples (default 2000)."),
    seed: int | None = typer.Option(None, "--seed", help="Master seed."),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write the JSON here instead of stdout."),
    config_spec: list[str] | None = typer.Option(
        None, "--config", "-c", help="Config file(s) or key=value overrides."
    ),
) -> None:
    """Resample the data, re-estimate, and summarize."""
    with cli_errors():
        config = load_mode_config(
            config_spec,
            {"run": {"seed": flag(seed)}, "bootstrap": {"b": flag(b), "estimator": flag(estimator)}},
        )
        out = output_target(out, config)
        data = load_input(input_file, city)
        sample = data.sorted()
        est = bind_estimator(config.bootstrap.estimator, config, {})
        summary = bootstrap_summary(sample, est, config.bootstrap.b, seed=config.run.seed)
        skewness = modal_skewness(sample, summary.estimate) if est.estimand == "mode" else None
        if out is not None:
            print_bootstrap(summary, skewness)
        payload = {"estimator": est.name, "n": sample.n, **summary.to_dict(), "modal_skewness": skewness}
        emit(render_json(payload), out)
