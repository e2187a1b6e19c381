"""`modal bench`: mean seconds per estimator call."""

from __future__ import annotations

from pathlib import Path

import typer

from minimode import __version__
from minimode.cli.components import print_bench, print_cli_banner
from minimode.run.common import (
    bind_estimator,
    cli_errors,
    emit,
    flag,
    load_mode_config,
    output_target,
    render_table,
)
from minimode.sim.bench import BENCH_COLUMNS, time_estimators

app = typer.Typer(
    name="bench",
    help="Time estimators on reference samples (relative ordering only).",
    add_completion=False,
)


@app.callback(invoke_without_command=True)
def main(
    estimator: list[str] | None = typer.Option(None, "--estimator", "-e", help="Estimator (repeatable)."),
    dist: list[str] | None = typer.Option(None, "--dist", help="Distribution (repeatable)."),
    n: list[int] | None = typer.Option(None, "--n", help="Sample size (repeatable)."),
    calls: int | None = typer.Option(None, "--calls", "--reps", help="Timed calls per cell."),
    seed: int | None = typer.Option(None, "--seed", help="Master seed."),
    fmt: str | None = typer.Option(None, "--format", help="csv or json."),
    out: Path | None = typer.Option(None, "--out", "-o", help="Output file (stdout if omitted)."),
    config_spec: list[str] | None = typer.Option(
        None, "--config", "-c", help="Config file(s) or key=value overrides."
    ),
) -> None:
    """Time every estimator on the same samples for each (distribution, n)."""
    with cli_errors():
        config = load_mode_config(
            config_spec,
            {
                "run": {"seed": flag(seed), "format": flag(fmt)},
                "bench": {
                    "estimators": flag(estimator),
                    "distributions": flag(dist),
                    "sizes": flag(n),
                    "calls": flag(calls),
                },
            },
        )
        out = output_target(out, config)
        print_cli_banner(__version__, mode_label="bench")
        cfg = config.bench
        estimators = [bind_estimator(name, config, {}) for name in cfg.estimators]
        results = time_estimators(estimators, cfg.distributions, cfg.sizes, cfg.calls, config.run.seed)
        if out is not None:
            print_bench(results)
        emit(render_table([r.to_dict() for r in results], BENCH_COLUMNS, config.run.format, "results"), out)
