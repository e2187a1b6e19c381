"""`modal vertex`: tune weighted mode estimators on synthetic crossings."""

from __future__ import annotations

from pathlib import Path

import typer

from minimode import __version__
from minimode.cli.components import print_cli_banner, print_vertex_reports
from minimode.run.common import cli_errors, emit, flag, load_mode_config, output_target, render_table
from minimode.sim.streams import stable_tag, substream
from minimode.sim.vertex import VERTEX_COLUMNS, generate_events, vertex_study

app = typer.Typer(
    name="vertex",
    help="Primary-vertex finding with fsmw, histmw and epdfmw.",
    add_completion=False,
)


@app.callback(invoke_without_command=True)
def main(
    estimator: list[str] | None = typer.Option(
        None, "--estimator", "-e", help="fsmw, histmw or epdfmw (repeatable; default all)."
    ),
    events: int | None = typer.Option(None, "--events", help="Number of crossings (default 981)."),
    p: float | None = typer.Option(None, "--p", help="Fix the fsmw fraction instead of tuning."),
    bin_width: float | None = typer.Option(None, "--bin", help="Fix the histmw bin width."),
    h: float | None = typer.Option(None, "--h", help="Fix the epdfmw bandwidth."),
    seed: int | None = typer.Option(None, "--seed", help="Master seed."),
    fmt: str | None = typer.Option(None, "--format", help="csv or json."),
    out: Path | None = typer.Option(None, "--out", "-o", help="Output file (stdout if omitted)."),
    config_spec: list[str] | None = typer.Option(
        None, "--config", "-c", help="Config file(s) or key=value overrides."
    ),
) -> None:
    """Generate events, grid-search each estimator and report bias, SD and RMSE."""
    fixed = {"fsmw": p, "histmw": bin_width, "epdfmw": h}
    with cli_errors():
        config = load_mode_config(
            config_spec,
            {
                "run": {"seed": flag(seed), "format": flag(fmt)},
                "vertex": {
                    "events": flag(events),
                    "grids": {name: [value] for name, value in fixed.items() if value is not None},
                },
            },
        )
        out = output_target(out, config)
        print_cli_banner(__version__, mode_label="vertex")
        cfg = config.vertex
        names = estimator or list(cfg.grids)
        grids = {name: cfg.grids.get(name, []) for name in names}
        sample_events = generate_events(cfg, substream(config.run.seed, stable_tag("vertex")))
        reports = vertex_study(sample_events, grids, tolerance=cfg.tolerance)
        if out is not None:
            print_vertex_reports(reports)
        text = render_table([r.to_dict() for r in reports], VERTEX_COLUMNS, config.run.format, "reports")
        emit(text, out)
