"""Root CLI application for mini-mode.

Combines estimation, studies, sensitivity curves, bootstrap, vertex finding and
timing under one entry point.
"""

from __future__ import annotations

from pathlib import Path

import typer

from minimode import __version__
from minimode.utils.log import configure_logging

app = typer.Typer(
    name="modal",
    help=f"mini-mode (v{__version__}): half-sample mode and robust location estimators.",
    add_completion=False,
    invoke_without_command=True,
    no_args_is_help=True,
)


@app.callback()
def _callback(
    log_file: Path | None = typer.Option(None, "--log-file", help="Also write DEBUG logs here."),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Show DEBUG logs on the console."),
) -> None:
    configure_logging(verbose=verbose, log_file=log_file)


def _register_subcommands() -> None:
    from minimode.run.bench import app as bench_app
    from minimode.run.bootstrap import app as bootstrap_app
    from minimode.run.estimate import app as estimate_app
    from minimode.run.ssc import app as ssc_app
    from minimode.run.study import app as study_app
    from minimode.run.study import mstudy_app
    from minimode.run.vertex import app as vertex_app

    app.add_typer(estimate_app, name="estimate", help="Estimate the mode (or a scale) of a sample.")
    app.add_typer(study_app, name="study", help="Monte-Carlo contamination study.")
    app.add_typer(mstudy_app, name="mstudy", help="Huber M-estimator initialization study.")
    app.add_typer(ssc_app, name="ssc", help="Stylized sensitivity curve.")
    app.add_typer(bootstrap_app, name="bootstrap", help="Bootstrap summary and modal skewness.")
    app.add_typer(vertex_app, name="vertex", help="Synthetic primary-vertex finding.")
    app.add_typer(bench_app, name="bench", help="Estimator timing.")


_register_subcommands()
