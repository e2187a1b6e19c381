"""`modal study` and `modal mstudy`: contamination studies."""

from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

import typer
from rich.live import Live

from minimode import __version__
from minimode.cli.components import print_cli_banner, print_study_results
from minimode.run.common import (
    bind_estimator,
    cli_errors,
    emit,
    err_console,
    flag,
    load_mode_config,
    output_target,
    render_table,
)
from minimode.sim.progress import StudyProgressManager
from minimode.sim.study import STUDY_COLUMNS, StudyResult, run_m_study, run_study

app = typer.Typer(
    name="study",
    help="Bias, SE and RMSE of mode estimators on contaminated samples.",
    add_completion=False,
)
mstudy_app = typer.Typer(
    name="mstudy",
    help="RMSE of the Huber M-estimator under six initializations.",
    add_completion=False,
)


@contextmanager
def _live_progress(total: int) -> Iterator[StudyProgressManager]:
    progress = StudyProgressManager(total)
    with Live(progress.render_group, console=err_console, refresh_per_second=4, transient=True):
        yield progress


def _report(results: list[StudyResult], fmt: str, out: Path | None) -> None:
    if out is not None:
        print_study_results(results)
    emit(render_table([r.to_dict() for r in results], STUDY_COLUMNS, fmt, "results"), out)


def _run_overrides(seed, workers, strict, fmt) -> dict:
    return {"seed": flag(seed), "workers": flag(workers), "strict": flag(strict), "format": flag(fmt)}


@app.callback(invoke_without_command=True)
def main(
    estimator: list[str] | None = typer.Option(None, "--estimator", "-e", help="Estimator (repeatable)."),
    dist: list[str] | None = typer.Option(None, "--dist", help="normal, lognormal or pareto (repeatable)."),
    n: list[int] | None = typer.Option(None, "--n", help="Sample size (repeatable)."),
    eps: list[float] | None = typer.Option(None, "--eps", help="Contamination fraction (repeatable)."),
    reps: int | None = typer.Option(None, "--reps", help="Replicates per cell (at least 100)."),
    seed: int | None = typer.Option(None, "--seed", help="Master seed."),
    workers: int | None = typer.Option(None, "--workers", "-w", help="Parallel cells."),
    strict: bool | None = typer.Option(
        None, "--strict/--lenient", help="Abort on the first failed replicate."
    ),
    p: float | None = typer.Option(None, "--p", help="fsmw fraction or grenander power."),
    k: int | None = typer.Option(None, "--k", help="grenander spacing."),
    alpha: float | None = typer.Option(None, "--alpha", help="fsm window fraction."),
    fmt: str | None = typer.Option(None, "--format", help="csv or json."),
    out: Path | None = typer.Option(None, "--out", "-o", help="Output file (stdout if omitted)."),
    config_spec: list[str] | None = typer.Option(
        None, "--config", "-c", help="Config file(s) or key=value overrides."
    ),
) -> None:
    """Run every (distribution, n, eps) cell for every estimator."""
    with cli_errors():
        config = load_mode_config(
            config_spec,
            {
                "run": _run_overrides(seed, workers, strict, fmt),
                "study": {
                    "estimators": flag(estimator),
                    "distributions": flag(dist),
                    "sizes": flag(n),
                    "epsilons": flag(eps),
                    "replicates": flag(reps),
                },
            },
        )
        out = output_target(out, config)
        print_cli_banner(__version__, mode_label="study")
        study, run = config.study, config.run
        params = {"p": p, "k": k, "alpha": alpha}
        estimators = [bind_estimator(name, config, params) for name in study.estimators]
        total = len(study.distributions) * len(study.sizes) * len(study.epsilons)
        with _live_progress(total) as progress:
            results = run_study(
                estimators,
                study.distributions,
                study.sizes,
                study.epsilons,
                study.replicates,
                run.seed,
                workers=run.workers,
                strict=run.strict,
                progress=progress,
            )
        _report(results, run.format, out)


@mstudy_app.callback(invoke_without_command=True)
def mstudy(
    scenario: list[str] | None = typer.Option(
        None, "--scenario", help="Initialization a-f (repeatable)."
    ),
    dist: list[str] | None = typer.Option(None, "--dist", help="Distribution (repeatable)."),
    n: list[int] | None = typer.Option(None, "--n", help="Sample size (repeatable)."),
    eps: list[float] | None = typer.Option(None, "--eps", help="Contamination fraction (repeatable)."),
    reps: int | None = typer.Option(None, "--reps", help="Replicates per cell (at least 100)."),
    seed: int | None = typer.Option(None, "--seed", help="Master seed."),
    c: float | None = typer.Option(None, "--huber-c", help="Huber tuning constant (default 1.5)."),
    workers: int | None = typer.Option(None, "--workers", "-w", help="Parallel cells."),
    strict: bool | None = typer.Option(
        None, "--strict/--lenient", help="Abort on the first failed replicate."
    ),
    fmt: str | None = typer.Option(None, "--format", help="csv or json."),
    out: Path | None = typer.Option(None, "--out", "-o", help="Output file (stdout if omitted)."),
    config_spec: list[str] | None = typer.Option(
        None, "--config", "-c", help="Config file(s) or key=value overrides."
    ),
) -> None:
    """Run the M-estimator under each initialization scenario."""
    with cli_errors():
        config = load_mode_config(
            config_spec,
            {
                "run": _run_overrides(seed, workers, strict, fmt),
                "mstudy": {
                    "scenarios": flag(scenario),
                    "distributions": flag(dist),
                    "sizes": flag(n),
                    "epsilons": flag(eps),
                    "replicates": flag(reps),
                    "c": flag(c),
                },
            },
        )
        out = output_target(out, config)
        print_cli_banner(__version__, mode_label="mstudy")
        ms, run = config.mstudy, config.run
        total = len(ms.distributions) * len(ms.sizes) * len(ms.epsilons)
        with _live_progress(total) as progress:
            results = run_m_study(
                ms.scenarios,
                ms.distributions,
                ms.sizes,
                ms.epsilons,
                ms.replicates,
                run.seed,
                c=ms.c,
                workers=run.workers,
                strict=run.strict,
                progress=progress,
            )
        _report(results, run.format, out)
