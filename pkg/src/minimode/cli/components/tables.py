"""Rich tables for study, curve, bootstrap, vertex and bench results."""

from __future__ import annotations

from collections.abc import Sequence

from rich.table import Table

from minimode.cli.console import format_number, get_console
from minimode.inference.bootstrap import BootstrapSummary
from minimode.robustness.sensitivity import SensitivityCurve
from minimode.sim.bench import BenchResult
from minimode.sim.study import StudyResult
from minimode.sim.vertex import VertexReport

console = get_console()


def print_study_results(results: Sequence[StudyResult]) -> None:
    if not results:
        return
    table = Table(title="Study", expand=False, show_edge=False)
    for col in ("Distribution", "n", "eps", "Estimator"):
        table.add_column(col, style="estimator" if col == "Estimator" else None)
    for col in ("Bias", "SE", "RMSE", "MC SE", "Reps"):
        table.add_column(col, justify="right")
    for r in results:
        table.add_row(
            r.distribution_id,
            str(r.n),
            f"{r.epsilon:g}",
            r.estimator_id,
            format_number(r.bias),
            format_number(r.std_error),
            format_number(r.rmse),
            format_number(r.mc_se, 4),
            str(r.replicates),
        )
    console.print()
    console.print(table)


def print_curve_summary(curve: SensitivityCurve) -> None:
    table = Table(title="Sensitivity curve", expand=False, show_edge=False)
    table.add_column("Quantity", style="bold")
    table.add_column("Value", justify="right")
    table.add_row("estimator", curve.estimator_id)
    table.add_row("distribution", curve.distribution_id)
    table.add_row("n", str(curve.n))
    table.add_row("center", format_number(curve.center, 4))
    table.add_row("rejection point", format_number(curve.rho, 4))
    table.add_row("gross-error sensitivity", format_number(curve.gamma, 4))
    if curve.excluded:
        table.add_row("excluded points", str(curve.excluded))
    console.print()
    console.print(table)


def print_bootstrap(summary: BootstrapSummary, skewness: float | None = None) -> None:
    table = Table(title="Bootstrap", expand=False, show_edge=False)
    table.add_column("Quantity", style="bold")
    table.add_column("Value", justify="right")
    table.add_row("estimate", format_number(summary.estimate))
    table.add_row("std error", format_number(summary.std_error))
    table.add_row("quartiles (BC)", f"{format_number(summary.q1)}, {format_number(summary.median_q)}, {format_number(summary.q3)}")
    table.add_row("z0", format_number(summary.z0, 4))
    table.add_row("resamples", f"{summary.b} ({summary.skipped} skipped)")
    if skewness is not None:
        table.add_row("modal skewness", f"{skewness:.1%}")
    console.print()
    console.print(table)


def print_vertex_reports(reports: Sequence[VertexReport]) -> None:
    if not reports:
        return
    table = Table(title="Vertex finding", expand=False, show_edge=False)
    table.add_column("Estimator", style="bold")
    table.add_column("Parameter")
    for col in ("Bias", "SD", "RMSE", "Within tol", "Events"):
        table.add_column(col, justify="right")
    for r in reports:
        table.add_row(
            r.estimator,
            f"{r.parameter}={r.best_value:g}",
            format_number(r.bias, 4),
            format_number(r.sd, 4),
            format_number(r.rmse, 4),
            f"{r.recovery:.1%}",
            str(r.events),
        )
    console.print()
    console.print(table)


def print_bench(results: Sequence[BenchResult]) -> None:
    if not results:
        return
    table = Table(title="Mean seconds per call", expand=False, show_edge=False)
    table.add_column("Estimator", style="bold")
    table.add_column("Distribution")
    table.add_column("n", justify="right")
    table.add_column("Seconds", justify="right")
    for r in sorted(results, key=lambda r: (r.distribution, r.n, r.mean_seconds)):
        table.add_row(r.estimator, r.distribution, str(r.n), f"{r.mean_seconds:.3e}")
    console.print()
    console.print(table)
