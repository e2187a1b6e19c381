"""Reusable Rich CLI display components."""

from minimode.cli.components.banner import print_cli_banner
from minimode.cli.components.tables import (
    print_bench,
    print_bootstrap,
    print_curve_summary,
    print_study_results,
    print_vertex_reports,
)

__all__ = [
    "print_bench",
    "print_bootstrap",
    "print_cli_banner",
    "print_curve_summary",
    "print_study_results",
    "print_vertex_reports",
]
