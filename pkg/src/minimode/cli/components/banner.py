"""Startup banner for the long-running subcommands."""

from __future__ import annotations

from minimode import global_config_dir
from minimode.cli.console import get_err_console

_PROJECT_WORDMARK = r"""
           _       _                           _
 _ __ ___ (_)_ __ (_)      _ __ ___   ___   __| | ___
| '_ ` _ \| | '_ \| |_____| '_ ` _ \ / _ \ / _` |/ _ \
| | | | | | | | | | |_____| | | | | | (_) | (_| |  __/
|_| |_| |_|_|_| |_|_|     |_| |_| |_|\___/ \__,_|\___|
"""


def print_cli_banner(version: str, *, mode_label: str | None = None) -> None:
    """Wordmark, version and config location, on stderr so stdout stays machine-readable."""
    console = get_err_console()
    console.print(_PROJECT_WORDMARK, style="bold bright_blue", highlight=False)
    subtitle = f"v{version}"
    if mode_label:
        subtitle = f"{subtitle} | {mode_label}"
    console.print(f"[dim]{subtitle} | robust mode estimation[/dim]")
    console.print(f"User config dir: [bold green]{global_config_dir}[/bold green]")
    console.print(
        "[dim]Override with the [bold yellow]`MINIMODE_GLOBAL_CONFIG_DIR`[/bold yellow] env variable.[/dim]\n"
    )
