"""Rich progress display for Monte-Carlo studies."""

from __future__ import annotations

import collections
from threading import Lock

from rich.console import Group
from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    SpinnerColumn,
    TaskID,
    TaskProgressColumn,
    TextColumn,
    TimeElapsedColumn,
)
from rich.table import Table


def _shorten(s: str, max_len: int) -> str:
    if len(s) <= max_len:
        return f"{s:<{max_len}}"
    return f"{'...' + s[-max_len + 3 :]:<{max_len}}"


class StudyProgressManager:
    """Thread-safe progress tracker for study cells.

    Renders an overall progress bar, a spinner per running cell and a table of
    finished cells grouped by distribution via Rich Live.
    """

    def __init__(self, total: int) -> None:
        self._lock = Lock()
        self._done_by_dist: dict[str, list[str]] = collections.defaultdict(list)
        self._excluded = 0
        self._spinner_tasks: dict[str, TaskID] = {}

        self._main_bar = Progress(
            SpinnerColumn(spinner_name="dots2"),
            TextColumn("[progress.description]{task.description} (excluded {task.fields[excluded]})"),
            BarColumn(),
            MofNCompleteColumn(),
            TaskProgressColumn(),
            TimeElapsedColumn(),
        )
        self._cell_bar = Progress(
            SpinnerColumn(spinner_name="dots2"),
            TextColumn("{task.fields[cell]}"),
            TimeElapsedColumn(),
        )
        self._main_task_id = self._main_bar.add_task("[cyan]Study cells", total=total, excluded=0)
        self.render_group = Group(self._main_bar, Table(), self._cell_bar)

    @property
    def n_completed(self) -> int:
        return sum(len(v) for v in self._done_by_dist.values())

    def _refresh_table(self) -> None:
        t = Table()
        t.add_column("Distribution")
        t.add_column("Cells", justify="right", style="bold cyan")
        t.add_column("Recent")
        with self._lock:
            for dist, cells in sorted(self._done_by_dist.items()):
                t.add_row(dist, str(len(cells)), _shorten(", ".join(reversed(cells)), 50))
        self.render_group.renderables[1] = t

    def on_cell_start(self, label: str) -> None:
        with self._lock:
            self._spinner_tasks[label] = self._cell_bar.add_task(
                description=label, total=None, cell=_shorten(label, 30)
            )

    def on_cell_end(self, label: str, distribution: str, excluded: int = 0) -> None:
        with self._lock:
            self._excluded += excluded
            self._done_by_dist[distribution].append(label.split(" ", 1)[-1])
            if label in self._spinner_tasks:
                try:
                    self._cell_bar.remove_task(self._spinner_tasks.pop(label))
                except KeyError:
                    pass
            self._main_bar.update(self._main_task_id, advance=1, excluded=self._excluded)
        self._refresh_table()


__all__ = ["StudyProgressManager"]
