"""The `minimode` logger tree: rich console output on stderr, optional plain-text log file."""

import logging
from pathlib import Path

from rich.console import Console
from rich.logging import RichHandler

ROOT_NAME = "minimode"

# study and ssc workers log from pool threads
_FILE_FORMAT = "%(asctime)s %(threadName)s %(name)s %(levelname)s %(message)s"


def _console_handler() -> RichHandler:
    handler = RichHandler(
        console=Console(stderr=True),
        show_path=False,
        show_time=False,
        show_level=False,
        markup=True,
        rich_tracebacks=True,
    )
    handler.setLevel(logging.INFO)
    handler.setFormatter(logging.Formatter("%(message)s"))
    return handler


def _setup_root_logger() -> logging.Logger:
    root = logging.getLogger(ROOT_NAME)
    root.setLevel(logging.DEBUG)
    if not any(isinstance(h, RichHandler) for h in root.handlers):
        root.addHandler(_console_handler())
    return root


def configure_logging(*, verbose: bool = False, log_file: Path | str | None = None) -> None:
    """Apply the global CLI logging flags.

    `verbose` lowers the console threshold to DEBUG; `log_file` adds a DEBUG file handler
    (once per path).
    """
    if verbose:
        for handler in logger.handlers:
            if isinstance(handler, RichHandler):
                handler.setLevel(logging.DEBUG)
    if log_file is None:
        return
    path = Path(log_file).resolve()
    for handler in logger.handlers:
        if isinstance(handler, logging.FileHandler) and Path(handler.baseFilename) == path:
            return
    handler = logging.FileHandler(path)
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(logging.Formatter(_FILE_FORMAT))
    logger.addHandler(handler)
    logger.debug("Logging to '%s'", path)


logger = _setup_root_logger()

__all__ = ["ROOT_NAME", "configure_logging", "logger"]
